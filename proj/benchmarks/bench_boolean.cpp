#include <aniso/boolean.hpp>

#include <shapes.hpp>

#include <benchmark/benchmark.h>

namespace {

using namespace aniso;

void BM_set_difference(benchmark::State& state) {
  testing::Rng rng(5);
  const auto n = static_cast<std::size_t>(state.range(0));
  const PolygonalSet a({testing::random_star(rng, n, {0, 0}, 0.5, 2.0)});
  const PolygonalSet b({testing::random_star(rng, n, {0.4, 0.3}, 0.5, 2.0)});
  for (auto _ : state) benchmark::DoNotOptimize(set_difference(a, b).area());
}
BENCHMARK(BM_set_difference)->RangeMultiplier(4)->Range(8, 256)->Unit(benchmark::kMicrosecond);

void BM_set_union(benchmark::State& state) {
  testing::Rng rng(6);
  const auto n = static_cast<std::size_t>(state.range(0));
  const PolygonalSet a({testing::random_star(rng, n, {0, 0}, 0.5, 2.0)});
  const PolygonalSet b({testing::random_star(rng, n, {0.4, 0.3}, 0.5, 2.0)});
  for (auto _ : state) benchmark::DoNotOptimize(set_union(a, b).area());
}
BENCHMARK(BM_set_union)->RangeMultiplier(4)->Range(8, 256)->Unit(benchmark::kMicrosecond);

}  // namespace
