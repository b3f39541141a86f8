#include <aniso/energy.hpp>

#include <shapes.hpp>

#include <benchmark/benchmark.h>

namespace {

using namespace aniso;

void BM_phi_windowed(benchmark::State& state) {
  testing::Rng rng(1);
  const PolygonalSet e({testing::random_star(rng, static_cast<std::size_t>(state.range(0)), {0, 0}, 0.5, 2.0)});
  const Window w = Window::disk({0.3, 0.2}, 1.2);
  const auto I = Integrand::ellipse(1.0, 0.2, 3.0);
  for (auto _ : state) benchmark::DoNotOptimize(phi_total(e, w, I));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_phi_windowed)->RangeMultiplier(4)->Range(16, 4096);

void BM_phi_breakdown(benchmark::State& state) {
  testing::Rng rng(2);
  const PolygonalSet e({testing::random_star(rng, static_cast<std::size_t>(state.range(0)), {0, 0}, 0.5, 2.0)});
  const Window w = Window::polygon(testing::regular_polygon(12, {0, 0}, 1.5));
  const auto I = Integrand::p_norm(3.0);
  for (auto _ : state) benchmark::DoNotOptimize(phi(e, w, I).total);
}
BENCHMARK(BM_phi_breakdown)->RangeMultiplier(4)->Range(16, 4096);

}  // namespace
