#include <aniso/descent.hpp>

#include <shapes.hpp>

#include <cmath>
#include <numbers>

#include <benchmark/benchmark.h>

namespace {

using namespace aniso;

PolygonalSet radial(std::size_t n, std::uint64_t seed) {
  testing::Rng rng(seed);
  std::vector<Vec2> v;
  for (std::size_t i = 0; i < n; ++i) {
    const double a = 2 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(n);
    const double r = testing::uniform(rng, 0.3, 1.6);
    v.push_back({r * std::cos(a), r * std::sin(a)});
  }
  return PolygonalSet({v});
}

void BM_find_replaceable_arc(benchmark::State& state) {
  const PolygonalSet e = radial(static_cast<std::size_t>(state.range(0)), 3);
  const Window w = Window::disk({0.2, 0.1}, 1.0);
  DescentParams p;
  p.max_arc_edges = static_cast<std::size_t>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(find_replaceable_arc(e, w, Integrand::euclidean(), p).best.has_value());
}
BENCHMARK(BM_find_replaceable_arc)->ArgsProduct({{16, 64, 256}, {4, 16}})->Unit(benchmark::kMicrosecond);

void BM_descend(benchmark::State& state) {
  const PolygonalSet e = radial(static_cast<std::size_t>(state.range(0)), 4);
  const Window w = Window::disk({0.2, 0.1}, 1.0);
  DescentParams p;
  p.gain_tol = 1e-14;
  std::size_t steps = 0;
  for (auto _ : state) {
    const auto res = descend(e, w, Integrand::ellipse(1.0, 0.0, 4.0), p);
    steps = res.trace.steps.size();
    benchmark::DoNotOptimize(res.trace.final_energy);
  }
  state.counters["steps"] = static_cast<double>(steps);
}
BENCHMARK(BM_descend)->Arg(16)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);

}  // namespace
