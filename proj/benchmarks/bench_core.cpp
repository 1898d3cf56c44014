#include "dunkl/grid.hpp"
#include "dunkl/operators.hpp"
#include "dunkl/special.hpp"

#include <benchmark/benchmark.h>

#include <cmath>

namespace {

void BM_BesselNormalized(benchmark::State& state) {
  const dunkl::NormalizedBesselJ j(state.range(0) / 10.0 - 0.5);
  double z = 0.0;
  for (auto _ : state) {
    z += 0.37;
    if (z > 200.0) z -= 200.0;
    benchmark::DoNotOptimize(j(z));
  }
}
BENCHMARK(BM_BesselNormalized)->Arg(5)->Arg(10)->Arg(25);

void BM_EngineConstruction(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const dunkl::Grid1D g{8.0, n};
  for (auto _ : state) {
    dunkl::DunklEngine1D engine(g, 0.5);
    benchmark::DoNotOptimize(engine.mehta_constant());
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_EngineConstruction)->Arg(128)->Arg(256)->Arg(512)->Complexity();

void BM_Transform(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const dunkl::Grid1D g{8.0, n};
  const dunkl::DunklEngine1D engine(g, 0.5);
  const auto f = dunkl::GridFunction1D::sample(
      g, 0.5, [](double x) { return std::exp(-x * x / 2.0); });
  for (auto _ : state) benchmark::DoNotOptimize(engine.transform(f));
  state.SetComplexityN(n);
}
BENCHMARK(BM_Transform)->Arg(128)->Arg(256)->Arg(512)->Arg(1024)->Complexity();

void BM_RieszPotential(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const dunkl::Grid1D g{8.0, n};
  const dunkl::DunklEngine1D engine(g, 1.0);
  const auto f = dunkl::GridFunction1D::sample(
      g, 1.0, [](double x) { return std::exp(-x * x / 2.0); });
  for (auto _ : state) benchmark::DoNotOptimize(engine.riesz_potential(f, 0.5));
}
BENCHMARK(BM_RieszPotential)->Arg(256)->Arg(512);

void BM_FractionalMaximalPoint(benchmark::State& state) {
  const dunkl::Grid1D g{8.0, 256};
  const dunkl::DunklEngine1D engine(g, 0.5);
  const auto f = dunkl::GridFunction1D::sample(
      g, 0.5, [](double x) { return std::abs(x) < 1.0 ? 1.0 : 0.0; });
  for (auto _ : state)
    benchmark::DoNotOptimize(engine.fractional_maximal(f, 0.5, 0.7, 32));
}
BENCHMARK(BM_FractionalMaximalPoint);

void BM_WeightedNorm(benchmark::State& state) {
  const dunkl::Grid1D g{8.0, 1024};
  const auto f = dunkl::GridFunction1D::sample(
      g, 0.5, [](double x) { return std::exp(-x * x / 2.0); });
  for (auto _ : state)
    benchmark::DoNotOptimize(dunkl::weighted_lp_norm(f, 2.0, 0.3));
}
BENCHMARK(BM_WeightedNorm);

}  // namespace

BENCHMARK_MAIN();
