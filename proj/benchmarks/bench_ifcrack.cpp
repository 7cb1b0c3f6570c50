#include <benchmark/benchmark.h>

#include <numbers>

#include "ifcrack/kernel.hpp"
#include "ifcrack/perturbation.hpp"
#include "ifcrack/weightfn.hpp"

using namespace ifcrack;

namespace {

void BM_KernelFactors(benchmark::State& state) {
  const KernelFactors k(2.0);
  double xi = 1e-3;
  for (auto _ : state) {
    benchmark::DoNotOptimize(k.b_plus(xi));
    xi = xi < 1e3 ? xi * 1.37 : 1e-3;
  }
}
BENCHMARK(BM_KernelFactors);

void BM_PhaseDirect(benchmark::State& state) {
  const numerics::QuadratureSpec spec;
  for (auto _ : state) benchmark::DoNotOptimize(KernelFactors::phase_direct(0.7, spec));
}
BENCHMARK(BM_PhaseDirect)->Unit(benchmark::kMicrosecond);

void BM_Sigma0Point(benchmark::State& state) {
  const auto load = CrackLoad::point_triple(1.0, 1.0, 0.75);
  const auto m = material_from_dimensionless(0.0, 1.0, 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(sigma0(load, m).sigma0);
}
BENCHMARK(BM_Sigma0Point)->Unit(benchmark::kMillisecond);

void BM_Sigma0Smooth(benchmark::State& state) {
  const auto load = CrackLoad::smooth_exponential();
  const auto m = material_from_dimensionless(0.5, 0.1, 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(sigma0(load, m).sigma0);
}
BENCHMARK(BM_Sigma0Smooth)->Unit(benchmark::kMillisecond);

void BM_BettiBasis(benchmark::State& state) {
  const PerturbationSolver solver(CrackLoad::smooth_exponential(),
                                  material_from_dimensionless(0.0, 1.0, 1.0));
  const Point Y{0.0, 1.0};
  for (auto _ : state) benchmark::DoNotOptimize(solver.betti_basis(Y).D);
}
BENCHMARK(BM_BettiBasis)->Unit(benchmark::kMillisecond);

void BM_GradientU0(benchmark::State& state) {
  const PerturbationSolver solver(CrackLoad::smooth_exponential(),
                                  material_from_dimensionless(0.0, 1.0, 1.0));
  const Point Y{0.5, 0.8};
  for (auto _ : state) benchmark::DoNotOptimize(solver.unperturbed().grad_u0(Y).gx);
}
BENCHMARK(BM_GradientU0)->Unit(benchmark::kMillisecond);

void BM_DeltaSigma0(benchmark::State& state) {
  const PerturbationSolver solver(CrackLoad::smooth_exponential(),
                                  material_from_dimensionless(0.0, 1.0, 1.0));
  InclusionSpec inc;
  inc.phi = std::numbers::pi / 2.0;
  for (auto _ : state) benchmark::DoNotOptimize(solver.evaluate(inc).delta_sigma0);
}
BENCHMARK(BM_DeltaSigma0)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
