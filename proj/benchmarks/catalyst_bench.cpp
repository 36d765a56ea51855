#include <vector>

#include <benchmark/benchmark.h>

#include "catalyst/complexity.hpp"
#include "catalyst/instance.hpp"
#include "catalyst/linalg.hpp"
#include "catalyst/ppa.hpp"
#include "catalyst/solvers.hpp"

namespace {

using namespace catalyst;

void BM_EigSym(benchmark::State& state) {
  const LinearSystemInstance inst = generate(state.range(0), 100.0, 1);
  for (auto _ : state) benchmark::DoNotOptimize(eig_sym(SymMatrix(inst.a.entries())));
}
BENCHMARK(BM_EigSym)->Arg(50)->Arg(100)->Arg(200)->Unit(benchmark::kMillisecond);

void BM_Generate(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(generate(state.range(0), 500.0, 1235));
}
BENCHMARK(BM_Generate)->Arg(100)->Unit(benchmark::kMillisecond);

void BM_CatalystSolve(benchmark::State& state) {
  const double kappa = static_cast<double>(state.range(0));
  const LinearSystemInstance inst = generate(100, kappa, 7);
  const Vector x0 = Vector::Zero(100);
  for (auto _ : state) benchmark::DoNotOptimize(catalyst_solve(inst, x0, 0.1, 5.0));
}
BENCHMARK(BM_CatalystSolve)->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond);

void BM_SweepC(benchmark::State& state) {
  std::vector<double> cs;
  for (int c = 2; c <= 19; ++c) cs.push_back(c);
  for (auto _ : state)
    benchmark::DoNotOptimize(sweep_c(20.0, 1.0, 10.0, 0.1, cs, SolverModel::costa));
}
BENCHMARK(BM_SweepC);

void BM_WarmstartCurve(benchmark::State& state) {
  WarmStartConfig config;
  config.kappa_values = {100.0, 200.0, 300.0, 400.0, 500.0};
  config.gd_steps = {200, 500, 1000};
  for (auto _ : state) benchmark::DoNotOptimize(warmstart_curve(config));
}
BENCHMARK(BM_WarmstartCurve)->Unit(benchmark::kMillisecond);

}  // namespace
