#include <benchmark/benchmark.h>

#include "fucik/geometry.hpp"
#include "fucik/one_dim.hpp"
#include "fucik/packing.hpp"
#include "fucik/parallel.hpp"

namespace {

using namespace fucik;

const Domain& linked_domain() {
  static Domain dom(make_linked_balls(1.0, 2.0, 0.5));
  return dom;
}

void BM_ClearanceBall(benchmark::State& state) {
  Domain dom(make_ball({0, 0}, 1));
  double x = 0.0;
  for (auto _ : state) {
    x += 1e-7;
    benchmark::DoNotOptimize(dom.clearance({0.3 * std::sin(x), 0.2}));
  }
}
BENCHMARK(BM_ClearanceBall);

void BM_ClearanceLinked(benchmark::State& state) {
  const Domain& dom = linked_domain();
  double x = 0.0;
  for (auto _ : state) {
    x += 1e-7;
    benchmark::DoNotOptimize(dom.clearance({3.5 + std::sin(x), 0.1}));
  }
}
BENCHMARK(BM_ClearanceLinked);

void BM_TwoBallSquare(benchmark::State& state) {
  set_max_threads(1);
  Domain dom(make_rectangle({0, 0}, {1, 1}));
  SolverOptions opts;
  opts.starts = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(two_ball_rho(dom, 1.0, 1e-4, opts).rho);
}
BENCHMARK(BM_TwoBallSquare)->Arg(8)->Arg(32)->Unit(benchmark::kMillisecond);

void BM_InradiusLinked(benchmark::State& state) {
  set_max_threads(1);
  const Domain& dom = linked_domain();
  for (auto _ : state)
    benchmark::DoNotOptimize(inradius(dom, 1e-4).radius);
}
BENCHMARK(BM_InradiusLinked)->Unit(benchmark::kMillisecond);

void BM_PiP(benchmark::State& state) {
  double p = 2.0;
  for (auto _ : state) {
    p += 1e-9;
    benchmark::DoNotOptimize(pi_p(p));
  }
}
BENCHMARK(BM_PiP)->Unit(benchmark::kMicrosecond);

void BM_SinP(benchmark::State& state) {
  SinP trig(12.0);
  double x = 0.0;
  for (auto _ : state) {
    x += 1e-3;
    benchmark::DoNotOptimize(trig(x));
  }
}
BENCHMARK(BM_SinP)->Unit(benchmark::kMicrosecond);

void BM_ViscosityResidual(benchmark::State& state) {
  const GridFunction1D u = GridFunction1D::sample(
      [](double x) { return eigenfunction_infinity(0.4, x); }, 1280);
  const FucikPair pair = eigenpair_infinity(0.4);
  for (auto _ : state)
    benchmark::DoNotOptimize(viscosity_residual(u, pair).max_violation);
}
BENCHMARK(BM_ViscosityResidual)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
