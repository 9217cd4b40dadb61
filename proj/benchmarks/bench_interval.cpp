#include <benchmark/benchmark.h>

#include "ncl/bump.hpp"
#include "ncl/interval.hpp"

using namespace ncl;

static void BM_IntervalMul(benchmark::State& state) {
  const Interval a(Dyadic::from_double(1.234567), Dyadic::from_double(1.234568));
  const Interval b(Dyadic::from_double(-0.75), Dyadic::from_double(-0.749999));
  for (auto _ : state) {
    benchmark::DoNotOptimize(a * b);
  }
}
BENCHMARK(BM_IntervalMul);

static void BM_ExpPoint(benchmark::State& state) {
  const Dyadic x = Dyadic::from_double(-0.333333);
  const std::size_t prec = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(exp_point(x, prec));
  }
}
BENCHMARK(BM_ExpPoint)->Arg(64)->Arg(128)->Arg(256);

static void BM_Phi(benchmark::State& state) {
  const Interval x(Dyadic::from_double(-0.5));
  for (auto _ : state) {
    benchmark::DoNotOptimize(phi(x, 96));
  }
}
BENCHMARK(BM_Phi);

static void BM_PhiPrime(benchmark::State& state) {
  const Interval x(Dyadic::from_double(-0.5));
  for (auto _ : state) {
    benchmark::DoNotOptimize(phi_prime(x, 96));
  }
}
BENCHMARK(BM_PhiPrime);

BENCHMARK_MAIN();
