#include <benchmark/benchmark.h>

#include "ncl/dovetail.hpp"
#include "ncl/pr_series.hpp"

using namespace ncl;

namespace {
EnumerationPrefix wide_prefix() {
  return EnumerationPrefix::from_values(
      {7, 11, 3, 16, 9, 22, 5, 18, 27, 13, 31, 2, 46, 38, 24, 53, 61},
      "synthetic");
}
}  // namespace

static void BM_PrSeriesEval(benchmark::State& state) {
  const auto prefix = wide_prefix();
  const Interval x(Dyadic::from_double(3.05));
  for (auto _ : state) {
    benchmark::DoNotOptimize(pr_f_eval(x, 4, prefix));
  }
}
BENCHMARK(BM_PrSeriesEval);

static void BM_DovetailToy(benchmark::State& state) {
  const ToyFamily toy;
  for (auto _ : state) {
    benchmark::DoNotOptimize(dovetail_enumerate(toy, state.range(0)));
  }
}
BENCHMARK(BM_DovetailToy)->Arg(1000)->Arg(100000);

static void BM_DerivativeHarnessTrial(benchmark::State& state) {
  const RobustSeries series = RobustSeries::make(wide_prefix());
  const Dyadic scale = Dyadic::from_double(0.9 / 2.5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(robust_derivative_harness(series, 1, scale, 7));
  }
}
BENCHMARK(BM_DerivativeHarnessTrial);
