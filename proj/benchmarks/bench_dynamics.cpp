#include <benchmark/benchmark.h>

#include "ncl/basin.hpp"
#include "ncl/embed_harness.hpp"

using namespace ncl;

static void BM_ExtendedMapPlateau(benchmark::State& state) {
  const ExtendedMap ext(MachineSpec::eraser());
  const IVec3 x = ivec3_point({Dyadic(4), Dyadic(0), Dyadic(1)});
  for (auto _ : state) {
    benchmark::DoNotOptimize(ext.eval(x));
  }
}
BENCHMARK(BM_ExtendedMapPlateau);

static void BM_OrbitStep(benchmark::State& state) {
  CounterRng rng(5);
  const Perturbation3D q = Perturbation3D::sample(
      rng, Dyadic::from_double(0.2), {{Dyadic(1), Dyadic(0), Dyadic(1)}}, true);
  const PerturbedMap g(ExtendedMap(MachineSpec::looper()), q);
  IVec3 x = ivec3_point({Dyadic(0), Dyadic(0), Dyadic(1)});
  for (auto _ : state) {
    x = g.eval(x);
    benchmark::DoNotOptimize(x);
  }
}
BENCHMARK(BM_OrbitStep);

static void BM_FlowUnitTime(benchmark::State& state) {
  const FieldPtr f = make_radial_oracle_field();
  for (auto _ : state) {
    FlowIntegrator fi(f, {0.6, 0.2}, {});
    fi.advance_to(1.0);
    benchmark::DoNotOptimize(fi.x());
  }
}
BENCHMARK(BM_FlowUnitTime);

static void BM_ClassifyPoint(benchmark::State& state) {
  const FieldPtr f = make_radial_oracle_field();
  const PhasePortrait portrait = extract_portrait(*f, 16);
  const std::size_t target = portrait.sink_indices().at(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        classify_point({0.6, 0.3}, *f, portrait, target, {}, 64));
  }
}
BENCHMARK(BM_ClassifyPoint);
