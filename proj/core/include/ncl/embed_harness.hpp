#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ncl/perturbation.hpp"

namespace ncl {

// Orbit of j+1 enclosures under g; throws WidthBlowup once an enclosure is
// wider than 1 (the result would be uninformative).
std::vector<IVec3> iterate(const PerturbedMap& g, const IVec3& x0,
                           std::size_t j, std::size_t prec_bits = 64);

struct TrackingTrial {
  std::uint64_t trial = 0;
  std::string machine;
  double worst_distance = 0;
  std::size_t violations = 0;
};

struct Prop1Report {
  double delta = 0, epsilon = 0;
  std::uint64_t trials = 0, j_max = 0, seed = 0;
  std::size_t violations = 0;
  double worst_distance = 0;
  std::vector<TrackingTrial> per_trial;
  bool clean() const { return violations == 0; }
};

// Samples perturbations with certified C0 norm <= delta and starts
// ||x0_bar - x0|| <= epsilon over random configurations, then checks the
// tracking inequality ||g^[j](x0_bar) - f_M^[j](x0)|| <= epsilon for every
// j <= j_max. Requires 0 < delta < epsilon < 1/2 and epsilon <= 1/4 (the
// plateau radius). Violations are reported, not thrown.
Prop1Report proposition1_harness(const MachineSpec& machine, double delta,
                                 double epsilon, std::uint64_t trials,
                                 std::size_t j_max, std::uint64_t seed);

struct ContractionReport {
  double theta = 0, lambda = 0;
  std::uint64_t samples = 0, seed = 0;
  std::size_t violations = 0;
  double worst_quotient = 0;
  bool clean() const { return violations == 0; }
};

// Samples x in the sup-ball B(x0, 1/4) across random configurations x0 and
// checks ||g(x) - g(x0)|| <= (theta + lambda) ||x - x0||.
ContractionReport contraction_check(const PerturbedMap& g,
                                    std::uint64_t samples, std::uint64_t seed);

struct SinkLocation {
  DyVec3 point;          // midpoint estimate of s_g
  Dyadic error_bound;    // certified ||point - s_g||
  Dyadic dist_to_halt;   // certified bound for ||s - s_g||, s = (0,0,0)
  Dyadic residual;       // upper bound of ||g(point) - point||
  bool k_certified = false;
  std::uint64_t k = 0;
};

// Banach fixed-point iteration from s = (0,0,0). Requires theta + lambda < 1
// and a self-map certificate for the 1/4-ball; the unique fixed point s_g in
// that ball is located with certified error < 1/k when achievable.
SinkLocation sink_locate(const PerturbedMap& g, std::uint64_t k,
                         std::size_t prec_bits = 64);

struct BasinVsHalting {
  bool attracted = false;            // entered B(s_g, epsilon/5)
  std::size_t step = 0;              // entry step when attracted
  double min_distance = 0;           // certified lower bound over the horizon
};

// Iterates g from the encoded configuration and reports the first step at
// which the orbit certifiably enters B(s_g, epsilon/5). A negative answer
// is only "not attracted within the horizon": it is never a certificate of
// non-halting.
BasinVsHalting basin_vs_halting(const PerturbedMap& g, const Configuration& c,
                                std::size_t horizon, const Dyadic& epsilon,
                                std::size_t prec_bits = 64);

}  // namespace ncl
