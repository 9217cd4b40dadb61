#pragma once

#include "ncl/portrait.hpp"

namespace ncl {

// Rational-ball certificate of basin membership: the forward image of the
// center at integer time entry_time lands in the target sink square with
// margin alpha, and radius * e^{L * entry_time} < alpha, so the whole ball
// flows into the invariant square.
struct CertifiedBall {
  DVec2 center;
  double radius = 0;
  double entry_time = 0;
  std::size_t sink = 0;
};

enum class Verdict : std::uint8_t {
  InWs,            // basin of the target sink
  InWA,            // basin of another sink or attracting cycle
  ExcludedB,       // inside the source/repelling exclusion region B
  ExcludedGamma,   // within the fattened saddle arcs
  Unresolved,      // race budget exhausted
  Outside          // off the domain disk
};

char verdict_code(Verdict v);

struct ClassifyOutcome {
  Verdict verdict = Verdict::Unresolved;
  std::size_t region = 0;   // square or annulus id for InWA
  int status = 0;           // halting status: 1 = ball, 2 = square, 3 = annulus
  double time = 0;          // integer race round that fired
  bool exclusivity_violation = false;
};

// The classification race: at integer times t = 1, 2, ... the three checks
// advance together (one unit of the ball scan plus the two trajectory
// tests); the first certificate decides. Entering the target sink's own
// square is recorded as a status-1 (W_s) event: it is the certificate from
// which a ball at x itself would be enumerated. All three checks are
// evaluated every round and a round that fires both a W_s and a W_A signal
// is flagged as an exclusivity violation.
ClassifyOutcome classify_point(const DVec2& x, const SmoothField2& field,
                               const PhasePortrait& portrait,
                               std::size_t target_sink,
                               const std::vector<CertifiedBall>& balls,
                               double t_budget);

// Grid-driven enumeration of W_s as certified balls, in deterministic
// row-major grid order. Trajectories are numerical (fast mode); the ball
// radii follow the e^{Lt} argument with the field's certified Lipschitz
// bound.
std::vector<CertifiedBall> enumerate_basin(const SmoothField2& field,
                                           const PhasePortrait& portrait,
                                           std::size_t target_sink,
                                           unsigned level,
                                           std::size_t max_points,
                                           double t_budget);

// Grid points of G_l inside the radius-R disk lying in one of the first l
// balls of the region enumeration.
std::vector<DVec2> grid_dense_sequence(
    const std::vector<std::pair<DVec2, double>>& region_balls, unsigned l,
    double domain_radius);

struct BasinGrid {
  unsigned level = 0;
  unsigned k = 0;
  double domain_radius = 0;
  long half_cells = 0;  // indices -H..H per axis
  std::size_t target_sink = 0;  // 1-based request
  bool empty_result = false;
  std::vector<Verdict> cells;   // (2H+1)^2 row-major, y outer, x inner

  std::size_t inside = 0, in_ws = 0, in_wa = 0, excluded_b = 0,
              excluded_gamma = 0, unresolved = 0;
  std::size_t exclusivity_violations = 0;
  double unresolved_fraction = 0;
  double claimed_hausdorff = 0;  // 1/k by construction

  std::size_t index(long ix, long iy) const {
    const long H = half_cells;
    return static_cast<std::size_t>((iy + H) * (2 * H + 1) + (ix + H));
  }
  DVec2 point_of(long ix, long iy) const {
    const double s = 1.0 / static_cast<double>(1u << level);
    return {ix * s, iy * s};
  }
};

// The full pipeline: portrait extraction, exclusion of B and the fattened
// saddle arcs, basin-ball enumeration, and the classification race over
// every grid cell of G_level in the domain disk. sink_index is 1-based
// (Lemma-2 style); 0 or > sink count yields the empty result. Cycle
// certification failures surface as NotStructurallyStable.
BasinGrid compute_basin(const SmoothField2& field, std::size_t sink_index,
                        unsigned k, unsigned level, double t_budget = 64);

}  // namespace ncl
