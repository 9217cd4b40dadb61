#pragma once

#include "ncl/planar_field.hpp"

namespace ncl {

struct IntegrateOptions {
  double tol = 1e-9;           // local error target per unit time
  double max_step = 0.25;
  double min_step = 1e-9;
  double domain_margin = 1.05; // exit threshold relative to the domain radius
};

// Adaptive RK45 (Fehlberg) with a running divergence budget: each accepted
// step's local error estimate is amplified by e^{L (t_end - t)} with the
// field's certified Lipschitz bound, the standard worst-case propagation of
// initial-condition error. The budget is a transparently pessimistic
// report, not a validated enclosure; the interval mode below provides the
// latter for short horizons.
class FlowIntegrator {
 public:
  FlowIntegrator(FieldPtr field, const DVec2& x0, IntegrateOptions opt = {});

  double t() const { return t_; }
  const DVec2& x() const { return x_; }
  double error_budget() const { return budget_; }
  std::size_t steps_taken() const { return steps_; }

  // Throws DomainExit / ToleranceUnachievable.
  void advance_to(double t_target);

 private:
  bool try_step(double h, DVec2* out, double* err) const;

  FieldPtr field_;
  DVec2 x_;
  double t_ = 0;
  double h_ = 1e-3;
  double budget_ = 0;
  double lipschitz_ = 0;
  std::size_t steps_ = 0;
  IntegrateOptions opt_;
};

struct TrajectorySample {
  double t;
  DVec2 x;
  double error_bound;
};

struct Trajectory {
  std::vector<TrajectorySample> samples;
  bool domain_exit = false;
  double exit_t = 0;
};

// Samples the flow at multiples of sample_dt up to t_end; a domain exit is
// recorded in the result instead of thrown.
Trajectory integrate_flow(FieldPtr field, const DVec2& x0, double t_end,
                          double sample_dt, IntegrateOptions opt = {});

struct ValidatedOptions {
  long step_log2 = -10;   // step h = 2^step_log2 (exact dyadic)
  std::size_t prec_bits = 64;
  int max_inflate = 40;
  double width_limit = 1.0;
};

// Validated enclosure of the time-t_end flow map over the box X0, by the
// first-order Taylor step with rigorous remainder
//   x(t+h) in X + h F(X) + h^2/2 (DF.F)(A)
// where A is a self-consistent a-priori box for the step. Throws
// ToleranceUnachievable when no a-priori box can be certified or the
// enclosure width exceeds width_limit.
IVec2 validated_flow_enclosure(const SmoothField2& field, const IVec2& x0,
                               double t_end, ValidatedOptions opt = {});

}  // namespace ncl
