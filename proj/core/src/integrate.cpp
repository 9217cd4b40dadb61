#include "ncl/integrate.hpp"

#include <cmath>

#include "ncl/geometry.hpp"

namespace ncl {

FlowIntegrator::FlowIntegrator(FieldPtr field, const DVec2& x0,
                               IntegrateOptions opt)
    : field_(std::move(field)), x_(x0), opt_(opt) {
  lipschitz_ = field_->lipschitz_bound();
  h_ = opt_.max_step / 8;
}

bool FlowIntegrator::try_step(double h, DVec2* out, double* err) const {
  const auto f = [&](const DVec2& p) { return field_->eval_d(p); };
  const DVec2 k1 = f(x_);
  const DVec2 k2 = f(x_ + (h * 0.25) * k1);
  const DVec2 k3 = f(x_ + h * ((3.0 / 32) * k1 + (9.0 / 32) * k2));
  const DVec2 k4 = f(x_ + h * ((1932.0 / 2197) * k1 + (-7200.0 / 2197) * k2 +
                               (7296.0 / 2197) * k3));
  const DVec2 k5 = f(x_ + h * ((439.0 / 216) * k1 + (-8.0) * k2 +
                               (3680.0 / 513) * k3 + (-845.0 / 4104) * k4));
  const DVec2 k6 =
      f(x_ + h * ((-8.0 / 27) * k1 + 2.0 * k2 + (-3544.0 / 2565) * k3 +
                  (1859.0 / 4104) * k4 + (-11.0 / 40) * k5));
  const DVec2 x5 =
      x_ + h * ((16.0 / 135) * k1 + (6656.0 / 12825) * k3 +
                (28561.0 / 56430) * k4 + (-9.0 / 50) * k5 + (2.0 / 55) * k6);
  const DVec2 x4 = x_ + h * ((25.0 / 216) * k1 + (1408.0 / 2565) * k3 +
                             (2197.0 / 4104) * k4 + (-1.0 / 5) * k5);
  const double e = std::max(std::abs(x5[0] - x4[0]), std::abs(x5[1] - x4[1]));
  *out = x5;
  *err = e;
  return e <= opt_.tol * h;
}

void FlowIntegrator::advance_to(double t_target) {
  const double limit = field_->domain_radius() * opt_.domain_margin;
  while (t_ < t_target) {
    double h = std::min({h_, t_target - t_, opt_.max_step});
    DVec2 next;
    double err = 0;
    while (true) {
      if (try_step(h, &next, &err)) break;
      h *= 0.5;
      if (h < opt_.min_step)
        throw ToleranceUnachievable("step size underflow at t=" +
                                    std::to_string(t_));
    }
    // Budget: previous error amplified over this step plus the new local
    // error and a float-noise allowance. Clamped: anything near the clamp
    // means "no useful bound at this horizon".
    budget_ = std::min(1e30, budget_ * std::exp(std::min(700.0, lipschitz_ * h)) +
                                 err + 1e-15 * (1 + norm(next)));
    x_ = next;
    t_ += h;
    ++steps_;
    if (norm(x_) > limit) throw DomainExit(t_);
    const double grow =
        err > 0 ? 0.9 * std::pow(opt_.tol * h / err, 0.2) : 2.0;
    h_ = std::min(opt_.max_step, h * std::max(0.5, std::min(2.5, grow)));
  }
}

Trajectory integrate_flow(FieldPtr field, const DVec2& x0, double t_end,
                          double sample_dt, IntegrateOptions opt) {
  Trajectory tr;
  FlowIntegrator fi(std::move(field), x0, opt);
  tr.samples.push_back({0.0, x0, 0.0});
  const std::size_t n = static_cast<std::size_t>(std::ceil(t_end / sample_dt));
  for (std::size_t i = 1; i <= n; ++i) {
    const double t = std::min(t_end, i * sample_dt);
    try {
      fi.advance_to(t);
    } catch (const DomainExit&) {
      tr.domain_exit = true;
      tr.exit_t = fi.t();
      return tr;
    }
    tr.samples.push_back({fi.t(), fi.x(), fi.error_budget()});
  }
  return tr;
}

namespace {

IVec2 box_widen(const IVec2& x, const Dyadic& r) {
  return {Interval(x[0].lo() - r, x[0].hi() + r),
          Interval(x[1].lo() - r, x[1].hi() + r)};
}

bool box_subset(const IVec2& inner, const IVec2& outer) {
  for (int i = 0; i < 2; ++i) {
    if (inner[i].lo() < outer[i].lo() || inner[i].hi() > outer[i].hi())
      return false;
  }
  return true;
}

}  // namespace

IVec2 validated_flow_enclosure(const SmoothField2& field, const IVec2& x0,
                               double t_end, ValidatedOptions opt) {
  const Dyadic h = Dyadic::pow2(opt.step_log2);
  const double hd = h.to_double();
  const auto steps = static_cast<std::size_t>(std::ceil(t_end / hd));
  const Interval h_iv(h);
  const Interval h_half_sq((h * h).mul_pow2(-1));
  IVec2 x = x0;
  const Dyadic width_limit = Dyadic::from_double(opt.width_limit);
  for (std::size_t s = 0; s < steps; ++s) {
    const IVec2 fx = field.eval_i(x, opt.prec_bits);
    // A-priori box: inflate until x + [0,h] F(A) stays inside A.
    Dyadic pad = Dyadic::pow2(-20);
    IVec2 apriori = box_widen(x, pad);
    bool certified = false;
    for (int it = 0; it < opt.max_inflate; ++it) {
      const IVec2 fa = field.eval_i(apriori, opt.prec_bits);
      IVec2 reach;
      for (int i = 0; i < 2; ++i) {
        const Interval drift = Interval(Dyadic(0), h) * fa[i];
        reach[i] = x[i] + drift;
      }
      if (box_subset(reach, apriori)) {
        certified = true;
        apriori = reach;  // tightened a-priori box is still valid
        break;
      }
      pad = pad.mul_pow2(1);
      apriori = box_widen(IVec2{Interval::hull(x[0], reach[0]),
                                Interval::hull(x[1], reach[1])},
                          pad);
    }
    if (!certified)
      throw ToleranceUnachievable("no a-priori box at validated step " +
                                  std::to_string(s));
    const IVec2 fa = field.eval_i(apriori, opt.prec_bits);
    const IMat2 ja = field.jac_i(apriori, opt.prec_bits);
    IVec2 next;
    for (int i = 0; i < 2; ++i) {
      const Interval second = ja[i][0] * fa[0] + ja[i][1] * fa[1];
      next[i] = (x[i] + h_iv * fx[i] + h_half_sq * second)
                    .round_out(opt.prec_bits + 16);
    }
    x = next;
    if (max(x[0].width(), x[1].width()) > width_limit)
      throw ToleranceUnachievable("validated enclosure width blew up");
  }
  return x;
}

}  // namespace ncl
