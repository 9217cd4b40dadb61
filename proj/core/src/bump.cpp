#include "ncl/bump.hpp"

#include <mutex>

namespace ncl {

namespace {

const Dyadic kOne{1};

// phi as a function of u = x^2, for a dyadic point u in [0, 1).
// Decreasing in u.
Interval phi_of_u(const Dyadic& u, std::size_t prec) {
  const Dyadic one_minus = kOne - u;
  const Interval arg =
      -Interval::div(Interval(u), Interval(one_minus), prec + 8);
  return exp_enclosure(arg, prec + 4);
}

Interval abs_interval(const Interval& x) {
  if (x.lo().sign() >= 0) return x;
  if (x.hi().sign() <= 0) return -x;
  return Interval(Dyadic(0), max(x.lo().abs(), x.hi()));
}

// |phi'| on [7/8, 1): with t = 1/(1-x^2) >= t0 = 64/15,
// |phi'(x)| = 2x t^2 e^{-x^2 t} <= 2 t^2 e^{-(49/64) t} =: G(t),
// and G is decreasing for t >= 2/(49/64) = 128/49 < t0, so G(t0) bounds.
Dyadic tail_bound_7_8() {
  static std::once_flag flag;
  static Dyadic bound;
  std::call_once(flag, [] {
    const Interval t0 = Interval::div(Interval(Dyadic(64)), Interval(Dyadic(15)), 96);
    const Interval c2 = Interval::div(Interval(Dyadic(49)), Interval(Dyadic(64)), 96);
    const Interval g = Interval(Dyadic(2)) * t0 * t0 * exp_enclosure(-(c2 * t0), 64);
    bound = g.hi();
  });
  return bound;
}

// Direct-formula enclosure of phi' on a sub-interval of [0, 7/8]:
// phi'(x) = -(2x / (1-x^2)^2) * phi(x), all factors well conditioned here.
Interval phi_prime_direct(const Interval& y, std::size_t prec) {
  const Interval one_minus_sq = Interval(kOne) - y.square();
  const Interval denom = one_minus_sq.square();
  const Interval ratio = Interval::div(y.mul_pow2(1), denom, prec + 8);
  return -(ratio * phi(y, prec));
}

// phi' restricted to y in [0, +inf): zero beyond the support, the direct
// formula on [0, 7/8], and the certified tail bound on [7/8, 1).
Interval phi_prime_nonneg(const Interval& y, std::size_t prec) {
  if (y.lo() >= kOne) return Interval(Dyadic(0));
  const Dyadic c = Dyadic::from_mantissa_exp(BigInt(7), -3);  // 7/8
  bool have = false;
  Interval acc;
  if (y.lo() < c) {
    const Interval direct_part(y.lo(), min(y.hi(), c));
    acc = phi_prime_direct(direct_part, prec);
    have = true;
  }
  if (y.hi() > c) {
    const Interval tail(-tail_bound_7_8(), Dyadic(0));
    acc = have ? Interval::hull(acc, tail) : tail;
    have = true;
  }
  return acc;
}

}  // namespace

Interval phi(const Interval& x, std::size_t prec) {
  const Interval a = abs_interval(x);
  if (a.lo() >= kOne) return Interval(Dyadic(0));
  const Interval u = a.square();
  const Dyadic upper = phi_of_u(u.lo(), prec).hi();
  const Dyadic lower = (u.hi() >= kOne) ? Dyadic(0) : phi_of_u(u.hi(), prec).lo();
  return Interval(lower, upper);
}

Interval phi_prime(const Interval& x, std::size_t prec) {
  const Dyadic zero{0};
  bool have = false;
  Interval acc;
  if (x.hi() > zero) {
    acc = phi_prime_nonneg(Interval(max(x.lo(), zero), x.hi()), prec);
    have = true;
  }
  if (x.lo() < zero) {
    // Odd symmetry: phi'(-x) = -phi'(x).
    const Interval reflected(-min(x.hi(), zero), x.lo().abs());
    const Interval part = -phi_prime_nonneg(reflected, prec);
    acc = have ? Interval::hull(acc, part) : part;
    have = true;
  }
  if (!have) return Interval(zero);  // x == [0,0]
  return acc;
}

Interval phi_prime_at_minus_half(std::size_t prec) {
  return phi_prime(Interval(Dyadic::from_mantissa_exp(BigInt(-1), -1)), prec);
}

Dyadic phi_prime_sup_bound() {
  static std::once_flag flag;
  static Dyadic bound;
  std::call_once(flag, [] {
    Dyadic m = tail_bound_7_8();
    // 56 cells of width 1/64 cover [0, 7/8].
    for (int i = 0; i < 56; ++i) {
      const Interval cell(Dyadic::from_mantissa_exp(BigInt(i), -6),
                          Dyadic::from_mantissa_exp(BigInt(i + 1), -6));
      m = max(m, phi_prime_direct(cell, 48).mag());
    }
    bound = m;
  });
  return bound;
}

namespace {

// S at a dyadic point, 0/1 outside (0,1). Increasing.
Interval smooth_step_point(const Dyadic& u, std::size_t prec) {
  const Dyadic zero{0};
  if (u <= zero) return Interval(zero);
  if (u >= kOne) return Interval(kOne);
  const long p = static_cast<long>(prec);
  const Interval g = Interval::div(Interval(kOne), Interval(u), prec + 8) -
                     Interval::div(Interval(kOne), Interval(kOne - u), prec + 8);
  if (g.lo() >= Dyadic(p)) return Interval(zero, Dyadic::pow2(-p));
  if (g.hi() <= Dyadic(-p)) return Interval(kOne - Dyadic::pow2(-p), kOne);
  const Interval eg = exp_enclosure(g, prec + 4);
  return Interval::div(Interval(kOne), Interval(kOne) + eg, prec + 4);
}

}  // namespace

Interval smooth_step(const Interval& u, std::size_t prec) {
  if (u.is_point()) return smooth_step_point(u.lo(), prec);
  return Interval(smooth_step_point(u.lo(), prec).lo(),
                  smooth_step_point(u.hi(), prec).hi());
}

namespace {

// sigma(g) = e^g/(1+e^g)^2 at a dyadic point.
Interval sigmoid_deriv_point(const Dyadic& g, std::size_t prec) {
  const long p = static_cast<long>(prec);
  if (g.abs() >= Dyadic(p)) return Interval(Dyadic(0), Dyadic::pow2(-p + 1));
  const Interval eg = exp_point(g, prec);
  return Interval::div(eg, (Interval(kOne) + eg).square(), prec);
}

// sigma over an interval: unimodal with maximum 1/4 at g = 0, increasing
// for g < 0 and decreasing for g > 0.
Interval sigmoid_deriv(const Interval& g, std::size_t prec) {
  const Dyadic zero{0};
  const Dyadic lo_end = sigmoid_deriv_point(g.lo(), prec).lo();
  const Dyadic hi_end = sigmoid_deriv_point(g.hi(), prec).lo();
  const Dyadic lo = min(lo_end, hi_end);
  Dyadic hi;
  if (g.lo() >= zero)
    hi = sigmoid_deriv_point(g.lo(), prec).hi();
  else if (g.hi() <= zero)
    hi = sigmoid_deriv_point(g.hi(), prec).hi();
  else
    hi = Dyadic::from_mantissa_exp(BigInt(1), -2);  // peak value 1/4
  return Interval(lo, hi);
}

}  // namespace

Dyadic smooth_step_deriv_sup_bound() {
  static std::once_flag flag;
  static Dyadic bound;
  std::call_once(flag, [] {
    // S'(u) = (1/u^2 + 1/(1-u)^2) sigma(g) with g = 1/u - 1/(1-u).
    // Subdivision over [1/64, 63/64]; on (0, 1/64] (and symmetrically near 1)
    // t = 1/u >= 64 gives S' <= (t^2+2) e^{8/7} e^{-t} <= 2^-64.
    Dyadic m = Dyadic::pow2(-64);
    const std::size_t prec = 48;
    for (int i = 1; i < 63; ++i) {
      const Interval cell(Dyadic::from_mantissa_exp(BigInt(i), -6),
                          Dyadic::from_mantissa_exp(BigInt(i + 1), -6));
      const Interval inv_u2 =
          Interval::div(Interval(kOne), cell.square(), prec);
      const Interval one_minus(kOne - cell.hi(), kOne - cell.lo());
      const Interval inv_v2 =
          Interval::div(Interval(kOne), one_minus.square(), prec);
      const Interval g = Interval::div(Interval(kOne), cell, prec) -
                         Interval::div(Interval(kOne), one_minus, prec);
      const Interval val = (inv_u2 + inv_v2) * sigmoid_deriv(g, prec);
      m = max(m, val.hi());
    }
    bound = m;
  });
  return bound;
}

}  // namespace ncl
