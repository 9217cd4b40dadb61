#pragma once

#include "ncl/enumeration.hpp"
#include "ncl/interval.hpp"

namespace ncl {

// Level-M radial profile
//   f(w) = -rho(w - shift) - sum_{m<=M} 2^{-(a(m)+m)} sigma_m(w - shift),
// where sigma_m is a bump positive exactly on (-1/2, alpha_m) with
// alpha_m = 1/2 + sum_{j<=m} 2^{-a(j)-2}, and rho is positive exactly on
// (2, inf). Consequently f < 0 exactly on (-1/2, alpha_M) u (2, inf)
// (shifted), f = 0 on [alpha_M, 2] (shifted), and the zero set is decided
// by exact dyadic support comparisons, never by rounding. The weights
// carry the extra 2^-m so the dropped C1 tail is summable independently
// of the enumeration values. alpha_M is nondecreasing in M; only the
// limit alpha = sup_M alpha_M is non-computable.
class RadialProfile {
 public:
  static RadialProfile build(EnumerationPrefix prefix, std::size_t M);

  std::size_t level() const { return M_; }
  const Dyadic& alpha() const { return alpha_M_; }  // level-M value
  const Dyadic& shift() const { return shift_; }
  Dyadic basin_threshold() const { return alpha_M_ + shift_; }

  Interval eval(const Interval& w, std::size_t prec_bits = 64) const;
  Interval deriv(const Interval& w, std::size_t prec_bits = 64) const;
  double eval_d(double w) const;
  double deriv_d(double w) const;

  // Certified sup |f'|; valid on all of R (the construction is globally
  // Lipschitz), in particular on the modulus window [-1, 16].
  Dyadic lipschitz_bound() const;
  // Certified C1 bound for the dropped tail terms m > M.
  Dyadic c1_tail_bound() const;

  // theta(n) = n + 2 + ceil(log2(L_f + 1)):
  // |f(x)-f(y)| < 2^-(n+2) whenever |x-y| < 2^-theta(n), and theta(n) > n+2.
  unsigned modulus_theta(unsigned n) const;
  static unsigned modulus_from_bound(const Dyadic& lipschitz, unsigned n);

  // Horizontal shift by 2^-theta(n): g(w) = f(w - 2^-theta(n)).
  RadialProfile shifted(unsigned n) const;

 private:
  EnumerationPrefix prefix_;
  std::size_t M_ = 0;
  Dyadic alpha_M_;
  std::vector<Dyadic> alpha_m_;
  std::vector<Dyadic> weight_m_;  // 2^{-(a(m)+m)}
  Dyadic shift_{0};
};

// Interval containing the squared basin radius alpha_M + shift, found by
// sign-bisection of f over [1/2, 2] (shifted): the infimum of the exact
// zero plateau.
Interval basin_radius_estimate(const RadialProfile& profile, const Dyadic& tol);

}  // namespace ncl
