#include "ncl/radial_profile.hpp"

#include <cmath>

#include "ncl/bump.hpp"

namespace ncl {

namespace {

const Dyadic kHalf = Dyadic::from_mantissa_exp(BigInt(1), -1);
const Dyadic kTwo{2};
const Dyadic kEighth = Dyadic::from_mantissa_exp(BigInt(1), -3);

// E(u) = e^{-1/u} for u > 0, 0 for u <= 0; increasing.
Interval outer_wall_point(const Dyadic& u, std::size_t prec) {
  if (u.sign() <= 0) return Interval(Dyadic(0));
  const Interval arg = -Interval::div(Interval(Dyadic(1)), Interval(u), prec + 8);
  return exp_enclosure(arg, prec);
}

Interval outer_wall(const Interval& u, std::size_t prec) {
  if (u.hi().sign() <= 0) return Interval(Dyadic(0));
  const Dyadic lo = outer_wall_point(u.lo(), prec).lo();
  const Dyadic hi = outer_wall_point(u.hi(), prec).hi();
  return Interval(lo, hi);
}

// E'(u) = e^{-1/u} / u^2 on u > 0; globally bounded by 4 e^{-2}.
Interval outer_wall_deriv(const Interval& u, std::size_t prec) {
  if (u.hi().sign() <= 0) return Interval(Dyadic(0));
  static const Dyadic global_bound =
      (Interval(Dyadic(4)) * exp_point(Dyadic(-2), 48)).hi();
  Interval acc(Dyadic(0));
  bool have = u.lo().sign() <= 0;  // includes the zero branch
  Dyadic cut = max(u.lo(), kEighth);
  if (u.lo() < kEighth) {
    // t = 1/u >= 8: t^2 e^{-t} <= 64 e^{-8} on this piece.
    static const Dyadic small_bound =
        (Interval(Dyadic(64)) * exp_point(Dyadic(-8), 48)).hi();
    acc = Interval(Dyadic(0), small_bound);
    have = true;
  }
  if (u.hi() > cut) {
    const Interval piece(cut, u.hi());
    const Interval e = outer_wall(piece, prec);
    const Interval part = Interval::div(e, piece.square(), prec);
    acc = have ? Interval::hull(acc, part) : part;
  }
  if (acc.hi() > global_bound) acc = Interval(acc.lo(), global_bound);
  return acc;
}

}  // namespace

RadialProfile RadialProfile::build(EnumerationPrefix prefix, std::size_t M) {
  if (M >= prefix.size())
    throw PrefixTooShort("profile level M=" + std::to_string(M) +
                         " needs prefix length > M");
  RadialProfile p;
  p.M_ = M;
  Dyadic alpha = kHalf;
  for (std::size_t m = 0; m <= M; ++m) {
    alpha += Dyadic::pow2(-static_cast<long>(prefix.value(m)) - 2);
    p.alpha_m_.push_back(alpha);
    p.weight_m_.push_back(
        Dyadic::pow2(-static_cast<long>(prefix.value(m) + m)));
  }
  p.alpha_M_ = alpha;
  p.prefix_ = std::move(prefix);
  return p;
}

Interval RadialProfile::eval(const Interval& w, std::size_t prec) const {
  const Interval v = w - Interval(shift_);
  Interval sum = -outer_wall(v - Interval(kTwo), prec);
  for (std::size_t m = 0; m <= M_; ++m) {
    // sigma_m positive exactly on (-1/2, alpha_m): map to phi's (-1,1) by
    // arg = (2v - c_m)/(alpha_m + 1/2) with c_m = alpha_m - 1/2.
    if (v.lo() >= alpha_m_[m] || v.hi() <= -kHalf) continue;
    const Dyadic c_m = alpha_m_[m] - kHalf;
    const Dyadic w_m = alpha_m_[m] + kHalf;
    const Interval arg =
        Interval::div(v.mul_pow2(1) - Interval(c_m), Interval(w_m), prec + 8);
    sum -= Interval(weight_m_[m]) * phi(arg, prec);
  }
  return sum;
}

Interval RadialProfile::deriv(const Interval& w, std::size_t prec) const {
  const Interval v = w - Interval(shift_);
  Interval sum = -outer_wall_deriv(v - Interval(kTwo), prec);
  for (std::size_t m = 0; m <= M_; ++m) {
    if (v.lo() >= alpha_m_[m] || v.hi() <= -kHalf) continue;
    const Dyadic c_m = alpha_m_[m] - kHalf;
    const Dyadic w_m = alpha_m_[m] + kHalf;
    const Interval arg =
        Interval::div(v.mul_pow2(1) - Interval(c_m), Interval(w_m), prec + 8);
    const Interval scale =
        Interval::div(Interval(kTwo), Interval(w_m), prec + 8);
    sum -= Interval(weight_m_[m]) * phi_prime(arg, prec) * scale;
  }
  return sum;
}

double RadialProfile::eval_d(double w) const {
  const double v = w - shift_.to_double();
  double sum = 0;
  const double u = v - 2;
  if (u > 0) sum -= std::exp(-1.0 / u);
  for (std::size_t m = 0; m <= M_; ++m) {
    const double am = alpha_m_[m].to_double();
    if (v >= am || v <= -0.5) continue;
    const double arg = (2 * v - (am - 0.5)) / (am + 0.5);
    if (arg <= -1 || arg >= 1) continue;
    sum -= weight_m_[m].to_double() * std::exp(-arg * arg / (1 - arg * arg));
  }
  return sum;
}

double RadialProfile::deriv_d(double w) const {
  const double v = w - shift_.to_double();
  double sum = 0;
  const double u = v - 2;
  if (u > 0) sum -= std::exp(-1.0 / u) / (u * u);
  for (std::size_t m = 0; m <= M_; ++m) {
    const double am = alpha_m_[m].to_double();
    if (v >= am || v <= -0.5) continue;
    const double arg = (2 * v - (am - 0.5)) / (am + 0.5);
    if (arg <= -1 || arg >= 1) continue;
    const double t = 1 - arg * arg;
    const double dphi = -2 * arg / (t * t) * std::exp(-arg * arg / t);
    sum -= weight_m_[m].to_double() * dphi * 2 / (am + 0.5);
  }
  return sum;
}

Dyadic RadialProfile::lipschitz_bound() const {
  static const Dyadic wall_bound =
      (Interval(Dyadic(4)) * exp_point(Dyadic(-2), 48)).hi();
  Dyadic sum = wall_bound;
  for (std::size_t m = 0; m <= M_; ++m) {
    const Dyadic w_m = alpha_m_[m] + kHalf;
    const Dyadic scale = Dyadic::div_dir(kTwo, w_m, 48, RoundDir::Up);
    sum += (weight_m_[m] * phi_prime_sup_bound() * scale)
               .round_dir(64, RoundDir::Up);
  }
  return sum.round_dir(64, RoundDir::Up);
}

Dyadic RadialProfile::c1_tail_bound() const {
  // Terms m > M have weight <= 2^-m and |sigma_m|, |sigma_m'| <= max(1, 2 sup|phi'|).
  const Dyadic per_term =
      max(Dyadic(1), (kTwo * phi_prime_sup_bound()).round_dir(48, RoundDir::Up));
  return (Dyadic::pow2(-static_cast<long>(M_)) * per_term)
      .round_dir(48, RoundDir::Up);
}

unsigned RadialProfile::modulus_from_bound(const Dyadic& lipschitz, unsigned n) {
  // ceil(log2(L+1)): top-bit position of L+1, minus one if a power of two.
  const Dyadic lp1 = lipschitz + Dyadic(1);
  const long pos = lp1.exponent() + static_cast<long>(lp1.mantissa_bits());
  const bool pow2 = lp1.mantissa() == 1;
  const long c = pow2 ? pos - 1 : pos;
  return n + 2 + static_cast<unsigned>(std::max(1L, c));
}

unsigned RadialProfile::modulus_theta(unsigned n) const {
  return modulus_from_bound(lipschitz_bound(), n);
}

RadialProfile RadialProfile::shifted(unsigned n) const {
  RadialProfile p = *this;
  p.shift_ = shift_ + Dyadic::pow2(-static_cast<long>(modulus_theta(n)));
  return p;
}

Interval basin_radius_estimate(const RadialProfile& profile, const Dyadic& tol) {
  if (tol.sign() <= 0) throw Error("tolerance must be positive");
  // P(w) := f(w) is exactly [0, 0]; false at shift + 1/2, true at shift + 2.
  const auto exactly_zero = [&](const Dyadic& w) {
    return profile.eval(Interval(w), 48).is_zero();
  };
  Dyadic lo = profile.shift() + kHalf;
  Dyadic hi = profile.shift() + kTwo;
  if (exactly_zero(lo) || !exactly_zero(hi))
    throw Error("basin bisection bracket invalid");
  while (hi - lo > tol) {
    const Dyadic mid = (lo + hi).mul_pow2(-1);
    if (exactly_zero(mid))
      hi = mid;
    else
      lo = mid;
  }
  return Interval(lo, hi);
}

}  // namespace ncl
