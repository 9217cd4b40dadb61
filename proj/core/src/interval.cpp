#include "ncl/interval.hpp"

#include <algorithm>

namespace ncl {

namespace {

Dyadic cap_down(const Dyadic& d) {
  return d.round_dir(mantissa_bit_cap(), RoundDir::Down);
}
Dyadic cap_up(const Dyadic& d) {
  return d.round_dir(mantissa_bit_cap(), RoundDir::Up);
}

}  // namespace

Interval::Interval(Dyadic lo, Dyadic hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (hi_ < lo_) throw Error("interval endpoints out of order");
}

Interval Interval::lower_bound_only(Dyadic lo) {
  Interval r;
  r.lo_ = std::move(lo);
  r.hi_unbounded_ = true;
  return r;
}

const Dyadic& Interval::hi() const {
  require_bounded("hi");
  return hi_;
}

void Interval::require_bounded(const char* op) const {
  if (hi_unbounded_)
    throw Error(std::string("operation '") + op +
                "' on an interval unbounded above");
}

Dyadic Interval::width() const {
  require_bounded("width");
  return Dyadic::add_uncapped(hi_, -lo_).round_dir(mantissa_bit_cap(), RoundDir::Up);
}

Dyadic Interval::mid() const {
  require_bounded("mid");
  return Dyadic::add_uncapped(lo_, hi_).mul_pow2(-1).round_dir(
      mantissa_bit_cap(), RoundDir::Down);
}

Dyadic Interval::mag() const {
  require_bounded("mag");
  return max(lo_.abs(), hi_.abs());
}

bool Interval::contains(const Dyadic& x) const {
  if (x < lo_) return false;
  return hi_unbounded_ || x <= hi_;
}

Interval Interval::hull(const Interval& a, const Interval& b) {
  a.require_bounded("hull");
  b.require_bounded("hull");
  return Interval(min(a.lo_, b.lo_), max(a.hi_, b.hi_));
}

bool Interval::intersects(const Interval& o) const {
  require_bounded("intersects");
  o.require_bounded("intersects");
  return !(hi_ < o.lo_ || o.hi_ < lo_);
}

Interval Interval::operator-() const {
  require_bounded("negate");
  return Interval(-hi_, -lo_);
}

Interval operator+(const Interval& a, const Interval& b) {
  a.require_bounded("+");
  b.require_bounded("+");
  return Interval(cap_down(Dyadic::add_uncapped(a.lo_, b.lo_)),
                  cap_up(Dyadic::add_uncapped(a.hi_, b.hi_)));
}

Interval operator-(const Interval& a, const Interval& b) {
  return a + (-b);
}

Interval operator*(const Interval& a, const Interval& b) {
  a.require_bounded("*");
  b.require_bounded("*");
  const Dyadic p1 = Dyadic::mul_uncapped(a.lo_, b.lo_);
  const Dyadic p2 = Dyadic::mul_uncapped(a.lo_, b.hi_);
  const Dyadic p3 = Dyadic::mul_uncapped(a.hi_, b.lo_);
  const Dyadic p4 = Dyadic::mul_uncapped(a.hi_, b.hi_);
  const Dyadic lo = min(min(p1, p2), min(p3, p4));
  const Dyadic hi = max(max(p1, p2), max(p3, p4));
  return Interval(cap_down(lo), cap_up(hi));
}

Interval Interval::square() const {
  require_bounded("square");
  if (lo_.sign() >= 0)
    return Interval(cap_down(Dyadic::mul_uncapped(lo_, lo_)),
                    cap_up(Dyadic::mul_uncapped(hi_, hi_)));
  if (hi_.sign() <= 0)
    return Interval(cap_down(Dyadic::mul_uncapped(hi_, hi_)),
                    cap_up(Dyadic::mul_uncapped(lo_, lo_)));
  const Dyadic m = max(lo_.abs(), hi_.abs());
  return Interval(Dyadic(0), cap_up(Dyadic::mul_uncapped(m, m)));
}

Interval Interval::mul_pow2(long k) const {
  require_bounded("mul_pow2");
  return Interval(lo_.mul_pow2(k), hi_.mul_pow2(k));
}

Interval Interval::div(const Interval& a, const Interval& b,
                       std::size_t prec_bits) {
  a.require_bounded("div");
  b.require_bounded("div");
  if (b.lo_.sign() <= 0 && b.hi_.sign() >= 0) throw DivisorContainsZero();
  const auto qd = [&](const Dyadic& x, const Dyadic& y) {
    return Dyadic::div_dir(x, y, prec_bits, RoundDir::Down);
  };
  const auto qu = [&](const Dyadic& x, const Dyadic& y) {
    return Dyadic::div_dir(x, y, prec_bits, RoundDir::Up);
  };
  const Dyadic lo = std::min({qd(a.lo_, b.lo_), qd(a.lo_, b.hi_),
                              qd(a.hi_, b.lo_), qd(a.hi_, b.hi_)});
  const Dyadic hi = std::max({qu(a.lo_, b.lo_), qu(a.lo_, b.hi_),
                              qu(a.hi_, b.lo_), qu(a.hi_, b.hi_)});
  return Interval(lo, hi);
}

Interval Interval::round_out(std::size_t prec_bits) const {
  require_bounded("round_out");
  return Interval(lo_.round_dir(prec_bits, RoundDir::Down),
                  hi_.round_dir(prec_bits, RoundDir::Up));
}

std::string Interval::to_string() const {
  if (hi_unbounded_) return "[" + lo_.to_string() + ", +inf)";
  return "[" + lo_.to_string() + ", " + hi_.to_string() + "]";
}

namespace {

// e^r for an exact dyadic r with |r| <= 1/2, by Taylor series with a
// rigorous remainder: |sum_{m>n} r^m/m!| <= 2 |r|^{n+1}/(n+1)!.
Interval exp_taylor_small(const Dyadic& r, std::size_t wp) {
  Interval sum(Dyadic(1));
  Interval term(Dyadic(1));
  const Interval rint(r);
  const Dyadic tol = Dyadic::pow2(-static_cast<long>(wp));
  for (std::uint64_t n = 1; n < 10000; ++n) {
    term = term * rint;
    Interval next(Dyadic::div_uint_dir(term.lo(), n, wp + 8, RoundDir::Down),
                  Dyadic::div_uint_dir(term.hi(), n, wp + 8, RoundDir::Up));
    term = next.round_out(wp + 8);
    sum = (sum + term).round_out(wp + 8);
    // Remainder bound after the n-th term.
    const Dyadic rb = Dyadic::mul_uncapped(term.mag(), r.abs())
                          .round_dir(64, RoundDir::Up);
    const Dyadic rem =
        Dyadic::div_uint_dir(rb, n + 1, 64, RoundDir::Up).mul_pow2(1);
    if (rem <= tol) {
      sum = sum + Interval(-rem, rem);
      return sum;
    }
  }
  throw Error("exp series failed to converge");
}

}  // namespace

Interval exp_point(const Dyadic& d, std::size_t prec_bits) {
  const long p = static_cast<long>(prec_bits);
  if (d.is_zero()) return Interval(Dyadic(1));
  // Very negative arguments: 0 < e^d < 2^-prec.
  if (d <= Dyadic(-p)) return Interval(Dyadic(0), Dyadic::pow2(-p));
  // Argument halving: r = d / 2^j with |r| <= 1/2, then square j times.
  long j = 0;
  if (d.abs() > Dyadic::pow2(-1)) {
    const long topbit =
        d.exponent() + static_cast<long>(d.mantissa_bits());  // |d| < 2^topbit
    j = topbit + 1;
  }
  const std::size_t wp = prec_bits + 2 * static_cast<std::size_t>(j) + 24;
  Interval v = exp_taylor_small(d.mul_pow2(-j), wp);
  for (long i = 0; i < j; ++i) {
    v = (v * v).round_out(wp);
  }
  // e^x > 0 always; keep the lower end nonnegative under rounding.
  if (v.lo().sign() < 0) v = Interval(Dyadic(0), v.hi());
  return v;
}

Interval exp_enclosure(const Interval& x, std::size_t prec_bits) {
  const Interval lo_e = exp_point(x.lo(), prec_bits);
  if (x.is_point()) return lo_e;
  const Interval hi_e = exp_point(x.hi(), prec_bits);
  return Interval(lo_e.lo(), hi_e.hi());
}

Interval sqrt_enclosure(const Interval& x, std::size_t prec_bits) {
  const Dyadic lo = x.lo().sign() < 0 ? Dyadic(0) : x.lo();
  if (x.hi().sign() < 0) throw Error("sqrt of a negative interval");
  return Interval(Dyadic::sqrt_dir(lo, prec_bits, RoundDir::Down),
                  Dyadic::sqrt_dir(x.hi(), prec_bits, RoundDir::Up));
}

}  // namespace ncl
