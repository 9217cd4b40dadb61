#pragma once

#include <string>

#include "ncl/dyadic.hpp"

namespace ncl {

// Closed interval with exact dyadic endpoints; the universal value carrier
// for rigorous evaluation. Every operation returns an enclosure of the
// exact image. Results whose endpoints would exceed the mantissa bit cap
// are rounded outward (lo down, hi up), never inward.
//
// An interval may be marked unbounded above; that form is only a result
// carrier (left-computable values) and rejects arithmetic.
class Interval {
 public:
  Interval() : lo_(), hi_() {}
  explicit Interval(const Dyadic& point) : lo_(point), hi_(point) {}
  Interval(Dyadic lo, Dyadic hi);

  static Interval lower_bound_only(Dyadic lo);

  const Dyadic& lo() const { return lo_; }
  const Dyadic& hi() const;  // throws if unbounded above
  bool unbounded_above() const { return hi_unbounded_; }

  bool is_point() const { return !hi_unbounded_ && lo_ == hi_; }
  bool is_zero() const { return is_point() && lo_.is_zero(); }
  Dyadic width() const;
  Dyadic mid() const;
  Dyadic mag() const;  // max(|lo|, |hi|)
  bool contains(const Dyadic& x) const;
  bool contains_zero() const { return contains(Dyadic(0)); }
  bool strictly_positive() const { return lo_.sign() > 0; }
  bool strictly_negative() const { return !hi_unbounded_ && hi_.sign() < 0; }

  static Interval hull(const Interval& a, const Interval& b);
  bool intersects(const Interval& o) const;

  Interval operator-() const;
  friend Interval operator+(const Interval& a, const Interval& b);
  friend Interval operator-(const Interval& a, const Interval& b);
  friend Interval operator*(const Interval& a, const Interval& b);
  Interval& operator+=(const Interval& b) { *this = *this + b; return *this; }
  Interval& operator-=(const Interval& b) { *this = *this - b; return *this; }
  Interval& operator*=(const Interval& b) { *this = *this * b; return *this; }

  // Enclosure of the square {x^2 : x in this} (tight, no dependency loss).
  Interval square() const;

  Interval mul_pow2(long k) const;

  // a / b at roughly prec_bits working precision; throws DivisorContainsZero.
  static Interval div(const Interval& a, const Interval& b,
                      std::size_t prec_bits);

  Interval round_out(std::size_t prec_bits) const;

  double lo_double() const { return lo_.to_double(); }
  double hi_double() const { return hi().to_double(); }
  std::string to_string() const;

 private:
  void require_bounded(const char* op) const;

  Dyadic lo_, hi_;
  bool hi_unbounded_ = false;
};

// Enclosure of e^x over the interval x. prec_bits controls the target
// width contribution of the evaluation itself (~2^-prec_bits).
Interval exp_enclosure(const Interval& x, std::size_t prec_bits);

// Enclosure of sqrt over a nonnegative interval (a slightly negative lower
// endpoint from outward rounding is clamped to zero).
Interval sqrt_enclosure(const Interval& x, std::size_t prec_bits);

// Enclosure of e^d at a dyadic point.
Interval exp_point(const Dyadic& d, std::size_t prec_bits);

}  // namespace ncl
