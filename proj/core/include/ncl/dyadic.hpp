#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>

#include "ncl/errors.hpp"

namespace ncl {

using BigInt = boost::multiprecision::cpp_int;

// Global cap on mantissa size for exact dyadic results. Exact operations
// throw OverflowBudgetExceeded instead of rounding silently; interval
// operations round outward at the cap instead (see interval.hpp).
std::size_t mantissa_bit_cap();
void set_mantissa_bit_cap(std::size_t bits);

enum class RoundDir { Down, Up };

// Exact binary rational m * 2^e with arbitrary-precision mantissa.
// Canonical form: mantissa odd, or zero with exponent zero.
class Dyadic {
 public:
  Dyadic() : mant_(0), exp_(0) {}
  Dyadic(long long n) : mant_(n), exp_(0) { normalize(); }
  Dyadic(long n) : Dyadic(static_cast<long long>(n)) {}
  Dyadic(int n) : Dyadic(static_cast<long long>(n)) {}

  static Dyadic from_mantissa_exp(BigInt m, long e);
  static Dyadic from_double(double x);  // exact; throws on NaN/inf
  static Dyadic pow2(long e);           // 2^e

  const BigInt& mantissa() const { return mant_; }
  long exponent() const { return exp_; }

  bool is_zero() const { return mant_.is_zero(); }
  int sign() const { return mant_.sign(); }
  std::size_t mantissa_bits() const;

  Dyadic operator-() const;
  Dyadic abs() const { return sign() < 0 ? -*this : *this; }
  Dyadic mul_pow2(long k) const;

  friend Dyadic operator+(const Dyadic& a, const Dyadic& b) { return add(a, b, true); }
  friend Dyadic operator-(const Dyadic& a, const Dyadic& b) { return add(a, -b, true); }
  friend Dyadic operator*(const Dyadic& a, const Dyadic& b) { return mul(a, b, true); }
  Dyadic& operator+=(const Dyadic& b) { *this = *this + b; return *this; }
  Dyadic& operator-=(const Dyadic& b) { *this = *this - b; return *this; }
  Dyadic& operator*=(const Dyadic& b) { *this = *this * b; return *this; }

  // Exact sum/product without the cap check (internal carrier for interval
  // code, which rounds outward afterwards).
  static Dyadic add_uncapped(const Dyadic& a, const Dyadic& b) { return add(a, b, false); }
  static Dyadic mul_uncapped(const Dyadic& a, const Dyadic& b) { return mul(a, b, false); }

  static int compare(const Dyadic& a, const Dyadic& b);
  friend bool operator==(const Dyadic& a, const Dyadic& b) { return compare(a, b) == 0; }
  friend bool operator!=(const Dyadic& a, const Dyadic& b) { return compare(a, b) != 0; }
  friend bool operator<(const Dyadic& a, const Dyadic& b) { return compare(a, b) < 0; }
  friend bool operator<=(const Dyadic& a, const Dyadic& b) { return compare(a, b) <= 0; }
  friend bool operator>(const Dyadic& a, const Dyadic& b) { return compare(a, b) > 0; }
  friend bool operator>=(const Dyadic& a, const Dyadic& b) { return compare(a, b) >= 0; }

  // Directed rounding to at most prec_bits mantissa bits.
  Dyadic round_dir(std::size_t prec_bits, RoundDir dir) const;

  // Directed quotient a/b with roughly prec_bits significant bits.
  static Dyadic div_dir(const Dyadic& a, const Dyadic& b, std::size_t prec_bits,
                        RoundDir dir);
  // Directed a/n for a machine integer n > 0.
  static Dyadic div_uint_dir(const Dyadic& a, std::uint64_t n,
                             std::size_t prec_bits, RoundDir dir);

  // Directed square root of a nonnegative dyadic.
  static Dyadic sqrt_dir(const Dyadic& v, std::size_t prec_bits, RoundDir dir);

  BigInt floor_to_int() const;

  double to_double() const;  // nearest double (may overflow to +-inf)
  std::string to_string() const;  // "m*2^e"

 private:
  static Dyadic add(const Dyadic& a, const Dyadic& b, bool capped);
  static Dyadic mul(const Dyadic& a, const Dyadic& b, bool capped);
  void normalize();
  void check_cap() const;

  BigInt mant_;
  long exp_;
};

inline const Dyadic& min(const Dyadic& a, const Dyadic& b) { return a <= b ? a : b; }
inline const Dyadic& max(const Dyadic& a, const Dyadic& b) { return a >= b ? a : b; }

// floor(a / b) for BigInt, b > 0.
BigInt floor_div(const BigInt& a, const BigInt& b);

}  // namespace ncl
