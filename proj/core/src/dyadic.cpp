#include "ncl/dyadic.hpp"

#include <atomic>
#include <cmath>
#include <limits>

namespace ncl {

namespace {
std::atomic<std::size_t> g_mantissa_bit_cap{4096};
// Intermediate alignment shifts beyond this are treated as a budget error
// even before normalization (keeps pathological exponent gaps from
// allocating huge temporaries).
constexpr std::size_t kHardShiftLimit = std::size_t{1} << 24;
}  // namespace

std::size_t mantissa_bit_cap() { return g_mantissa_bit_cap.load(); }
void set_mantissa_bit_cap(std::size_t bits) { g_mantissa_bit_cap.store(bits); }

BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q = a / b;
  if (q * b != a && (a < 0) != (b < 0)) --q;
  return q;
}

void Dyadic::normalize() {
  if (mant_.is_zero()) {
    exp_ = 0;
    return;
  }
  const BigInt mag = boost::multiprecision::abs(mant_);
  const unsigned tz = boost::multiprecision::lsb(mag);
  if (tz > 0) {
    mant_ >>= tz;
    exp_ += static_cast<long>(tz);
  }
}

void Dyadic::check_cap() const {
  const std::size_t bits = mantissa_bits();
  if (bits > mantissa_bit_cap()) throw OverflowBudgetExceeded(bits);
}

std::size_t Dyadic::mantissa_bits() const {
  if (mant_.is_zero()) return 0;
  return boost::multiprecision::msb(boost::multiprecision::abs(mant_)) + 1;
}

Dyadic Dyadic::from_mantissa_exp(BigInt m, long e) {
  Dyadic d;
  d.mant_ = std::move(m);
  d.exp_ = e;
  d.normalize();
  return d;
}

Dyadic Dyadic::from_double(double x) {
  if (!std::isfinite(x)) throw Error("from_double: non-finite input");
  if (x == 0.0) return Dyadic();
  int e2 = 0;
  const double frac = std::frexp(x, &e2);  // frac in [0.5, 1)
  const double scaled = std::ldexp(frac, 53);
  return from_mantissa_exp(BigInt(static_cast<long long>(scaled)), e2 - 53);
}

Dyadic Dyadic::pow2(long e) { return from_mantissa_exp(BigInt(1), e); }

Dyadic Dyadic::operator-() const {
  Dyadic d;
  d.mant_ = -mant_;
  d.exp_ = exp_;
  return d;
}

Dyadic Dyadic::mul_pow2(long k) const {
  if (is_zero()) return Dyadic();
  Dyadic d = *this;
  d.exp_ += k;
  return d;
}

Dyadic Dyadic::add(const Dyadic& a, const Dyadic& b, bool capped) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  const long e = std::min(a.exp_, b.exp_);
  const std::size_t sa = static_cast<std::size_t>(a.exp_ - e);
  const std::size_t sb = static_cast<std::size_t>(b.exp_ - e);
  if (sa > kHardShiftLimit || sb > kHardShiftLimit)
    throw OverflowBudgetExceeded(std::max(sa, sb));
  Dyadic r;
  r.mant_ = (a.mant_ << sa) + (b.mant_ << sb);
  r.exp_ = e;
  r.normalize();
  if (capped) r.check_cap();
  return r;
}

Dyadic Dyadic::mul(const Dyadic& a, const Dyadic& b, bool capped) {
  Dyadic r;
  r.mant_ = a.mant_ * b.mant_;
  r.exp_ = a.exp_ + b.exp_;
  r.normalize();
  if (capped) r.check_cap();
  return r;
}

int Dyadic::compare(const Dyadic& a, const Dyadic& b) {
  const int sa = a.sign();
  const int sb = b.sign();
  if (sa != sb) return sa < sb ? -1 : 1;
  if (sa == 0) return 0;
  // Same nonzero sign: compare magnitude via top-bit position first to
  // avoid aligning wildly different exponents.
  const long pa = a.exp_ + static_cast<long>(a.mantissa_bits());
  const long pb = b.exp_ + static_cast<long>(b.mantissa_bits());
  if (pa != pb) {
    const bool a_bigger_mag = pa > pb;
    return (a_bigger_mag == (sa > 0)) ? 1 : -1;
  }
  const long e = std::min(a.exp_, b.exp_);
  const BigInt ma = a.mant_ << static_cast<std::size_t>(a.exp_ - e);
  const BigInt mb = b.mant_ << static_cast<std::size_t>(b.exp_ - e);
  if (ma == mb) return 0;
  return ma < mb ? -1 : 1;
}

Dyadic Dyadic::round_dir(std::size_t prec_bits, RoundDir dir) const {
  if (prec_bits == 0) prec_bits = 1;
  const std::size_t bits = mantissa_bits();
  if (bits <= prec_bits) return *this;
  const std::size_t drop = bits - prec_bits;
  const BigInt unit = BigInt(1) << drop;
  BigInt q = floor_div(mant_, unit);
  if (dir == RoundDir::Up && q * unit != mant_) ++q;
  return from_mantissa_exp(std::move(q), exp_ + static_cast<long>(drop));
}

Dyadic Dyadic::div_dir(const Dyadic& a, const Dyadic& b, std::size_t prec_bits,
                       RoundDir dir) {
  if (b.is_zero()) throw Error("dyadic division by zero");
  if (a.is_zero()) return Dyadic();
  const std::size_t scale = prec_bits + b.mantissa_bits() + 2;
  const BigInt num = a.mant_ << scale;
  BigInt q = floor_div(num, b.mant_);
  if (dir == RoundDir::Up && q * b.mant_ != num) ++q;
  return from_mantissa_exp(std::move(q),
                           a.exp_ - b.exp_ - static_cast<long>(scale));
}

Dyadic Dyadic::div_uint_dir(const Dyadic& a, std::uint64_t n,
                            std::size_t prec_bits, RoundDir dir) {
  return div_dir(a, Dyadic(static_cast<long long>(n)), prec_bits, dir);
}

Dyadic Dyadic::sqrt_dir(const Dyadic& v, std::size_t prec_bits, RoundDir dir) {
  if (v.sign() < 0) throw Error("sqrt of a negative dyadic");
  if (v.is_zero()) return Dyadic();
  // Shift so the exponent is even and the mantissa carries ~2*prec bits.
  long e = v.exp_;
  std::size_t k = 2 * prec_bits + 2;
  if ((e - static_cast<long>(k)) % 2 != 0) ++k;
  const BigInt scaled = v.mant_ << k;
  const BigInt root = boost::multiprecision::sqrt(scaled);  // floor sqrt
  const long half_exp = (e - static_cast<long>(k)) / 2;
  if (dir == RoundDir::Down) return from_mantissa_exp(root, half_exp);
  if (root * root == scaled) return from_mantissa_exp(root, half_exp);
  return from_mantissa_exp(root + 1, half_exp);
}

BigInt Dyadic::floor_to_int() const {
  if (is_zero()) return BigInt(0);
  if (exp_ >= 0) {
    if (static_cast<std::size_t>(exp_) > kHardShiftLimit)
      throw OverflowBudgetExceeded(static_cast<std::size_t>(exp_));
    return mant_ << static_cast<std::size_t>(exp_);
  }
  return floor_div(mant_, BigInt(1) << static_cast<std::size_t>(-exp_));
}

double Dyadic::to_double() const {
  if (is_zero()) return 0.0;
  const std::size_t bits = mantissa_bits();
  if (bits <= 62) {
    return std::ldexp(static_cast<double>(mant_.convert_to<long long>()),
                      static_cast<int>(exp_));
  }
  const std::size_t drop = bits - 62;
  const BigInt unit = BigInt(1) << drop;
  // Round-to-nearest on the dropped bits.
  BigInt q = floor_div(mant_, unit);
  const BigInt rem = mant_ - q * unit;
  if ((rem << 1) >= unit) ++q;
  const long e = exp_ + static_cast<long>(drop);
  if (e > 2000) return sign() > 0 ? std::numeric_limits<double>::infinity()
                                  : -std::numeric_limits<double>::infinity();
  if (e < -2200) return sign() > 0 ? 0.0 : -0.0;
  return std::ldexp(static_cast<double>(q.convert_to<long long>()),
                    static_cast<int>(e));
}

std::string Dyadic::to_string() const {
  return mant_.str() + "*2^" + std::to_string(exp_);
}

}  // namespace ncl
