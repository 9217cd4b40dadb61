// Independent high-precision references used to pin expected values.
// Everything here evaluates through boost::multiprecision, never through
// the library's interval path.
#pragma once

#include <boost/multiprecision/cpp_dec_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <vector>

#include "ncl/interval.hpp"

namespace oracle {

using Real100 = boost::multiprecision::cpp_dec_float_100;
using Rational = boost::multiprecision::cpp_rational;

inline Real100 dyadic_to_real(const ncl::Dyadic& d) {
  Real100 m(d.mantissa().str());
  return m * boost::multiprecision::pow(Real100(2), d.exponent());
}

inline bool contains(const ncl::Interval& iv, const Real100& x) {
  return dyadic_to_real(iv.lo()) <= x && x <= dyadic_to_real(iv.hi());
}

inline Real100 exp_ref(const Real100& x) {
  return boost::multiprecision::exp(x);
}

// phi(x) = e^{-x^2/(1-x^2)} on |x|<1, 0 outside.
inline Real100 phi_ref(const Real100& x) {
  const Real100 ax = boost::multiprecision::abs(x);
  if (ax >= 1) return Real100(0);
  const Real100 x2 = x * x;
  return exp_ref(-x2 / (1 - x2));
}

inline Real100 phi_prime_ref(const Real100& x) {
  const Real100 ax = boost::multiprecision::abs(x);
  if (ax >= 1) return Real100(0);
  const Real100 x2 = x * x;
  const Real100 denom = (1 - x2) * (1 - x2);
  return -2 * x / denom * phi_ref(x);
}

inline Rational partial_sum_ref(const std::vector<std::uint64_t>& a,
                                std::size_t M, unsigned shift) {
  Rational s = 0;
  for (std::size_t m = 0; m <= M; ++m) {
    Rational term(1);
    term /= Rational(boost::multiprecision::cpp_int(1)
                     << (a[m] + shift));
    s += term;
  }
  return s;
}

inline Real100 rational_to_real(const Rational& r) {
  return Real100(boost::multiprecision::numerator(r).str()) /
         Real100(boost::multiprecision::denominator(r).str());
}

// Dense classic RK4 for the scalar radial equation dw/dt = 2 w f(w).
template <typename F>
double radial_reference(F&& f, double w0, double t_end, int steps = 200000) {
  double w = w0;
  const double h = t_end / steps;
  for (int i = 0; i < steps; ++i) {
    const auto g = [&](double v) { return 2 * v * f(v); };
    const double k1 = g(w);
    const double k2 = g(w + h / 2 * k1);
    const double k3 = g(w + h / 2 * k2);
    const double k4 = g(w + h * k3);
    w += h / 6 * (k1 + 2 * k2 + 2 * k3 + k4);
    if (w < 0) w = 0;
  }
  return w;
}

}  // namespace oracle
