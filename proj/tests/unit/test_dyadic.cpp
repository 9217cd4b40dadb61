#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ncl/dyadic.hpp"
#include "ncl/rng.hpp"
#include "oracles.hpp"

using namespace ncl;

TEST_CASE("canonical form keeps mantissas odd or zero") {
  const Dyadic d = Dyadic::from_mantissa_exp(BigInt(24), 0);
  CHECK(d.mantissa() == 3);
  CHECK(d.exponent() == 3);
  CHECK(Dyadic(0).mantissa() == 0);
  CHECK(Dyadic(0).exponent() == 0);
}

TEST_CASE("exact arithmetic agrees with rationals") {
  CounterRng rng(11);
  for (int i = 0; i < 2000; ++i) {
    const Dyadic a = Dyadic::from_mantissa_exp(
        BigInt(rng.uniform_int(-5000, 5000)), rng.uniform_int(-20, 20));
    const Dyadic b = Dyadic::from_mantissa_exp(
        BigInt(rng.uniform_int(-5000, 5000)), rng.uniform_int(-20, 20));
    const auto to_rat = [](const Dyadic& d) {
      oracle::Rational r(d.mantissa());
      if (d.exponent() >= 0)
        r *= oracle::Rational(boost::multiprecision::cpp_int(1) << d.exponent());
      else
        r /= oracle::Rational(boost::multiprecision::cpp_int(1) << -d.exponent());
      return r;
    };
    CHECK(to_rat(a + b) == to_rat(a) + to_rat(b));
    CHECK(to_rat(a - b) == to_rat(a) - to_rat(b));
    CHECK(to_rat(a * b) == to_rat(a) * to_rat(b));
    CHECK(((a < b) == (to_rat(a) < to_rat(b))));
  }
}

TEST_CASE("from_double is exact") {
  const Dyadic d = Dyadic::from_double(0.1);
  CHECK(d.to_double() == 0.1);
  CHECK(Dyadic::from_double(-3.5) == Dyadic::from_mantissa_exp(BigInt(-7), -1));
  CHECK(Dyadic::from_double(0.0).is_zero());
}

TEST_CASE("directed rounding brackets the exact value") {
  const Dyadic x = Dyadic::from_mantissa_exp(BigInt("12345678901234567"), -40);
  for (std::size_t prec : {8u, 16u, 24u}) {
    const Dyadic down = x.round_dir(prec, RoundDir::Down);
    const Dyadic up = x.round_dir(prec, RoundDir::Up);
    CHECK(down <= x);
    CHECK(x <= up);
    CHECK(down.mantissa_bits() <= prec);
    CHECK(up.mantissa_bits() <= prec + 1);  // carry may add one bit
  }
}

TEST_CASE("directed division brackets the quotient") {
  CounterRng rng(12);
  for (int i = 0; i < 500; ++i) {
    const Dyadic a(rng.uniform_int(-100000, 100000));
    const Dyadic b(rng.uniform_int(1, 3000) * (rng.next_bool() ? 1 : -1));
    const Dyadic lo = Dyadic::div_dir(a, b, 60, RoundDir::Down);
    const Dyadic hi = Dyadic::div_dir(a, b, 60, RoundDir::Up);
    CHECK(lo <= hi);
    // lo * b <= a <= hi * b, with the inequality flipping for b < 0.
    if (b.sign() > 0) {
      CHECK(lo * b <= a);
      CHECK(a <= hi * b);
    } else {
      CHECK(lo * b >= a);
      CHECK(a >= hi * b);
    }
    CHECK((hi - lo) <= Dyadic::pow2(-50) * a.abs() + Dyadic::pow2(-50));
  }
}

TEST_CASE("directed sqrt brackets") {
  CounterRng rng(13);
  for (int i = 0; i < 300; ++i) {
    const Dyadic v(rng.uniform_int(0, 1 << 20));
    const Dyadic lo = Dyadic::sqrt_dir(v, 50, RoundDir::Down);
    const Dyadic hi = Dyadic::sqrt_dir(v, 50, RoundDir::Up);
    CHECK(lo * lo <= v);
    CHECK(v <= hi * hi);
  }
  CHECK(Dyadic::sqrt_dir(Dyadic(4), 50, RoundDir::Down) == Dyadic(2));
  CHECK(Dyadic::sqrt_dir(Dyadic(4), 50, RoundDir::Up) == Dyadic(2));
}

TEST_CASE("mantissa cap raises OverflowBudgetExceeded on exact ops") {
  const std::size_t old_cap = mantissa_bit_cap();
  set_mantissa_bit_cap(64);
  const Dyadic big = Dyadic::from_mantissa_exp((BigInt(1) << 60) + 1, 0);
  CHECK_THROWS_AS((void)(big * big), OverflowBudgetExceeded);
  set_mantissa_bit_cap(old_cap);
}

TEST_CASE("floor_to_int") {
  CHECK(Dyadic::from_double(2.75).floor_to_int() == 2);
  CHECK(Dyadic::from_double(-2.75).floor_to_int() == -3);
  CHECK(Dyadic(5).floor_to_int() == 5);
}

TEST_CASE("serialization round trip text form") {
  const Dyadic d = Dyadic::from_mantissa_exp(BigInt(27), -6);
  CHECK(d.to_string() == "27*2^-6");
  CHECK(d.to_double() == doctest::Approx(0.421875));
}
