#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ncl/dovetail.hpp"
#include "ncl/planar_field.hpp"
#include "ncl/rng.hpp"

using namespace ncl;

namespace {
RadialProfile toy_profile(std::size_t level = 1) {
  return RadialProfile::build(dovetail_enumerate(ToyFamily{}, 100000), level);
}
}  // namespace

TEST_CASE("alpha at level M is the exact shifted partial sum") {
  const auto prefix = dovetail_enumerate(ToyFamily{}, 100000);
  const RadialProfile p = RadialProfile::build(prefix, 1);
  CHECK(p.alpha() ==
        Dyadic::from_mantissa_exp(BigInt(1), -1) + partial_sum(prefix, 1, 2));
  CHECK(p.alpha() == Dyadic::from_mantissa_exp(BigInt(73), -7));  // 0.5703125
  CHECK(p.alpha() > Dyadic::from_mantissa_exp(BigInt(1), -1));
  CHECK(p.alpha() < Dyadic(1));
}

TEST_CASE("sign pattern: negative well, exact zero plateau, negative wall") {
  const RadialProfile p = toy_profile();
  CHECK(p.eval(Interval(Dyadic(0))).strictly_negative());
  CHECK(p.eval(Interval(Dyadic::from_double(-0.2))).strictly_negative());
  CHECK(p.eval(Interval(Dyadic::from_double(0.45))).strictly_negative());
  CHECK(p.eval(Interval(Dyadic::from_double(1.5))).is_zero());
  CHECK(p.eval(Interval(p.alpha())).is_zero());
  CHECK(p.eval(Interval(Dyadic(2))).is_zero());
  CHECK(p.eval(Interval(Dyadic::from_double(2.5))).strictly_negative());
  CHECK(p.eval(Interval(Dyadic(9))).strictly_negative());
  // Just below alpha the value is negative (not exactly zero).
  const Dyadic just_below = p.alpha() - Dyadic::pow2(-12);
  CHECK_FALSE(p.eval(Interval(just_below)).is_zero());
}

TEST_CASE("profile level must fit the prefix") {
  const auto prefix = dovetail_enumerate(ToyFamily{}, 100000);  // length 2
  CHECK_THROWS_AS(RadialProfile::build(prefix, 5), PrefixTooShort);
}

TEST_CASE("interval and double paths agree") {
  const RadialProfile p = toy_profile();
  CounterRng rng(71);
  for (int i = 0; i < 500; ++i) {
    const double w = rng.uniform(-1, 16);
    const Interval e = p.eval(Interval(Dyadic::from_double(w)), 80);
    const double d = p.eval_d(w);
    CHECK(e.lo().to_double() <= d + 1e-12);
    CHECK(e.hi().to_double() >= d - 1e-12);
    const Interval de = p.deriv(Interval(Dyadic::from_double(w)), 80);
    const double dd = p.deriv_d(w);
    CHECK(de.lo().to_double() <= dd + 1e-9);
    CHECK(de.hi().to_double() >= dd - 1e-9);
  }
}

TEST_CASE("lipschitz bound dominates sampled difference quotients") {
  const RadialProfile p = toy_profile();
  const double L = p.lipschitz_bound().to_double();
  CHECK(L < 20);
  CounterRng rng(72);
  for (int i = 0; i < 2000; ++i) {
    const double x = rng.uniform(-1, 16);
    const double y = x + rng.uniform(-0.01, 0.01);
    const double q = std::abs(p.eval_d(x) - p.eval_d(y)) /
                     std::max(1e-300, std::abs(x - y));
    CHECK(q <= L);
  }
}

TEST_CASE("modulus formula") {
  CHECK(RadialProfile::modulus_from_bound(Dyadic(1), 4) == 7);   // n + 3
  CHECK(RadialProfile::modulus_from_bound(Dyadic(7), 4) == 9);   // ceil(log2 8) = 3
  CHECK(RadialProfile::modulus_from_bound(Dyadic::from_double(0.3), 2) == 5);
  const RadialProfile p = toy_profile();
  CHECK(p.modulus_theta(5) > 5 + 2);
}

TEST_CASE("modulus property over random pairs") {
  const RadialProfile p = toy_profile();
  for (unsigned n : {1u, 3u, 5u}) {
    const unsigned theta = p.modulus_theta(n);
    const double delta = std::pow(2.0, -double(theta));
    const double bound = std::pow(2.0, -double(n + 2));
    CounterRng rng(73 + n);
    for (int i = 0; i < 10000; ++i) {
      const double x = rng.uniform(-1, 16 - delta);
      const double y = x + rng.uniform(0, delta);
      CHECK(std::abs(p.eval_d(x) - p.eval_d(y)) < bound);
    }
  }
}

TEST_CASE("shift: sampled sup |f - g| below 2^-(n+2)") {
  const RadialProfile p = toy_profile();
  const unsigned n = 5;
  const RadialProfile g = p.shifted(n);
  CHECK(g.shift() == Dyadic::pow2(-static_cast<long>(p.modulus_theta(n))));
  double sup = 0;
  CounterRng rng(74);
  for (int i = 0; i < 20000; ++i) {
    const double w = rng.uniform(-1, 16);
    sup = std::max(sup, std::abs(p.eval_d(w) - g.eval_d(w)));
  }
  CHECK(sup < std::pow(2.0, -double(n + 2)));

  // Induced field distance ||h - h_hat|| <= 4 sup |f - g| on the disk.
  const FieldPtr hf = make_profile_field(p);
  const FieldPtr hg = make_profile_field(g);
  double field_sup = 0;
  for (int i = 0; i < 4000; ++i) {
    const double r = std::sqrt(rng.uniform(0, 9));
    const double cx = rng.uniform(-1, 1);
    const DVec2 x = {r * cx, (rng.next_bool() ? 1 : -1) * r *
                                 std::sqrt(std::max(0.0, 1 - cx * cx))};
    const DVec2 a = hf->eval_d(x);
    const DVec2 b = hg->eval_d(x);
    field_sup = std::max(
        field_sup, std::max(std::abs(a[0] - b[0]), std::abs(a[1] - b[1])));
  }
  CHECK(field_sup <= 4 * sup + 1e-12);
  CHECK(field_sup < std::pow(2.0, -double(n)));  // 4 * 2^-(n+2)
}

TEST_CASE("basin radius estimate encloses alpha exactly") {
  const RadialProfile p = toy_profile();
  const Interval est = basin_radius_estimate(p, Dyadic::pow2(-21));
  CHECK(est.contains(p.alpha()));
  CHECK(est.width() <= Dyadic::pow2(-20));
}

TEST_CASE("shifted basin radius adds exactly the shift") {
  const RadialProfile p = toy_profile();
  const RadialProfile g = p.shifted(5);
  const Interval est = basin_radius_estimate(g, Dyadic::pow2(-21));
  CHECK(est.contains(p.alpha() + g.shift()));
}

TEST_CASE("halving the tolerance at least halves the bracket") {
  const RadialProfile p = toy_profile();
  const Interval a = basin_radius_estimate(p, Dyadic::pow2(-10));
  const Interval b = basin_radius_estimate(p, Dyadic::pow2(-11));
  CHECK(b.width() <= a.width().mul_pow2(-1) + Dyadic::pow2(-40));
}

TEST_CASE("basin radius grows with the level and with shifts") {
  const auto prefix = dovetail_enumerate(ToyFamily{}, 100000);
  const RadialProfile p0 = RadialProfile::build(prefix, 0);
  const RadialProfile p1 = RadialProfile::build(prefix, 1);
  CHECK(p0.alpha() < p1.alpha());
  const Interval e0 = basin_radius_estimate(p0, Dyadic::pow2(-16));
  const Interval e1 = basin_radius_estimate(p1, Dyadic::pow2(-16));
  CHECK(e0.hi() <= e1.hi());
  const Interval e2 = basin_radius_estimate(p1.shifted(4), Dyadic::pow2(-16));
  CHECK(e1.hi() <= e2.hi());
}

TEST_CASE("inward on the domain boundary, stalled on the plateau circle") {
  const RadialProfile p = toy_profile();
  const FieldPtr field = make_profile_field(p);
  const InwardReport on_boundary = inward_check(*field, 9.0, 96);
  CHECK(on_boundary.all_inward());

  const InwardReport on_plateau =
      inward_check(*field, p.alpha().to_double() + 0.2, 64);
  CHECK(on_plateau.inward == 0);
  CHECK(on_plateau.outward == 0);  // flux enclosures all contain 0

  // A reversed-sign profile points outward: designed failure.
  const FieldPtr bad = make_radial_poly_field({0.5}, 1.0);
  const InwardReport rep = inward_check(*bad, 1.0, 64);
  CHECK(rep.inward == 0);
  CHECK(rep.outward == rep.boxes);
}
