#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ncl/dovetail.hpp"
#include "ncl/geometry.hpp"
#include "ncl/integrate.hpp"
#include "ncl/rng.hpp"
#include "oracles.hpp"

using namespace ncl;

namespace {
RadialProfile toy_profile() {
  return RadialProfile::build(dovetail_enumerate(ToyFamily{}, 100000), 1);
}
}  // namespace

TEST_CASE("the origin is the unique zero of the rotational field") {
  const FieldPtr f = make_profile_field(toy_profile());
  const IVec2 zero = {Interval(Dyadic(0)), Interval(Dyadic(0))};
  const IVec2 v = f->eval_i(zero, 64);
  CHECK(v[0].is_zero());
  CHECK(v[1].is_zero());
}

TEST_CASE("on the zero plateau the field is a pure rotation") {
  const FieldPtr f = make_profile_field(toy_profile());
  // (1, 0): w = 1 lies in [alpha, 2], so h = (-x2, x1) = (0, 1) exactly.
  const IVec2 x = {Interval(Dyadic(1)), Interval(Dyadic(0))};
  const IVec2 v = f->eval_i(x, 64);
  CHECK(v[0].is_zero());
  CHECK(v[1].is_point());
  CHECK(v[1].lo() == Dyadic(1));
}

TEST_CASE("direct substitution at (1, 0) for a generic profile") {
  const FieldPtr f = make_radial_oracle_field();  // p(1) = 0 at the cycle
  const DVec2 v = f->eval_d({1.0, 0.0});
  CHECK(v[0] == doctest::Approx(0.0));
  CHECK(v[1] == doctest::Approx(1.0));
  const FieldPtr f2 = make_radial_poly_field({-0.5, 0.25}, 1.5);
  const DVec2 v2 = f2->eval_d({1.0, 0.0});
  CHECK(v2[0] == doctest::Approx(-0.25));  // p(1) = -0.25
  CHECK(v2[1] == doctest::Approx(1.0));
}

TEST_CASE("origin start is stationary") {
  const FieldPtr f = make_profile_field(toy_profile());
  const Trajectory tr = integrate_flow(f, {0, 0}, 10, 1);
  for (const auto& s : tr.samples) CHECK(norm(s.x) == 0.0);
}

TEST_CASE("plateau starts trace circles with negligible radius drift") {
  const FieldPtr f = make_profile_field(toy_profile());
  const Trajectory tr = integrate_flow(f, {1.0, 0.0}, 20, 0.25);
  for (const auto& s : tr.samples)
    CHECK(std::abs(norm2(s.x) - 1.0) <= 1e-7);
}

TEST_CASE("squared radius decreases monotonically toward the sink") {
  const RadialProfile prof = toy_profile();
  const FieldPtr f = make_profile_field(prof);
  const Trajectory tr = integrate_flow(f, {0.3, 0.0}, 50, 0.5);
  double prev = norm2(tr.samples.front().x);
  for (std::size_t i = 1; i < tr.samples.size(); ++i) {
    const double w = norm2(tr.samples[i].x);
    CHECK(w <= prev + 1e-9);
    prev = w;
  }
  // Cross-check the final squared radius against the 1-D radial oracle.
  const double ref = oracle::radial_reference(
      [&](double w) { return prof.eval_d(w); }, 0.09, 50);
  CHECK(norm2(tr.samples.back().x) == doctest::Approx(ref).epsilon(1e-5));
}

TEST_CASE("trajectory cross-check against the radial oracle, 100 starts") {
  const RadialProfile prof = toy_profile();
  const FieldPtr f = make_profile_field(prof);
  CounterRng rng(81);
  for (int i = 0; i < 100; ++i) {
    const double r = rng.uniform(0.05, 1.6);
    const double t_end = rng.uniform(1, 12);
    const double c = rng.uniform(-1, 1);
    const DVec2 x0 = {r * c,
                      (rng.next_bool() ? 1 : -1) * r * std::sqrt(1 - c * c)};
    const Trajectory tr = integrate_flow(f, x0, t_end, t_end);
    const double ref = oracle::radial_reference(
        [&](double w) { return prof.eval_d(w); }, norm2(x0), t_end, 40000);
    CHECK(norm2(tr.samples.back().x) == doctest::Approx(ref).epsilon(1e-4));
  }
}

TEST_CASE("nearby starts never diverge faster than e^{Lt}") {
  const FieldPtr f = make_radial_oracle_field();
  const double L = f->lipschitz_bound();
  CounterRng rng(82);
  for (int i = 0; i < 40; ++i) {
    const DVec2 x = {rng.uniform(-1.2, 1.2), rng.uniform(-1.2, 1.2)};
    const DVec2 y = {x[0] + rng.uniform(-1e-4, 1e-4),
                     x[1] + rng.uniform(-1e-4, 1e-4)};
    const double t_end = rng.uniform(0.5, 4);
    const Trajectory tx = integrate_flow(f, x, t_end, t_end);
    const Trajectory ty = integrate_flow(f, y, t_end, t_end);
    const double lhs = dist(tx.samples.back().x, ty.samples.back().x);
    const double rhs = std::max(std::abs(x[0] - y[0]), std::abs(x[1] - y[1])) *
                       std::exp(std::min(700.0, L * t_end));
    CHECK(lhs <= std::max(rhs, 1e-300));
  }
}

TEST_CASE("leaving the domain raises DomainExit") {
  const FieldPtr f = make_linear_field(1, 0, 0, 1, 1.0);  // source
  FlowIntegrator fi(f, {0.5, 0.0}, {});
  CHECK_THROWS_AS(fi.advance_to(10.0), DomainExit);
  // integrate_flow records the exit instead of throwing.
  const Trajectory tr = integrate_flow(f, {0.5, 0.0}, 10, 0.5);
  CHECK(tr.domain_exit);
}

TEST_CASE("unachievable tolerance is reported") {
  const FieldPtr f = make_radial_oracle_field();
  IntegrateOptions opt;
  opt.tol = 0;  // nothing passes the acceptance test
  FlowIntegrator fi(f, {0.5, 0.2}, opt);
  CHECK_THROWS_AS(fi.advance_to(1.0), ToleranceUnachievable);
}

TEST_CASE("validated enclosure brackets the linear decay flow") {
  const FieldPtr f = make_linear_field(-1, 0, 0, -1, 2.0);
  const IVec2 x0 = {Interval(Dyadic::from_double(0.5)),
                    Interval(Dyadic::from_double(0.25))};
  const IVec2 enc = validated_flow_enclosure(*f, x0, 1.0);
  const double e1 = 0.5 * std::exp(-1.0);
  const double e2 = 0.25 * std::exp(-1.0);
  CHECK(enc[0].lo().to_double() <= e1);
  CHECK(enc[0].hi().to_double() >= e1);
  CHECK(enc[1].lo().to_double() <= e2);
  CHECK(enc[1].hi().to_double() >= e2);
  CHECK(enc[0].width().to_double() < 1e-4);
}

TEST_CASE("validated enclosure contains the fast trajectory") {
  const FieldPtr f = make_radial_oracle_field();
  const DVec2 x0 = {0.4, 0.1};
  const IVec2 enc = validated_flow_enclosure(
      *f, {Interval(Dyadic::from_double(x0[0])),
           Interval(Dyadic::from_double(x0[1]))},
      0.5);
  FlowIntegrator fi(f, x0, {});
  fi.advance_to(0.5);
  CHECK(enc[0].lo().to_double() <= fi.x()[0]);
  CHECK(enc[0].hi().to_double() >= fi.x()[0]);
  CHECK(enc[1].lo().to_double() <= fi.x()[1]);
  CHECK(enc[1].hi().to_double() >= fi.x()[1]);
}
