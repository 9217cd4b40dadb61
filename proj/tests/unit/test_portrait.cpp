#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ncl/dovetail.hpp"
#include "ncl/geometry.hpp"
#include "ncl/portrait.hpp"

using namespace ncl;

TEST_CASE("profile field: one certified sink at the origin") {
  const RadialProfile prof =
      RadialProfile::build(dovetail_enumerate(ToyFamily{}, 100000), 1);
  const FieldPtr f = make_profile_field(prof);
  const auto squares = isolate_equilibria(*f, 16);
  REQUIRE(squares.size() == 1);
  CHECK(squares[0].kind == EquilibriumKind::Sink);
  CHECK(norm(squares[0].center) < 1e-6);
  CHECK(squares[0].side < 1.0 / 16);
}

TEST_CASE("linear source and saddle markers") {
  const auto src = isolate_equilibria(*make_linear_field(1, 0, 0, 1), 16);
  REQUIRE(src.size() == 1);
  CHECK(src[0].kind == EquilibriumKind::Source);

  const auto sad = isolate_equilibria(*make_linear_field(1, 0, 0, -1), 16);
  REQUIRE(sad.size() == 1);
  CHECK(sad[0].kind == EquilibriumKind::Saddle);
}

TEST_CASE("two-well equilibria: two sinks flanking a saddle") {
  const auto squares = isolate_equilibria(*make_two_well_field(), 16);
  REQUIRE(squares.size() == 3);
  CHECK(squares[0].kind == EquilibriumKind::Sink);
  CHECK(squares[0].center[0] == doctest::Approx(-1.0).epsilon(1e-9));
  CHECK(squares[1].kind == EquilibriumKind::Saddle);
  CHECK(norm(squares[1].center) < 1e-9);
  CHECK(squares[2].kind == EquilibriumKind::Sink);
  CHECK(squares[2].center[0] == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("degenerate equilibria exhaust the resolution budget") {
  // h = (x1^2, -x2) has a non-hyperbolic zero at the origin.
  using M = PolyField2::Monomial;
  const auto bad = std::make_shared<PolyField2>(
      std::vector<M>{{2, 0, Dyadic(1)}}, std::vector<M>{{0, 1, Dyadic(-1)}},
      1.0, "degenerate");
  CHECK_THROWS_AS(isolate_equilibria(*bad, 16), ResolutionExceeded);
}

TEST_CASE("attracting cycle of dw/dt = 2w(1-w) sits at the unit circle") {
  const FieldPtr f = make_radial_poly_field({1, -1}, 1.5);
  const auto eq = isolate_equilibria(*f, 16);
  REQUIRE(eq.size() == 1);
  CHECK(eq[0].kind == EquilibriumKind::Source);
  const auto cycles = isolate_periodic_orbits(*f, 16, eq);
  REQUIRE(cycles.size() == 1);
  CHECK(cycles[0].kind == CycleKind::Attracting);
  CHECK(cycles[0].invariance_certified);
  CHECK(cycles[0].margin > 0);
  // Hausdorff proximity to the unit circle: every core vertex near radius 1.
  for (const DVec2& v : cycles[0].core)
    CHECK(std::abs(norm(v) - 1.0) < 1.0 / 16);
}

TEST_CASE("radial oracle: repelling inner and attracting outer cycle") {
  const FieldPtr f = make_radial_oracle_field();
  const auto eq = isolate_equilibria(*f, 16);
  const auto cycles = isolate_periodic_orbits(*f, 16, eq);
  REQUIRE(cycles.size() == 2);
  CHECK(cycles[0].kind == CycleKind::Repelling);
  CHECK(cycles[0].section_s == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(cycles[1].kind == CycleKind::Attracting);
  CHECK(cycles[1].section_s == doctest::Approx(1.5).epsilon(1e-6));
  for (const auto& c : cycles) {
    CHECK(c.invariance_certified);
    CHECK(c.margin > 0);
  }
}

TEST_CASE("the level-M profile field is rejected as not hyperbolic") {
  const RadialProfile prof =
      RadialProfile::build(dovetail_enumerate(ToyFamily{}, 100000), 1);
  const FieldPtr f = make_profile_field(prof);
  const auto eq = isolate_equilibria(*f, 16);
  CHECK_THROWS_AS(isolate_periodic_orbits(*f, 16, eq),
                  CycleCertificationFailed);
}

TEST_CASE("spiral sink has no cycles") {
  const FieldPtr f = make_linear_field(-1, -1, 1, -1, 1.0);
  const auto eq = isolate_equilibria(*f, 16);
  REQUIRE(eq.size() == 1);
  CHECK(eq[0].kind == EquilibriumKind::Sink);
  CHECK(isolate_periodic_orbits(*f, 16, eq).empty());
}

TEST_CASE("two-well has no cycles") {
  const FieldPtr f = make_two_well_field();
  const auto eq = isolate_equilibria(*f, 16);
  CHECK(isolate_periodic_orbits(*f, 16, eq).empty());
}

TEST_CASE("axis-aligned saddle arc follows the x2 axis") {
  const FieldPtr f = make_two_well_field();
  const auto eq = isolate_equilibria(*f, 16);
  const SaddleArc arc = stable_manifold_arc(*f, eq[1], 8.0, true);
  CHECK(arc.clipped_at_boundary);
  for (const DVec2& p : arc.curve) CHECK(std::abs(p[0]) < 1e-6);
  // It extends essentially across the disk.
  double max_y = 0;
  for (const DVec2& p : arc.curve) max_y = std::max(max_y, std::abs(p[1]));
  CHECK(max_y > 1.8);
}

TEST_CASE("strict mode raises ManifoldEscape at the boundary") {
  const FieldPtr f = make_two_well_field();
  const auto eq = isolate_equilibria(*f, 16);
  CHECK_THROWS_AS(stable_manifold_arc(*f, eq[1], 8.0, false), ManifoldEscape);
}

TEST_CASE("rotated saddle arc follows the rotated eigendirection") {
  // A = R diag(1,-1) R^{-1} with R a rotation by 30 degrees: the stable
  // direction is R e2.
  const double c = std::cos(M_PI / 6), s = std::sin(M_PI / 6);
  // A = [[c,-s],[s,c]] * diag(1,-1) * [[c,s],[-s,c]]
  const double a11 = c * c - s * s, a12 = 2 * c * s;
  const double a21 = 2 * c * s, a22 = s * s - c * c;
  const FieldPtr f = make_linear_field(a11, a12, a21, a22, 1.0);
  const auto eq = isolate_equilibria(*f, 16);
  REQUIRE(eq.size() == 1);
  REQUIRE(eq[0].kind == EquilibriumKind::Saddle);
  const SaddleArc arc = stable_manifold_arc(*f, eq[0], 6.0, true);
  const DVec2 dir = {-s, c};  // R e2
  for (const DVec2& p : arc.curve) {
    const double along = p[0] * dir[0] + p[1] * dir[1];
    const double perp = std::abs(p[0] * dir[1] - p[1] * dir[0]);
    CHECK(perp <= 1e-5 + 1e-3 * std::abs(along));
  }
}

TEST_CASE("T = 0 keeps only the local segment") {
  const FieldPtr f = make_two_well_field();
  const auto eq = isolate_equilibria(*f, 16);
  const SaddleArc arc = stable_manifold_arc(*f, eq[1], 0.0, true);
  CHECK(arc.curve.size() == 3);
}

TEST_CASE("portrait extraction composes the pieces") {
  const PhasePortrait p = extract_portrait(*make_two_well_field(), 16);
  CHECK(p.squares.size() == 3);
  CHECK(p.sink_indices().size() == 2);
  CHECK(p.annuli.empty());
  CHECK(p.saddle_arcs.size() == 1);
  CHECK(p.k == 16);
}
