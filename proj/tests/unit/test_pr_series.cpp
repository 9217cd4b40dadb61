#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ncl/pr_series.hpp"
#include "ncl/rng.hpp"
#include "oracles.hpp"

using namespace ncl;
using oracle::Real100;

namespace {

EnumerationPrefix wide_prefix() {
  // Injective values, length 17 (covers k <= 16, i.e. p <= 4).
  return EnumerationPrefix::from_values(
      {7, 11, 3, 16, 9, 22, 5, 18, 27, 13, 31, 2, 46, 38, 24, 53, 61},
      "synthetic");
}

}  // namespace

TEST_CASE("pr_f_eval far from every integer is a small enclosure of 0") {
  const auto p = wide_prefix();
  const Interval r = pr_f_eval(Interval(Dyadic::from_double(100.5)), 4, p);
  CHECK(r.contains(Dyadic(0)));
  CHECK(r.lo() >= -Dyadic::pow2(-4));
  CHECK(r.hi() <= Dyadic::pow2(-4));
}

TEST_CASE("pr_f_eval at a(3) + offset matches the single-term oracle") {
  const auto p = wide_prefix();
  const std::uint64_t a3 = p.value(3);
  // Offset inside supp psi_3 = (-1/18, 3/18).
  const Dyadic offset = Dyadic::from_double(0.05);
  const Dyadic x = Dyadic(static_cast<long long>(a3)) + offset;
  const Interval r = pr_f_eval(Interval(x), 4, p);
  // Independent term value: (1/3) phi(9 * offset - 1/2).
  const Real100 arg = 9 * oracle::dyadic_to_real(offset) - Real100(1) / 2;
  const Real100 ref = oracle::phi_ref(arg) / 3;
  CHECK(oracle::contains(r, ref));
  CHECK(std::abs(r.mid().to_double() - static_cast<double>(ref)) <=
        std::pow(2.0, -4));  // the tail allowance
}

TEST_CASE("pr_f_eval tail-bound width") {
  const auto p = wide_prefix();
  // round(x) not among prefix values.
  const Interval r = pr_f_eval(Interval(Dyadic(40)), 4, p);
  CHECK(r.width() <= Dyadic::pow2(-3) + Dyadic::pow2(-40));
  CHECK(r.contains(Dyadic(0)));
}

TEST_CASE("pr_f_eval needs the prefix to cover the scan") {
  const auto p = EnumerationPrefix::from_values({7, 11, 3}, "synthetic");
  CHECK_THROWS_AS(pr_f_eval(Interval(Dyadic(0)), 4, p), PrefixTooShort);
  CHECK_THROWS_AS(pr_f_eval(Interval(Dyadic(0)), 30, wide_prefix(), 96, 1 << 20),
                  PrefixTooShort);
}

TEST_CASE("support locality invariant") {
  const auto p = wide_prefix();
  CounterRng rng(51);
  for (int i = 0; i < 200; ++i) {
    // Points at distance >= 3/8 from the nearest integer.
    const long long n = rng.uniform_int(0, 60);
    const double frac = rng.next_bool() ? rng.uniform(0.375, 0.5)
                                        : -rng.uniform(0.375, 0.5);
    const Interval r =
        pr_f_eval(Interval(Dyadic::from_double(n + frac)), 4, p);
    CHECK(r.width() <= Dyadic::pow2(-3) + Dyadic::pow2(-40));
  }
}

TEST_CASE("pr_f_prime_at_integer") {
  const auto p = wide_prefix();
  const auto d4 = pr_f_prime_at_integer(p.value(4), p);
  CHECK(d4.known);
  CHECK(d4.k == 4);
  const Real100 ref =
      4 * (Real100(16) / 9 * oracle::exp_ref(Real100(-1) / 3));
  CHECK(oracle::contains(d4.value, ref));

  const auto d0 = pr_f_prime_at_integer(p.value(0), p);
  CHECK_FALSE(d0.known);  // the series starts at k = 2
  CHECK(d0.value.is_zero());

  const auto dn = pr_f_prime_at_integer(1000, p);
  CHECK_FALSE(dn.known);
}

TEST_CASE("finite-difference consistency at members, k <= 8") {
  const auto p = EnumerationPrefix::from_values(
      {7, 11, 3, 16, 9, 22, 5, 18, 27, 13, 31, 2, 46, 38, 24, 53, 61},
      "synthetic");
  const double phi_p = phi_prime_at_minus_half().mid().to_double();
  for (std::uint64_t k = 2; k <= 8; ++k) {
    const std::uint64_t n = p.value(k);
    const double h = std::pow(2.0, -12) / (k * k);
    const auto at = [&](double x) {
      return pr_f_eval(Interval(Dyadic::from_double(x)), 4, p, 96).mid().to_double();
    };
    const double fd = (at(n + h) - at(n - h)) / (2 * h);
    CHECK(fd == doctest::Approx(k * phi_p).epsilon(0.01));
  }
}

TEST_CASE("mu threshold decision: the three regimes") {
  const auto p = wide_prefix();
  const Interval phi_p = phi_prime_at_minus_half();
  const std::uint64_t n_free = 1000;  // not in the prefix
  // mu in [1.9, 2.1]
  CHECK(mu_threshold_decide(n_free,
                            Interval(Dyadic::from_double(1.9),
                                     Dyadic::from_double(2.1)) *
                                phi_p,
                            p) == Membership::InA);
  // mu in [-0.1, 0.2]
  CHECK(mu_threshold_decide(n_free,
                            Interval(Dyadic::from_double(-0.1),
                                     Dyadic::from_double(0.2)) *
                                phi_p,
                            p) == Membership::NotInA);
  // mu in [1.0, 1.1]: the forbidden band
  CHECK_THROWS_AS(
      mu_threshold_decide(n_free,
                          Interval(Dyadic::from_double(1.0),
                                   Dyadic::from_double(1.1)) *
                              phi_p,
                          p),
      GapViolation);
  // n = a(0) or a(1) decide InA regardless of the enclosure.
  CHECK(mu_threshold_decide(p.value(0), Interval(Dyadic(0)), p) ==
        Membership::InA);
  CHECK(mu_threshold_decide(p.value(1), Interval(Dyadic(0)), p) ==
        Membership::InA);
}

TEST_CASE("alpha certification") {
  CHECK_NOTHROW(RobustSeries::make(wide_prefix()));  // alpha = 5/2
  CHECK_THROWS_AS(
      RobustSeries::make(wide_prefix(), Dyadic(2)),  // 2 * 1.27 < 3
      Error);
}

TEST_CASE("unperturbed mu values are exactly k or 0") {
  const RobustSeries series = RobustSeries::make(wide_prefix());
  const auto rep = robust_derivative_harness(series, 3, Dyadic(0), 9);
  CHECK(rep.all_clean());
  for (const MuRecord& r : rep.records) {
    CHECK(r.mu_lo == r.mu_hi);
    CHECK(r.mu_lo == static_cast<double>(r.k));
  }
}

TEST_CASE("threshold dichotomy holds below the neighborhood radius") {
  const RobustSeries series = RobustSeries::make(wide_prefix());
  // 0.9 / alpha with alpha = 5/2.
  const Dyadic scale = Dyadic::from_double(0.9 / 2.5);
  const auto rep = robust_derivative_harness(series, 40, scale, 7);
  CHECK(rep.checks > 0);
  CHECK(rep.misclassifications == 0);
  CHECK(rep.gap_violations == 0);
}

TEST_CASE("breaking the precondition flags gap violations") {
  const RobustSeries series = RobustSeries::make(wide_prefix());
  const Dyadic scale = Dyadic::from_double(3.0 / 2.5);
  const auto rep = robust_derivative_harness(series, 10, scale, 7);
  CHECK(rep.gap_violations > 0);
}

TEST_CASE("adding a constant leaves every mu value unchanged") {
  // The one-line compact-interval semi-robustness check: (f + eps)' = f'.
  BumpPerturbation1D q;
  q.constant_offset = Dyadic::from_double(0.05);
  CHECK(q.deriv(Interval(Dyadic(7))).is_zero());
  CHECK(q.c0_norm_bound() == Dyadic::from_double(0.05));
  CHECK(q.c1_norm_bound() == Dyadic::from_double(0.05));
}

TEST_CASE("bump perturbation norms bound sampled values") {
  BumpPerturbation1D q;
  q.terms.push_back({Dyadic::from_double(0.11), Dyadic::from_double(3.75)});
  q.terms.push_back({Dyadic::from_double(-0.07), Dyadic::from_double(9.75)});
  CounterRng rng(52);
  const double c0 = q.c0_norm_bound().to_double();
  const double c1 = q.c1_norm_bound().to_double();
  for (int i = 0; i < 500; ++i) {
    const Dyadic x = Dyadic::from_double(rng.uniform(0, 12));
    CHECK(q.eval(Interval(x)).mag().to_double() <= c0 + 1e-12);
    CHECK(q.deriv(Interval(x)).mag().to_double() <= c1 + 1e-12);
  }
}
