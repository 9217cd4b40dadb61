#include "ncl/pr_series.hpp"

#include <algorithm>

#include "ncl/rng.hpp"

namespace ncl {

namespace {
const Dyadic kHalf = Dyadic::from_mantissa_exp(BigInt(1), -1);
}

Interval pr_term(std::uint64_t k, std::uint64_t a_k, const Interval& x,
                 std::size_t prec) {
  const Dyadic k2(static_cast<long long>(k * k));
  const Interval arg =
      (x - Interval(Dyadic(static_cast<long long>(a_k)))) * Interval(k2) -
      Interval(kHalf);
  const Interval ph = phi(arg, prec);
  return Interval(Dyadic::div_uint_dir(ph.lo(), k, prec, RoundDir::Down),
                  Dyadic::div_uint_dir(ph.hi(), k, prec, RoundDir::Up));
}

Interval pr_term_deriv(std::uint64_t k, std::uint64_t a_k, const Interval& x,
                       std::size_t prec) {
  const Dyadic k2(static_cast<long long>(k * k));
  const Interval arg =
      (x - Interval(Dyadic(static_cast<long long>(a_k)))) * Interval(k2) -
      Interval(kHalf);
  return Interval(Dyadic(static_cast<long long>(k))) * phi_prime(arg, prec);
}

Interval pr_f_eval(const Interval& x, unsigned p, const EnumerationPrefix& prefix,
                   std::size_t prec, std::uint64_t scan_cap) {
  if (p < 1) throw Error("pr_f_eval needs p >= 1");
  if (p >= 63 || (std::uint64_t{1} << p) > scan_cap)
    throw PrefixTooShort("tail certification at p=" + std::to_string(p) +
                         " exceeds the scan cap");
  const std::uint64_t K = std::uint64_t{1} << p;
  if (prefix.size() <= K)
    throw PrefixTooShort("pr_f_eval at p=" + std::to_string(p) + " needs a(k) for all k <= " +
                         std::to_string(K) + ", prefix length is " +
                         std::to_string(prefix.size()));
  // Candidate integers whose term support can meet x. Supports live within
  // (a - 1/8, a + 3/8) around the integer a.
  const BigInt lo_b = (x.lo() - kHalf).floor_to_int();
  const BigInt hi_b = (x.hi() + kHalf).floor_to_int() + 1;
  if (hi_b - lo_b > 1000000) throw Error("pr_f_eval: evaluation box too wide");
  Interval sum(Dyadic(0));
  for (BigInt nb = lo_b; nb <= hi_b; ++nb) {
    if (nb < 0) continue;
    const auto n = nb.convert_to<std::uint64_t>();
    const auto idx = prefix.index_of(n);
    if (!idx || *idx < 2 || *idx > K) continue;
    sum += pr_term(*idx, n, x, prec);
  }
  const Dyadic tail = Dyadic::pow2(-static_cast<long>(p));
  return sum + Interval(-tail, tail);
}

DerivativeAtInteger pr_f_prime_at_integer(std::uint64_t n,
                                          const EnumerationPrefix& prefix,
                                          std::size_t prec) {
  DerivativeAtInteger r;
  const auto idx = prefix.index_of(n);
  if (idx && *idx >= 2) {
    r.known = true;
    r.k = *idx;
    r.value = Interval(Dyadic(static_cast<long long>(r.k))) *
              phi_prime_at_minus_half(prec);
  } else {
    r.value = Interval(Dyadic(0));
  }
  return r;
}

RobustSeries RobustSeries::make(EnumerationPrefix prefix, Dyadic alpha) {
  const Interval prod = Interval(alpha) * phi_prime_at_minus_half(96);
  if (!(prod.lo() > Dyadic(3)))
    throw Error("alpha * phi'(-1/2) > 3 could not be certified for alpha = " +
                alpha.to_string());
  RobustSeries s;
  s.prefix = std::move(prefix);
  s.alpha = std::move(alpha);
  return s;
}

Dyadic RobustSeries::bump_amplitude_for(const Dyadic& scale) {
  // |q| <= max|c_i|, |q'| <= max|c_i| * sup|phi'|; the sup bound exceeds 1.
  return Dyadic::div_dir(scale, phi_prime_sup_bound(), 64, RoundDir::Down);
}

namespace {

Membership mu_decide(const Interval& mu) {
  const Interval scaled = mu * Interval(Dyadic(3));
  if (scaled.lo() >= Dyadic(5)) return Membership::InA;
  if (scaled.hi() < Dyadic(1)) return Membership::NotInA;
  throw GapViolation(std::to_string(mu.lo_double()),
                     std::to_string(mu.hi_double()));
}

}  // namespace

Membership mu_threshold_decide(std::uint64_t n, const Interval& gprime_n,
                               const EnumerationPrefix& prefix,
                               std::size_t prec) {
  if (prefix.size() < 2)
    throw PrefixTooShort("mu_threshold_decide needs a(0) and a(1)");
  if (n == prefix.value(0) || n == prefix.value(1)) return Membership::InA;
  const Interval mu =
      Interval::div(gprime_n, phi_prime_at_minus_half(prec), prec);
  return mu_decide(mu);
}

Interval BumpPerturbation1D::eval(const Interval& x, std::size_t prec) const {
  Interval sum(constant_offset);
  for (const Term& t : terms) {
    sum += Interval(t.amplitude) * phi(x - Interval(t.center), prec);
  }
  return sum;
}

Interval BumpPerturbation1D::deriv(const Interval& x, std::size_t prec) const {
  Interval sum{Dyadic(0)};
  for (const Term& t : terms) {
    sum += Interval(t.amplitude) * phi_prime(x - Interval(t.center), prec);
  }
  return sum;
}

bool BumpPerturbation1D::deriv_identically_zero_at(const Dyadic& x) const {
  const Dyadic one{1};
  for (const Term& t : terms) {
    if ((x - t.center).abs() < one) return false;
  }
  return true;
}

Dyadic BumpPerturbation1D::c0_norm_bound() const {
  // Supports are pairwise disjoint and phi <= 1.
  Dyadic m = constant_offset.abs();
  Dyadic bump_max{0};
  for (const Term& t : terms) bump_max = max(bump_max, t.amplitude.abs());
  return m + bump_max;
}

Dyadic BumpPerturbation1D::c1_norm_bound() const {
  Dyadic bump_max{0};
  for (const Term& t : terms) bump_max = max(bump_max, t.amplitude.abs());
  const Dyadic d1 = (bump_max * phi_prime_sup_bound())
                        .round_dir(64, RoundDir::Up);
  return max(c0_norm_bound(), d1);
}

DerivativeHarnessReport robust_derivative_harness(
    const RobustSeries& series, std::uint64_t trials,
    const Dyadic& perturb_scale, std::uint64_t seed,
    std::size_t nonmember_samples, std::size_t max_records) {
  const EnumerationPrefix& prefix = series.prefix;
  if (prefix.size() < 3)
    throw PrefixTooShort("derivative harness needs a(k) for some k >= 2");

  DerivativeHarnessReport rep;
  rep.trials = trials;
  rep.seed = seed;
  rep.perturb_scale = perturb_scale.to_double();
  rep.alpha = series.alpha.to_double();

  // Member targets: every a(k), k >= 2, in the prefix.
  std::vector<std::pair<std::uint64_t, std::uint64_t>> members;  // (n, k)
  std::uint64_t max_value = 0;
  for (std::size_t k = 0; k < prefix.size(); ++k) {
    max_value = std::max(max_value, prefix.value(k));
    if (k >= 2) members.push_back({prefix.value(k), k});
  }

  // Deterministic non-member pool.
  std::vector<std::uint64_t> nonmembers;
  for (std::uint64_t n = 0; n <= max_value + 24 && nonmembers.size() < 64; ++n) {
    if (!prefix.contains(n)) nonmembers.push_back(n);
  }

  const Dyadic amp_max = RobustSeries::bump_amplitude_for(perturb_scale);
  const Dyadic peak_offset = Dyadic::from_mantissa_exp(BigInt(3), -2);  // 3/4
  const Interval phi_prime_half = phi_prime_at_minus_half(96);
  CounterRng root(seed);

  const auto record = [&](MuRecord r) {
    if (rep.records.size() < max_records) rep.records.push_back(std::move(r));
  };

  for (std::uint64_t trial = 0; trial < trials; ++trial) {
    CounterRng rng = root.fork(trial);

    // Place bumps at a few pairwise well-separated integers, always
    // covering at least one member and one non-member target. The bump
    // peak sits at center - 3/4, so the derivative perturbation at the
    // target integer is near amplitude * phi'(-3/4).
    BumpPerturbation1D q;
    std::vector<std::uint64_t> targets;
    const auto try_add = [&](std::uint64_t n) {
      for (std::uint64_t t : targets) {
        const std::uint64_t d = n > t ? n - t : t - n;
        if (d < 3) return;
      }
      targets.push_back(n);
      const double u = rng.uniform(0.5, 1.0) * (rng.next_bool() ? 1.0 : -1.0);
      q.terms.push_back(
          {(amp_max * Dyadic::from_double(u)).round_dir(64, RoundDir::Down),
           Dyadic(static_cast<long long>(n)) + peak_offset});
    };
    if (!members.empty())
      try_add(members[rng.uniform_int(0, members.size() - 1)].first);
    if (!nonmembers.empty())
      try_add(nonmembers[rng.uniform_int(0, nonmembers.size() - 1)]);
    for (int extra = 0; extra < 2; ++extra) {
      if (rng.next_bool() && !members.empty()) {
        try_add(members[rng.uniform_int(0, members.size() - 1)].first);
      } else if (!nonmembers.empty()) {
        try_add(nonmembers[rng.uniform_int(0, nonmembers.size() - 1)]);
      }
    }

    // Checked integers this trial: all members, plus sampled non-members,
    // plus the bump neighbors (a bump at n + 3/4 also perturbs n + 1).
    std::vector<std::pair<std::uint64_t, bool>> checks;  // (n, member?)
    for (const auto& [n, k] : members) checks.push_back({n, true});
    for (std::size_t i = 0; i < nonmember_samples && i < nonmembers.size(); ++i) {
      checks.push_back(
          {nonmembers[rng.uniform_int(0, nonmembers.size() - 1)], false});
    }
    for (std::uint64_t t : targets) {
      // The bump aimed at t also perturbs t + 1; check both.
      for (std::uint64_t nb : {t, t + 1}) {
        checks.push_back(
            {nb, prefix.contains(nb) && *prefix.index_of(nb) >= 2});
      }
    }

    for (const auto& [n, is_member_raw] : checks) {
      const auto idx = prefix.index_of(n);
      const bool head = idx && *idx < 2;  // a(0), a(1): InA by definition
      const bool member_tail = idx && *idx >= 2;
      MuRecord r;
      r.trial = trial;
      r.n = n;
      r.member = member_tail;
      r.k = member_tail ? *idx : 0;
      ++rep.checks;

      // mu = k + q'(n)/phi'(-1/2): the series contribution cancels exactly.
      const Dyadic nd(static_cast<long long>(n));
      Interval mu(Dyadic(static_cast<long long>(r.k)));
      if (!q.deriv_identically_zero_at(nd)) {
        mu += Interval::div(q.deriv(Interval(nd), 96), phi_prime_half, 96);
      }
      r.mu_lo = mu.lo_double();
      r.mu_hi = mu.hi_double();
      try {
        const Membership got = head ? Membership::InA : mu_decide(mu);
        const bool expect_in = head || member_tail;
        const bool got_in = got == Membership::InA;
        r.verdict = got_in ? "InA" : "NotInA";
        r.correct = (expect_in == got_in);
        if (!r.correct) ++rep.misclassifications;
      } catch (const GapViolation&) {
        r.verdict = "GapViolation";
        r.correct = false;
        ++rep.gap_violations;
      }
      record(std::move(r));
    }
  }
  return rep;
}

}  // namespace ncl
