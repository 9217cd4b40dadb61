#pragma once

#include <cstdint>
#include <vector>

#include "ncl/bump.hpp"
#include "ncl/enumeration.hpp"
#include "ncl/interval.hpp"

namespace ncl {

// One series term psi_k(x - a(k)) = (1/k) phi(k^2 (x - a(k)) - 1/2),
// supported in (a(k) - 1/(2k^2), a(k) + 3/(2k^2)) with |psi_k| <= 1/k.
Interval pr_term(std::uint64_t k, std::uint64_t a_k, const Interval& x,
                 std::size_t prec_bits = 96);
// d/dx of the same term: k phi'(k^2 (x - a(k)) - 1/2).
Interval pr_term_deriv(std::uint64_t k, std::uint64_t a_k, const Interval& x,
                       std::size_t prec_bits = 96);

// Enclosure of f(x) = sum_{k>=2} psi_k(x - a(k)) certified to the tail
// bound 2^-p: terms with k <= 2^p are evaluated from the prefix (at most
// one is nonzero at any point since the supports around distinct integers
// are disjoint), terms with k > 2^p are covered by |psi_k| <= 1/k < 2^-p.
// Requires the prefix to cover every k <= 2^p.
Interval pr_f_eval(const Interval& x, unsigned p, const EnumerationPrefix& prefix,
                   std::size_t prec_bits = 96, std::uint64_t scan_cap = 1u << 20);

struct DerivativeAtInteger {
  bool known = false;    // n = a(k) for some k >= 2 in the prefix
  std::uint64_t k = 0;   // the index when known
  Interval value;        // k * phi'(-1/2), or exact zero
};

// f'(n) at an integer, relative to the prefix. A {known=false} result means
// "zero so far": n may still enter the enumeration later, so this is not a
// certificate that f'(n) = 0. This budget-relative answer is exactly where
// the non-computability of differentiation lives.
DerivativeAtInteger pr_f_prime_at_integer(std::uint64_t n,
                                          const EnumerationPrefix& prefix,
                                          std::size_t prec_bits = 96);

// The series f together with the rational constant alpha fixing the
// C1-neighborhood radius 1/alpha. Requires alpha * phi'(-1/2) > 3,
// verified rigorously at construction.
struct RobustSeries {
  EnumerationPrefix prefix;
  Dyadic alpha;

  static RobustSeries make(EnumerationPrefix prefix,
                           Dyadic alpha = Dyadic::from_mantissa_exp(BigInt(5), -1));
  // Largest certified amplitude bound: any q with |q|, |q'| <= this value
  // has C1 norm below scale.
  static Dyadic bump_amplitude_for(const Dyadic& scale);
};

enum class Membership { InA, NotInA };

// Decides n in A from a sound enclosure of g'(n), for any g within 1/alpha
// of f in C1 norm: InA iff n = a(0) or n = a(1) or mu >= 5/3 with
// mu = g'(n)/phi'(-1/2); mu < 1/3 certifies NotInA. An enclosure meeting
// the forbidden band [1/3, 5/3) throws GapViolation.
Membership mu_threshold_decide(std::uint64_t n, const Interval& gprime_n,
                               const EnumerationPrefix& prefix,
                               std::size_t prec_bits = 96);

// Smooth 1-D perturbation with closed-form norms: a constant offset plus
// bumps c_i phi(x - t_i) whose supports are pairwise disjoint.
struct BumpPerturbation1D {
  struct Term {
    Dyadic amplitude;
    Dyadic center;
  };
  Dyadic constant_offset;
  std::vector<Term> terms;

  Interval eval(const Interval& x, std::size_t prec_bits = 96) const;
  Interval deriv(const Interval& x, std::size_t prec_bits = 96) const;
  bool deriv_identically_zero_at(const Dyadic& x) const;
  Dyadic c0_norm_bound() const;
  Dyadic c1_norm_bound() const;
};

struct MuRecord {
  std::uint64_t trial = 0;
  std::uint64_t n = 0;
  bool member = false;       // ground truth relative to the prefix
  std::uint64_t k = 0;       // index when member
  double mu_lo = 0, mu_hi = 0;
  std::string verdict;       // "InA" | "NotInA" | "GapViolation"
  bool correct = false;
};

struct DerivativeHarnessReport {
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  double perturb_scale = 0;
  double alpha = 0;
  std::uint64_t checks = 0;
  std::uint64_t misclassifications = 0;
  std::uint64_t gap_violations = 0;
  std::vector<MuRecord> records;
  bool all_clean() const { return misclassifications == 0 && gap_violations == 0; }
};

// Samples seeded perturbations q with certified C1 norm <= perturb_scale,
// sets g = f + q and checks the threshold dichotomy at every member
// n = a(k), k >= 2, of the prefix and at sampled non-member integers.
// Violations are recorded, never thrown.
DerivativeHarnessReport robust_derivative_harness(
    const RobustSeries& series, std::uint64_t trials,
    const Dyadic& perturb_scale, std::uint64_t seed,
    std::size_t nonmember_samples = 8, std::size_t max_records = 4096);

}  // namespace ncl
