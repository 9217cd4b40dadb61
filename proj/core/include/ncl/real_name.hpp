#pragma once

#include <functional>

#include "ncl/enumeration.hpp"
#include "ncl/interval.hpp"

namespace ncl {

// A name of a real x: k -> r_k with |x - r_k| <= 2^-k. The consistency
// invariant |r_k - r_{k+1}| <= 2^-k + 2^-(k+1) is checkable on demand.
class RealName {
 public:
  using ApproxFn = std::function<Dyadic(unsigned)>;

  Dyadic approx(unsigned k) const { return fn_(k); }
  Interval enclosure(unsigned k) const;

  // Throws ConsistencyViolation(k) if the sampled pair violates the modulus.
  void check_consistency(unsigned k) const;

  friend RealName name_from_cauchy(ApproxFn f, bool modulus_asserted);

 private:
  explicit RealName(ApproxFn fn) : fn_(std::move(fn)) {}
  ApproxFn fn_;
};

// Wraps an approximation function into a RealName. The caller asserts the
// 2^-k modulus; the first few consistency pairs are spot-checked eagerly.
RealName name_from_cauchy(RealName::ApproxFn f, bool modulus_asserted = true);

// Left-computable real: nondecreasing dyadic lower bounds s_M, with no
// upper-bound guarantee.
class LeftRealApprox {
 public:
  using LowerBoundFn = std::function<Dyadic(std::size_t)>;

  explicit LeftRealApprox(LowerBoundFn fn) : fn_(std::move(fn)) {}

  static LeftRealApprox from_prefix_sum(EnumerationPrefix prefix,
                                        unsigned shift = 0);

  Dyadic lower_bound(std::size_t M) const;  // checks monotonicity vs M-1

 private:
  LowerBoundFn fn_;
};

}  // namespace ncl
