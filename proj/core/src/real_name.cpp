#include "ncl/real_name.hpp"

#include "ncl/errors.hpp"

namespace ncl {

Interval RealName::enclosure(unsigned k) const {
  const Dyadic r = fn_(k);
  const Dyadic e = Dyadic::pow2(-static_cast<long>(k));
  return Interval(r - e, r + e);
}

void RealName::check_consistency(unsigned k) const {
  const Dyadic gap = (fn_(k) - fn_(k + 1)).abs();
  const Dyadic allowed =
      Dyadic::pow2(-static_cast<long>(k)) + Dyadic::pow2(-static_cast<long>(k) - 1);
  if (gap > allowed) throw ConsistencyViolation(k);
}

RealName name_from_cauchy(RealName::ApproxFn f, bool modulus_asserted) {
  if (!modulus_asserted)
    throw Error("name_from_cauchy requires the caller to assert the modulus");
  RealName name(std::move(f));
  for (unsigned k = 0; k < 4; ++k) name.check_consistency(k);
  return name;
}

LeftRealApprox LeftRealApprox::from_prefix_sum(EnumerationPrefix prefix,
                                               unsigned shift) {
  return LeftRealApprox([prefix = std::move(prefix), shift](std::size_t M) {
    return partial_sum(prefix, M, shift);
  });
}

Dyadic LeftRealApprox::lower_bound(std::size_t M) const {
  const Dyadic s = fn_(M);
  if (M > 0 && fn_(M - 1) > s)
    throw Error("left-computable bounds decreased at M=" + std::to_string(M));
  return s;
}

}  // namespace ncl
