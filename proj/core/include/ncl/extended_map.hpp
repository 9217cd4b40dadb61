#pragma once

#include <array>

#include "ncl/encoding.hpp"
#include "ncl/interval.hpp"

namespace ncl {

using IVec3 = std::array<Interval, 3>;
using DyVec3 = std::array<Dyadic, 3>;

IVec3 ivec3_point(const DyVec3& p);
DyVec3 dyvec3_from_encoded(const EncodedConfig& e);
// sup-norm distance between dyadic points.
Dyadic dyvec3_dist(const DyVec3& a, const DyVec3& b);
// Upper/lower bounds of the sup-norm distance between interval boxes.
Dyadic ivec3_dist_hi(const IVec3& a, const IVec3& b);
Dyadic ivec3_dist_lo(const IVec3& a, const IVec3& b);
Dyadic ivec3_width(const IVec3& a);

// 1-D plateau bump: 1 for |t| <= 1/4, 0 for |t| >= 1/2, a smooth monotone
// step in between. The plateau and support tests are exact dyadic
// comparisons, so enclosures are exactly 0 or exactly 1 there.
Interval plateau_bump(const Interval& t, std::size_t prec_bits = 64);
// Certified sup of |d/dt plateau_bump|.
Dyadic plateau_bump_deriv_sup_bound();

// Smooth extension of the machine transition map to R^3:
//   f(x) = sum_{c in N^3} f_M(c) * B(x - c),
// with B the coordinatewise product of plateau bumps. f is locally
// constant on the boxes ||x - c|| <= 1/4 (sup norm), so the contraction
// contract ||f(x) - f(x0)|| <= lambda ||x - x0|| holds there for every
// lambda >= 0; the nominal lambda carried here only feeds harness
// parameter arithmetic. The analytic extension this stands in for is out
// of scope; every quantitative property exercised downstream depends only
// on the plateau/contraction contract.
class ExtendedMap {
 public:
  explicit ExtendedMap(MachineSpec machine,
                       Dyadic lambda = Dyadic::from_mantissa_exp(BigInt(1), -1));

  const ConfigCodec& codec() const { return codec_; }
  const Dyadic& lambda() const { return lambda_; }

  // Sound enclosure; exact (zero-width) on plateaus.
  IVec3 eval(const IVec3& x, std::size_t prec_bits = 64) const;

  // Certified bound for sup ||Df||_inf over the box.
  Dyadic derivative_bound(const IVec3& box, std::size_t prec_bits = 48) const;

 private:
  ConfigCodec codec_;
  Dyadic lambda_;
};

}  // namespace ncl
