#pragma once

#include <vector>

#include "ncl/extended_map.hpp"
#include "ncl/rng.hpp"

namespace ncl {

// Closed-form smooth perturbation of R^3: a constant vector plus product
// bumps v_i * B(x - t_i) with pairwise sup-separated centers, so both the
// C0 and the C1 norm have certified closed-form bounds.
struct Perturbation3D {
  struct Bump {
    DyVec3 amplitude;
    DyVec3 center;
  };

  DyVec3 constant{Dyadic(0), Dyadic(0), Dyadic(0)};
  std::vector<Bump> bumps;

  bool empty() const;
  IVec3 eval(const IVec3& x, std::size_t prec_bits = 64) const;
  // Exact zero iff x is outside every bump support (constant ignored).
  bool bump_part_vanishes_at(const DyVec3& x) const;

  Dyadic c0_norm_bound() const;  // sup ||q||_inf
  Dyadic c1_norm_bound() const;  // sup max(||q||_inf, ||Dq||_inf)

  // Scales amplitudes so c1_norm_bound() <= budget (or c0 for c0_budget).
  static Perturbation3D sample(CounterRng& rng, const Dyadic& c1_budget,
                               const std::vector<DyVec3>& anchor_points,
                               bool include_constant);
  static Perturbation3D sample_c0(CounterRng& rng, const Dyadic& c0_budget,
                                  const std::vector<DyVec3>& anchor_points);
  static Perturbation3D constant_only(const DyVec3& c);
};

// g = f + q with certified norms.
class PerturbedMap {
 public:
  PerturbedMap(ExtendedMap base, Perturbation3D q)
      : base_(std::move(base)), q_(std::move(q)) {}

  const ExtendedMap& base() const { return base_; }
  const Perturbation3D& perturbation() const { return q_; }

  IVec3 eval(const IVec3& x, std::size_t prec_bits = 64) const;
  // Difference g(x) - g(x0) evaluated with the plateau structure: the base
  // parts cancel exactly when both boxes sit in the same plateau.
  IVec3 eval_diff(const IVec3& x, const IVec3& x0,
                  std::size_t prec_bits = 64) const;

  Dyadic theta() const { return q_.c1_norm_bound(); }       // ||q||_1 bound
  Dyadic delta0() const { return q_.c0_norm_bound(); }      // ||q||_C0 bound
  const Dyadic& lambda() const { return base_.lambda(); }
  Dyadic theta_lambda() const { return theta() + lambda(); }

 private:
  ExtendedMap base_;
  Perturbation3D q_;
};

}  // namespace ncl
