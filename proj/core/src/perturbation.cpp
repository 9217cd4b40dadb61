#include "ncl/perturbation.hpp"

#include "ncl/bump.hpp"

namespace ncl {

namespace {
const Dyadic kHalf = Dyadic::from_mantissa_exp(BigInt(1), -1);
}

bool Perturbation3D::empty() const {
  return bumps.empty() && constant[0].is_zero() && constant[1].is_zero() &&
         constant[2].is_zero();
}

IVec3 Perturbation3D::eval(const IVec3& x, std::size_t prec) const {
  IVec3 sum = {Interval(constant[0]), Interval(constant[1]),
               Interval(constant[2])};
  for (const Bump& b : bumps) {
    Interval w(Dyadic(1));
    for (int i = 0; i < 3; ++i) {
      w = w * plateau_bump(x[i] - Interval(b.center[i]), prec);
      if (w.is_zero()) break;
    }
    if (w.is_zero()) continue;
    for (int i = 0; i < 3; ++i) sum[i] += w * Interval(b.amplitude[i]);
  }
  return sum;
}

bool Perturbation3D::bump_part_vanishes_at(const DyVec3& x) const {
  for (const Bump& b : bumps) {
    if (dyvec3_dist(x, b.center) < kHalf) return false;
  }
  return true;
}

Dyadic Perturbation3D::c0_norm_bound() const {
  Dyadic cmag{0};
  for (int i = 0; i < 3; ++i) cmag = max(cmag, constant[i].abs());
  Dyadic bmag{0};
  for (const Bump& b : bumps) {
    Dyadic m{0};
    for (int i = 0; i < 3; ++i) m = max(m, b.amplitude[i].abs());
    bmag = max(bmag, m);  // supports are pairwise disjoint
  }
  return cmag + bmag;
}

Dyadic Perturbation3D::c1_norm_bound() const {
  Dyadic bmag{0};
  for (const Bump& b : bumps) {
    Dyadic m{0};
    for (int i = 0; i < 3; ++i) m = max(m, b.amplitude[i].abs());
    bmag = max(bmag, m);
  }
  // ||Dq||_inf row sums: |amp_j| * 3 sup|B'| per bump, constants drop out.
  const Dyadic d1 =
      (bmag * Dyadic(3) * plateau_bump_deriv_sup_bound()).round_dir(64, RoundDir::Up);
  return max(c0_norm_bound(), d1);
}

namespace {

Dyadic random_signed_fraction(CounterRng& rng, const Dyadic& scale) {
  const double u = rng.uniform(0.25, 1.0) * (rng.next_bool() ? 1.0 : -1.0);
  return (scale * Dyadic::from_double(u)).round_dir(64, RoundDir::Down);
}

void add_separated_bumps(Perturbation3D& q, CounterRng& rng,
                         const Dyadic& amp_cap,
                         const std::vector<DyVec3>& anchors) {
  const std::size_t want = anchors.empty() ? 0 : 1 + rng.uniform_int(0, 2);
  for (std::size_t i = 0; i < want; ++i) {
    const DyVec3& a = anchors[rng.uniform_int(0, anchors.size() - 1)];
    // Offset the center a little off the lattice point.
    DyVec3 center;
    for (int j = 0; j < 3; ++j) {
      center[j] =
          a[j] + Dyadic::from_double(rng.uniform(-0.3, 0.3)).round_dir(20, RoundDir::Down);
    }
    bool separated = true;
    for (const auto& b : q.bumps) {
      if (dyvec3_dist(center, b.center) < Dyadic(1)) {
        separated = false;
        break;
      }
    }
    if (!separated) continue;
    q.bumps.push_back({{random_signed_fraction(rng, amp_cap),
                        random_signed_fraction(rng, amp_cap),
                        random_signed_fraction(rng, amp_cap)},
                       center});
  }
}

}  // namespace

Perturbation3D Perturbation3D::sample(CounterRng& rng, const Dyadic& c1_budget,
                                      const std::vector<DyVec3>& anchors,
                                      bool include_constant) {
  Perturbation3D q;
  // Split the budget: constant part + bump part stay below c1_budget.
  const Dyadic half_budget = c1_budget.mul_pow2(-1);
  if (include_constant) {
    for (int i = 0; i < 3; ++i)
      q.constant[i] = random_signed_fraction(rng, half_budget);
  }
  const Dyadic amp_cap = Dyadic::div_dir(
      half_budget, Dyadic(3) * plateau_bump_deriv_sup_bound(), 64, RoundDir::Down);
  add_separated_bumps(q, rng, amp_cap, anchors);
  return q;
}

Perturbation3D Perturbation3D::sample_c0(CounterRng& rng,
                                         const Dyadic& c0_budget,
                                         const std::vector<DyVec3>& anchors) {
  Perturbation3D q;
  const Dyadic half = c0_budget.mul_pow2(-1);
  for (int i = 0; i < 3; ++i) q.constant[i] = random_signed_fraction(rng, half);
  add_separated_bumps(q, rng, half, anchors);
  return q;
}

Perturbation3D Perturbation3D::constant_only(const DyVec3& c) {
  Perturbation3D q;
  q.constant = c;
  return q;
}

IVec3 PerturbedMap::eval(const IVec3& x, std::size_t prec) const {
  const IVec3 f = base_.eval(x, prec);
  const IVec3 qv = q_.eval(x, prec);
  return {f[0] + qv[0], f[1] + qv[1], f[2] + qv[2]};
}

IVec3 PerturbedMap::eval_diff(const IVec3& x, const IVec3& x0,
                              std::size_t prec) const {
  const IVec3 fx = base_.eval(x, prec);
  const IVec3 fx0 = base_.eval(x0, prec);
  IVec3 out;
  bool same_point = true;
  for (int i = 0; i < 3; ++i) {
    if (!(x[i].is_point() && x0[i].is_point() && x[i].lo() == x0[i].lo()))
      same_point = false;
  }
  for (int i = 0; i < 3; ++i) {
    const Interval base_diff = fx[i] - fx0[i];
    out[i] = base_diff;
  }
  if (!same_point) {
    const IVec3 qx = q_.eval(x, prec);
    const IVec3 qx0 = q_.eval(x0, prec);
    for (int i = 0; i < 3; ++i) out[i] += qx[i] - qx0[i];
  }
  return out;
}

}  // namespace ncl
