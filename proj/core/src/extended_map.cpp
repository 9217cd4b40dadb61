#include "ncl/extended_map.hpp"

#include <vector>

#include "ncl/bump.hpp"

namespace ncl {

namespace {
const Dyadic kQuarter = Dyadic::from_mantissa_exp(BigInt(1), -2);
const Dyadic kHalf = Dyadic::from_mantissa_exp(BigInt(1), -1);
}  // namespace

IVec3 ivec3_point(const DyVec3& p) {
  return {Interval(p[0]), Interval(p[1]), Interval(p[2])};
}

DyVec3 dyvec3_from_encoded(const EncodedConfig& e) {
  return {Dyadic(static_cast<long long>(e.y1)),
          Dyadic(static_cast<long long>(e.y2)),
          Dyadic(static_cast<long long>(e.y3))};
}

Dyadic dyvec3_dist(const DyVec3& a, const DyVec3& b) {
  Dyadic m{0};
  for (int i = 0; i < 3; ++i) m = max(m, (a[i] - b[i]).abs());
  return m;
}

Dyadic ivec3_dist_hi(const IVec3& a, const IVec3& b) {
  Dyadic m{0};
  for (int i = 0; i < 3; ++i) m = max(m, (a[i] - b[i]).mag());
  return m;
}

Dyadic ivec3_dist_lo(const IVec3& a, const IVec3& b) {
  // Lower bound of max_i |a_i - b_i| over all selections: per coordinate
  // the minimum of |a_i - b_i| is 0 when the difference straddles 0.
  Dyadic m{0};
  for (int i = 0; i < 3; ++i) {
    const Interval d = a[i] - b[i];
    Dyadic lo{0};
    if (!d.contains(Dyadic(0))) lo = min(d.lo().abs(), d.hi().abs());
    m = max(m, lo);
  }
  return m;
}

Dyadic ivec3_width(const IVec3& a) {
  Dyadic m{0};
  for (int i = 0; i < 3; ++i) m = max(m, a[i].width());
  return m;
}

Interval plateau_bump(const Interval& t, std::size_t prec) {
  Interval a = t;
  if (a.lo().sign() < 0 && a.hi().sign() <= 0) a = -a;
  else if (a.lo().sign() < 0)
    a = Interval(Dyadic(0), max(a.lo().abs(), a.hi()));
  if (a.lo() >= kHalf) return Interval(Dyadic(0));
  if (a.hi() <= kQuarter) return Interval(Dyadic(1));
  // S(2 - 4|t|) is decreasing in |t|.
  const Interval arg = Interval(Dyadic(2)) - a.mul_pow2(2);
  return smooth_step(arg, prec);
}

Dyadic plateau_bump_deriv_sup_bound() {
  return (Dyadic(4) * smooth_step_deriv_sup_bound()).round_dir(64, RoundDir::Up);
}

ExtendedMap::ExtendedMap(MachineSpec machine, Dyadic lambda)
    : codec_(std::move(machine)), lambda_(std::move(lambda)) {
  if (!(lambda_ > Dyadic(0)) || !(lambda_ < Dyadic(1)))
    throw Error("contraction constant must lie in (0,1)");
}

namespace {

// Lattice points c in N^3 with sup-distance < 1/2 from the box.
std::vector<EncodedConfig> candidate_cells(const IVec3& x) {
  std::array<std::vector<std::uint64_t>, 3> axis;
  for (int i = 0; i < 3; ++i) {
    const BigInt lo_b = (x[i].lo() - kHalf).floor_to_int();
    const BigInt hi_b = (x[i].hi() + kHalf).floor_to_int() + 1;
    if (hi_b - lo_b > 64)
      throw Error("extended_eval: box too wide for lattice scan");
    for (BigInt c = lo_b; c <= hi_b; ++c) {
      if (c < 0) continue;
      const Dyadic cd = Dyadic::from_mantissa_exp(c, 0);
      // Keep candidates whose axis bump can be nonzero somewhere on x.
      if (cd - x[i].hi() >= kHalf || x[i].lo() - cd >= kHalf) continue;
      axis[i].push_back(c.convert_to<std::uint64_t>());
    }
  }
  std::vector<EncodedConfig> cells;
  for (auto a : axis[0])
    for (auto b : axis[1])
      for (auto c : axis[2]) cells.push_back(EncodedConfig{a, b, c});
  return cells;
}

}  // namespace

IVec3 ExtendedMap::eval(const IVec3& x, std::size_t prec) const {
  // Plateau fast path: the whole box within 1/4 of one lattice point.
  bool plateau = true;
  EncodedConfig cell;
  std::uint64_t* fields[3] = {&cell.y1, &cell.y2, &cell.y3};
  for (int i = 0; i < 3 && plateau; ++i) {
    const BigInt nearest = (x[i].mid() + kHalf).floor_to_int();
    if (nearest < 0) {
      plateau = false;
      break;
    }
    const Dyadic cd = Dyadic::from_mantissa_exp(nearest, 0);
    if ((x[i].lo() - cd).abs() <= kQuarter && (x[i].hi() - cd).abs() <= kQuarter)
      *fields[i] = nearest.convert_to<std::uint64_t>();
    else
      plateau = false;
  }
  if (plateau) {
    return ivec3_point(dyvec3_from_encoded(codec_.lattice_step(cell)));
  }

  IVec3 sum = {Interval(Dyadic(0)), Interval(Dyadic(0)), Interval(Dyadic(0))};
  for (const EncodedConfig& c : candidate_cells(x)) {
    const DyVec3 cp = dyvec3_from_encoded(c);
    Interval w(Dyadic(1));
    for (int i = 0; i < 3; ++i) {
      w = w * plateau_bump(x[i] - Interval(cp[i]), prec);
      if (w.is_zero()) break;
    }
    if (w.is_zero()) continue;
    const DyVec3 img = dyvec3_from_encoded(codec_.lattice_step(c));
    for (int i = 0; i < 3; ++i) sum[i] += w * Interval(img[i]);
  }
  return sum;
}

Dyadic ExtendedMap::derivative_bound(const IVec3& box, std::size_t prec) const {
  // Row sums of Df are bounded cellwise by ||f_M(c)||_inf * 3 sup|B'|
  // since at most the cells meeting the box contribute.
  (void)prec;
  Dyadic bound{0};
  for (const EncodedConfig& c : candidate_cells(box)) {
    const DyVec3 img = dyvec3_from_encoded(codec_.lattice_step(c));
    Dyadic mag{0};
    for (int i = 0; i < 3; ++i) mag = max(mag, img[i].abs());
    bound += mag * Dyadic(3) * plateau_bump_deriv_sup_bound();
  }
  return bound.round_dir(64, RoundDir::Up);
}

}  // namespace ncl
