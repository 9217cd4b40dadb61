#include "ncl/embed_harness.hpp"

#include <algorithm>
#include <cmath>

namespace ncl {

namespace {

const Dyadic kQuarter = Dyadic::from_mantissa_exp(BigInt(1), -2);

// Slightly shrunk copy of a double bound, so sampled quantities stay
// strictly inside the stated budget and interval slack cannot flip a
// legitimate run into a violation.
Dyadic shrink(const Dyadic& d) {
  return (d * Dyadic::from_mantissa_exp(BigInt(4095), -12)).round_dir(64, RoundDir::Down);
}

Configuration random_configuration(const MachineSpec& M, CounterRng& rng) {
  Configuration c;
  const auto rand_word = [&](std::size_t max_len) {
    std::vector<std::uint16_t> w;
    const std::size_t len = rng.uniform_int(0, max_len);
    for (std::size_t i = 0; i < len; ++i) {
      w.push_back(static_cast<std::uint16_t>(
          rng.uniform_int(0, M.alphabet_size() - 1)));
    }
    return w;
  };
  c.left = rand_word(4);
  c.right = rand_word(5);
  c.state = static_cast<std::uint16_t>(rng.uniform_int(0, M.state_count() - 1));
  c.canonicalize();
  return c;
}

DyVec3 random_offset(CounterRng& rng, const Dyadic& radius) {
  DyVec3 o;
  for (int i = 0; i < 3; ++i) {
    o[i] = (radius * Dyadic::from_double(rng.uniform(-1.0, 1.0)))
               .round_dir(48, RoundDir::Down);
  }
  return o;
}

}  // namespace

std::vector<IVec3> iterate(const PerturbedMap& g, const IVec3& x0,
                           std::size_t j, std::size_t prec) {
  std::vector<IVec3> orbit;
  orbit.reserve(j + 1);
  orbit.push_back(x0);
  for (std::size_t i = 1; i <= j; ++i) {
    orbit.push_back(g.eval(orbit.back(), prec));
    if (ivec3_width(orbit.back()) > Dyadic(1)) throw WidthBlowup(i);
  }
  return orbit;
}

Prop1Report proposition1_harness(const MachineSpec& machine, double delta,
                                 double epsilon, std::uint64_t trials,
                                 std::size_t j_max, std::uint64_t seed) {
  if (!(0 <= delta && delta < epsilon && epsilon < 0.5))
    throw Error("proposition1_harness needs 0 <= delta < epsilon < 1/2");
  if (epsilon > 0.25)
    throw Error("plateau compatibility needs epsilon <= 1/4");

  Prop1Report rep;
  rep.delta = delta;
  rep.epsilon = epsilon;
  rep.trials = trials;
  rep.j_max = j_max;
  rep.seed = seed;

  const ExtendedMap base(machine);
  const ConfigCodec& codec = base.codec();
  const Dyadic eps_d = Dyadic::from_double(epsilon);
  const Dyadic delta_d = shrink(Dyadic::from_double(delta));
  const Dyadic eps_inner = shrink(eps_d);
  CounterRng root(seed);

  for (std::uint64_t trial = 0; trial < trials; ++trial) {
    CounterRng rng = root.fork(trial);
    const Configuration c0 = random_configuration(machine, rng);
    EncodedConfig e = codec.encode(c0);

    // Exact reference orbit of the lattice map.
    std::vector<DyVec3> reference;
    reference.reserve(j_max + 1);
    reference.push_back(dyvec3_from_encoded(e));
    EncodedConfig cur = e;
    std::vector<DyVec3> anchors;
    for (std::size_t j = 1; j <= j_max; ++j) {
      cur = codec.lattice_step(cur);
      reference.push_back(dyvec3_from_encoded(cur));
      if (anchors.size() < 4) anchors.push_back(reference.back());
    }

    const Perturbation3D q =
        delta > 0 ? Perturbation3D::sample_c0(rng, delta_d, anchors)
                  : Perturbation3D{};
    const PerturbedMap g(ExtendedMap(machine), q);

    const DyVec3 offset = random_offset(rng, eps_inner);
    const DyVec3 start = {reference[0][0] + offset[0],
                          reference[0][1] + offset[1],
                          reference[0][2] + offset[2]};

    TrackingTrial tr;
    tr.trial = trial;
    tr.machine = machine.name();
    IVec3 x = ivec3_point(start);
    for (std::size_t j = 0; j <= j_max; ++j) {
      if (j > 0) x = g.eval(x);
      const Dyadic d = ivec3_dist_hi(x, ivec3_point(reference[j]));
      tr.worst_distance = std::max(tr.worst_distance, d.to_double());
      if (d > eps_d) ++tr.violations;
    }
    rep.violations += tr.violations;
    rep.worst_distance = std::max(rep.worst_distance, tr.worst_distance);
    if (rep.per_trial.size() < 1024) rep.per_trial.push_back(std::move(tr));
  }
  return rep;
}

ContractionReport contraction_check(const PerturbedMap& g,
                                    std::uint64_t samples, std::uint64_t seed) {
  ContractionReport rep;
  rep.theta = g.theta().to_double();
  rep.lambda = g.lambda().to_double();
  rep.samples = samples;
  rep.seed = seed;

  const ConfigCodec& codec = g.base().codec();
  const Dyadic theta_lambda = g.theta_lambda();
  CounterRng root(seed);
  for (std::uint64_t i = 0; i < samples; ++i) {
    CounterRng rng = root.fork(i);
    const Configuration c = random_configuration(codec.machine(), rng);
    const DyVec3 x0 = dyvec3_from_encoded(codec.encode(c));
    DyVec3 x = x0;
    if (i % 16 != 0) {  // keep a few exact x == x0 cases in the mix
      const DyVec3 off = random_offset(rng, kQuarter);
      for (int j = 0; j < 3; ++j) x[j] = x0[j] + off[j];
    }
    const Dyadic dist = dyvec3_dist(x, x0);
    const IVec3 diff = g.eval_diff(ivec3_point(x), ivec3_point(x0));
    Dyadic lhs{0};
    for (int j = 0; j < 3; ++j) lhs = max(lhs, diff[j].mag());
    const Dyadic rhs = theta_lambda * dist;
    if (lhs > rhs) ++rep.violations;
    if (!dist.is_zero()) {
      rep.worst_quotient = std::max(
          rep.worst_quotient, lhs.to_double() / dist.to_double());
    }
  }
  return rep;
}

SinkLocation sink_locate(const PerturbedMap& g, std::uint64_t k,
                         std::size_t prec) {
  const Dyadic theta_lambda = g.theta_lambda();
  if (theta_lambda >= Dyadic(1))
    throw NoContractionCertificate(
        "theta + lambda = " + std::to_string(theta_lambda.to_double()) +
        " >= 1");
  // Self-map certificate for the closed 1/4-ball around s: on the plateau
  // g(x) = s + q(x), so ||q||_C0 <= 1/4 suffices.
  if (g.delta0() > kQuarter)
    throw NoContractionCertificate("||q|| exceeds the plateau radius 1/4");

  IVec3 x = ivec3_point({Dyadic(0), Dyadic(0), Dyadic(0)});
  Dyadic contraction_tail = kQuarter;  // theta_lambda^m * 1/4
  const Dyadic target = Dyadic::div_uint_dir(Dyadic(1), std::max<std::uint64_t>(k, 1) * 4,
                                             48, RoundDir::Down);
  for (int m = 0; m < 512; ++m) {
    if (contraction_tail < target) break;
    x = g.eval(x, prec);
    contraction_tail = (contraction_tail * theta_lambda).round_dir(64, RoundDir::Up);
  }

  SinkLocation loc;
  for (int i = 0; i < 3; ++i) loc.point[i] = x[i].mid();
  loc.error_bound =
      (ivec3_width(x) + contraction_tail).round_dir(64, RoundDir::Up);
  const DyVec3 s{Dyadic(0), Dyadic(0), Dyadic(0)};
  loc.dist_to_halt =
      (dyvec3_dist(loc.point, s) + loc.error_bound).round_dir(64, RoundDir::Up);
  const IVec3 img = g.eval(ivec3_point(loc.point), prec);
  loc.residual = ivec3_dist_hi(img, ivec3_point(loc.point));
  loc.k = k;
  loc.k_certified =
      k > 0 && loc.dist_to_halt * Dyadic(static_cast<long long>(k)) < Dyadic(1);
  return loc;
}

BasinVsHalting basin_vs_halting(const PerturbedMap& g, const Configuration& c,
                                std::size_t horizon, const Dyadic& epsilon,
                                std::size_t prec) {
  const double eps = epsilon.to_double();
  const auto k = static_cast<std::uint64_t>(std::ceil(20.0 / eps));
  const SinkLocation sg = sink_locate(g, k, prec);

  BasinVsHalting out;
  out.min_distance = std::numeric_limits<double>::infinity();
  IVec3 x = ivec3_point(dyvec3_from_encoded(g.base().codec().encode(c)));
  const IVec3 sg_point = ivec3_point(sg.point);
  for (std::size_t j = 0; j <= horizon; ++j) {
    if (j > 0) x = g.eval(x, prec);
    const Dyadic hi = ivec3_dist_hi(x, sg_point) + sg.error_bound;
    Dyadic lo = ivec3_dist_lo(x, sg_point) - sg.error_bound;
    if (lo.sign() < 0) lo = Dyadic(0);
    out.min_distance = std::min(out.min_distance, lo.to_double());
    if (hi * Dyadic(5) < epsilon) {
      out.attracted = true;
      out.step = j;
      return out;
    }
  }
  return out;
}

}  // namespace ncl
