#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ncl/perturbation.hpp"
#include "ncl/rng.hpp"

using namespace ncl;

namespace {

Configuration random_canonical(const MachineSpec& M, CounterRng& rng) {
  Configuration c;
  for (int side = 0; side < 2; ++side) {
    auto& word = side == 0 ? c.left : c.right;
    const std::size_t len = rng.uniform_int(0, 5);
    for (std::size_t i = 0; i < len; ++i)
      word.push_back(static_cast<std::uint16_t>(
          rng.uniform_int(0, M.alphabet_size() - 1)));
  }
  c.state = static_cast<std::uint16_t>(rng.uniform_int(0, M.state_count() - 1));
  c.canonicalize();
  return c;
}

}  // namespace

TEST_CASE("halting configuration encodes to the origin") {
  const ConfigCodec codec(MachineSpec::zigzag());
  Configuration halt;
  halt.state = MachineSpec::kHaltState;
  CHECK(codec.encode(halt) == EncodedConfig{0, 0, 0});
  CHECK(codec.decode(EncodedConfig{0, 0, 0}) == halt);
}

TEST_CASE("empty tape in the start state encodes to (0, 0, 1)") {
  const ConfigCodec codec(MachineSpec::zigzag());
  CHECK(codec.base() == 4);  // alphabet {_, 1, 2}
  const Configuration c = initial_config(codec.machine(), {});
  CHECK(codec.encode(c) == EncodedConfig{0, 0, 1});
}

TEST_CASE("positional encoding example in base 4") {
  const ConfigCodec codec(MachineSpec::zigzag());
  Configuration c;
  c.right = {2, 1};  // head reads '2', then '1'
  c.state = 2;       // q2
  c.canonicalize();
  const EncodedConfig e = codec.encode(c);
  CHECK(e.y1 == 2 + 1 * 4);
  CHECK(e.y2 == 0);
  CHECK(e.y3 == 2);
}

TEST_CASE("codec round trip on random canonical configurations") {
  for (const auto& M : {MachineSpec::zigzag(), MachineSpec::eraser(),
                        MachineSpec::looper()}) {
    const ConfigCodec codec(M);
    CounterRng rng(61);
    for (int i = 0; i < 10000; ++i) {
      const Configuration c = random_canonical(M, rng);
      CHECK(codec.decode(codec.encode(c)) == c);
    }
  }
}

TEST_CASE("decode rejects malformed triples") {
  const ConfigCodec codec(MachineSpec::zigzag());
  CHECK_THROWS_AS(codec.decode(EncodedConfig{0, 0, 99}), InvalidEncoding);
  // Digit 3 = base-1 is reserved and never a symbol.
  CHECK_THROWS_AS(codec.decode(EncodedConfig{3, 0, 1}), InvalidEncoding);
  CHECK(codec.valid(EncodedConfig{6, 0, 2}));
  CHECK_FALSE(codec.valid(EncodedConfig{3, 0, 1}));
}

TEST_CASE("fm_step equals encode after tm_step") {
  for (const auto& M : {MachineSpec::zigzag(), MachineSpec::eraser(),
                        MachineSpec::looper()}) {
    const ConfigCodec codec(M);
    CounterRng rng(62);
    for (int i = 0; i < 1000; ++i) {
      const Configuration c = random_canonical(M, rng);
      const EncodedConfig stepped = codec.fm_step(codec.encode(c));
      if (c.state == MachineSpec::kHaltState) {
        CHECK(stepped == codec.encode(c));  // halting configs are fixed
      } else {
        CHECK(stepped == codec.encode(tm_step(M, c)));
      }
    }
  }
}

TEST_CASE("fm_step fixes the origin and the pre-halt step lands there") {
  const MachineSpec M = MachineSpec::zigzag();
  const ConfigCodec codec(M);
  CHECK(codec.fm_step(EncodedConfig{0, 0, 0}) == EncodedConfig{0, 0, 0});
  // Run from the empty tape to one step before halting.
  Configuration c = initial_config(M, {});
  Configuration prev = c;
  while (c.state != MachineSpec::kHaltState) {
    prev = c;
    c = tm_step(M, c);
  }
  CHECK(codec.fm_step(codec.encode(prev)) == EncodedConfig{0, 0, 0});
}

TEST_CASE("extended map restriction identity is exact") {
  for (const auto& M : {MachineSpec::zigzag(), MachineSpec::eraser(),
                        MachineSpec::looper()}) {
    const ExtendedMap ext(M);
    CounterRng rng(63);
    for (int i = 0; i < 500; ++i) {
      const Configuration c = random_canonical(M, rng);
      const EncodedConfig e = ext.codec().encode(c);
      const IVec3 img = ext.eval(ivec3_point(dyvec3_from_encoded(e)));
      const EncodedConfig want = ext.codec().lattice_step(e);
      CHECK(ivec3_width(img).is_zero());
      CHECK(img[0].lo() == Dyadic(static_cast<long long>(want.y1)));
      CHECK(img[1].lo() == Dyadic(static_cast<long long>(want.y2)));
      CHECK(img[2].lo() == Dyadic(static_cast<long long>(want.y3)));
    }
  }
}

TEST_CASE("plateau constancy at distance 1/8") {
  const ExtendedMap ext(MachineSpec::eraser());
  const EncodedConfig e = ext.codec().encode(unary_input(ext.codec().machine(), 2));
  const DyVec3 p = dyvec3_from_encoded(e);
  const Dyadic eighth = Dyadic::pow2(-3);
  const IVec3 x = {Interval(p[0] + eighth), Interval(p[1] - eighth),
                   Interval(p[2] + eighth)};
  const IVec3 img = ext.eval(x);
  const EncodedConfig want = ext.codec().lattice_step(e);
  CHECK(ivec3_width(img).is_zero());
  CHECK(img[0].lo() == Dyadic(static_cast<long long>(want.y1)));
}

TEST_CASE("between plateaus the enclosure covers dense sampling") {
  const MachineSpec M = MachineSpec::eraser();
  const ExtendedMap ext(M);
  const ConfigCodec& codec = ext.codec();
  // A segment between the lattice points (0,0,1) and (1,0,1).
  const auto sample_f = [&](double x0) {
    // Double-precision rendition of the blend sum_c f_M(c) B(x - c).
    const auto beta = [](double t) {
      t = std::abs(t);
      if (t <= 0.25) return 1.0;
      if (t >= 0.5) return 0.0;
      const double u = 2 - 4 * t;
      const double g = 1.0 / u - 1.0 / (1 - u);
      return 1.0 / (1.0 + std::exp(g));
    };
    std::array<double, 3> acc{0, 0, 0};
    for (std::uint64_t cx = 0; cx <= 1; ++cx) {
      const double w = beta(x0 - double(cx)) * beta(0.0) * beta(0.0);
      const EncodedConfig img = codec.lattice_step({cx, 0, 1});
      acc[0] += w * double(img.y1);
      acc[1] += w * double(img.y2);
      acc[2] += w * double(img.y3);
    }
    return acc;
  };
  for (double x0 : {0.3, 0.42, 0.5, 0.61, 0.73}) {
    const IVec3 enc = ext.eval(
        {Interval(Dyadic::from_double(x0)), Interval(Dyadic(0)),
         Interval(Dyadic(1))});
    const auto ref = sample_f(x0);
    for (int i = 0; i < 3; ++i) {
      CHECK(enc[i].lo().to_double() <= ref[i] + 1e-9);
      CHECK(enc[i].hi().to_double() >= ref[i] - 1e-9);
    }
  }
}

TEST_CASE("derivative bound is finite and positive where the map varies") {
  const ExtendedMap ext(MachineSpec::eraser());
  const IVec3 box = {Interval(Dyadic(0), Dyadic(1)), Interval(Dyadic(0)),
                     Interval(Dyadic(1))};
  const Dyadic b = ext.derivative_bound(box);
  CHECK(b.sign() >= 0);
  CHECK(b.to_double() < 1e6);
}

TEST_CASE("perturbation norms are certified upper bounds") {
  CounterRng rng(64);
  std::vector<DyVec3> anchors = {{Dyadic(2), Dyadic(0), Dyadic(1)},
                                 {Dyadic(5), Dyadic(1), Dyadic(2)}};
  const Perturbation3D q =
      Perturbation3D::sample(rng, Dyadic::from_double(0.2), anchors, true);
  CHECK(q.c1_norm_bound() <= Dyadic::from_double(0.2));
  CHECK(q.c0_norm_bound() <= q.c1_norm_bound());
  // Sampled values respect the C0 bound.
  for (int i = 0; i < 300; ++i) {
    const DyVec3 x = {Dyadic::from_double(rng.uniform(0, 6)),
                      Dyadic::from_double(rng.uniform(0, 2)),
                      Dyadic::from_double(rng.uniform(0, 3))};
    const IVec3 v = q.eval(ivec3_point(x));
    for (int j = 0; j < 3; ++j)
      CHECK(v[j].mag() <= q.c0_norm_bound() + Dyadic::pow2(-40));
  }
}
