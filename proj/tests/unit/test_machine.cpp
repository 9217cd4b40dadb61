#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ncl/dovetail.hpp"

using namespace ncl;

namespace {

// Unary incrementer: run right over the 1s, append a 1, halt.
MachineSpec incrementer() {
  using Row = std::vector<Transition>;
  return MachineSpec::make(
      "incrementer", {"halt", "q1"}, {"_", "1"}, 1,
      {Row{{0, 1, Move::Stay}, {1, 1, Move::Right}}});
}

}  // namespace

TEST_CASE("tm_step: hand-simulated incrementer on \"1\"") {
  const MachineSpec M = incrementer();
  Configuration c = unary_input(M, 1);
  CHECK(c.left.empty());
  CHECK(c.right == std::vector<std::uint16_t>{1});

  c = tm_step(M, c);  // moved right over the 1
  CHECK(c.left == std::vector<std::uint16_t>{1});
  CHECK(c.right.empty());
  CHECK(c.state == 1);

  c = tm_step(M, c);  // writes the new 1 and halts
  CHECK(c.state == MachineSpec::kHaltState);
  CHECK(c.left == std::vector<std::uint16_t>{1});
  CHECK(c.right == std::vector<std::uint16_t>{1});  // tape now "11"
}

TEST_CASE("tm_step on a halted configuration throws") {
  const MachineSpec M = incrementer();
  Configuration c = unary_input(M, 1);
  c.state = MachineSpec::kHaltState;
  CHECK_THROWS_AS(tm_step(M, c), AlreadyHalted);
}

TEST_CASE("canonical stripping when a right-mover crosses blanks") {
  const MachineSpec M = MachineSpec::right_runner();
  Configuration c = initial_config(M, {});
  const Configuration n = tm_step(M, c);
  // Moving right over an all-blank tape leaves the canonical form fixed.
  CHECK(n.left.empty());
  CHECK(n.right.empty());
  CHECK(n.state == 1);
}

TEST_CASE("halts_within") {
  CHECK(halts_within(MachineSpec::halt_now(),
                     initial_config(MachineSpec::halt_now(), {}), 0)
            .halted);
  CHECK(halts_within(MachineSpec::halt_now(),
                     initial_config(MachineSpec::halt_now(), {}), 0)
            .step == 0);

  const auto looper = MachineSpec::looper();
  CHECK_FALSE(halts_within(looper, initial_config(looper, {}), 1000000).halted);

  const auto inc = incrementer();
  const HaltStatus hs = halts_within(inc, unary_input(inc, 1), 100);
  CHECK(hs.halted);
  CHECK(hs.step == 2);
}

TEST_CASE("machine JSON round trip") {
  const MachineSpec M = MachineSpec::zigzag();
  const std::string text = M.to_json();
  const MachineSpec back = MachineSpec::from_json(text);
  CHECK(back.name() == M.name());
  CHECK(back.state_count() == M.state_count());
  CHECK(back.alphabet_size() == M.alphabet_size());
  // Behavioral equality along a run.
  Configuration a = initial_config(M, {});
  Configuration b = initial_config(back, {});
  for (int i = 0; i < 5 && a.state != MachineSpec::kHaltState; ++i) {
    a = tm_step(M, a);
    b = tm_step(back, b);
    CHECK(a == b);
  }
}

TEST_CASE("malformed machine JSON is rejected") {
  CHECK_THROWS_AS(MachineSpec::from_json("{"), Error);
  CHECK_THROWS_AS(MachineSpec::from_json(R"({"format_version":1})"), Error);
  //

  // Non-total table.
  CHECK_THROWS_AS(MachineSpec::from_json(R"({
    "name": "x", "blank": "_", "alphabet": ["_", "1"],
    "states": ["halt", "q1"], "start": "q1",
    "transitions": [{"from": ["q1", "_"], "to": ["halt", "_", "S"]}]
  })"),
                  Error);
}

TEST_CASE("dovetail: budget zero gives the empty prefix") {
  CHECK(dovetail_enumerate(ToyFamily{}, 0).empty());
}

TEST_CASE("dovetail on the toy family finds exactly {2, 5}") {
  const ToyFamily toy;
  // Exhaustive oracle: which programs halt on their own input within 10
  // steps.
  std::vector<std::uint64_t> halting;
  for (std::uint64_t m = 0; m < 6; ++m) {
    if (halts_within(toy.machine(m), toy.input(m), 10).halted)
      halting.push_back(m);
  }
  CHECK(halting == std::vector<std::uint64_t>{2, 5});

  const EnumerationPrefix p = dovetail_enumerate(toy, 100000);
  CHECK(p.values() == std::vector<std::uint64_t>{2, 5});
}

TEST_CASE("dovetail budget growth only appends") {
  const ToyFamily toy;
  EnumerationPrefix prev = dovetail_enumerate(toy, 0);
  for (std::uint64_t budget : {5ull, 20ull, 60ull, 200ull, 2000ull, 40000ull}) {
    const EnumerationPrefix cur = dovetail_enumerate(toy, budget);
    REQUIRE(cur.size() >= prev.size());
    for (std::size_t i = 0; i < prev.size(); ++i)
      CHECK(cur.value(i) == prev.value(i));
    prev = cur;
  }
}

TEST_CASE("dovetail is deterministic and injective, and members halt") {
  const GodelFamily god;
  const EnumerationPrefix a = dovetail_enumerate(god, 30000);
  const EnumerationPrefix b = dovetail_enumerate(god, 30000);
  CHECK(a.values() == b.values());
  CHECK(a.size() >= 10);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i + 1; j < a.size(); ++j)
      CHECK(a.value(i) != a.value(j));
    // Soundness: every enumerated program really halts on its own input.
    const auto m = a.value(i);
    CHECK(halts_within(god.machine(m), god.input(m), 30000).halted);
  }
}

TEST_CASE("godel prefixes are monotone under budget too") {
  const GodelFamily god;
  const EnumerationPrefix small = dovetail_enumerate(god, 4000);
  const EnumerationPrefix large = dovetail_enumerate(god, 16000);
  REQUIRE(large.size() >= small.size());
  for (std::size_t i = 0; i < small.size(); ++i)
    CHECK(large.value(i) == small.value(i));
}
