#include "ncl/dovetail.hpp"

#include <unordered_set>

namespace ncl {

MachineSpec ToyFamily::machine(std::uint64_t m) const {
  switch (m) {
    case 0: return MachineSpec::looper();
    case 1: return MachineSpec::right_runner();
    case 2: return MachineSpec::eraser();
    case 3: return MachineSpec::two_phase_writer();
    case 4: return MachineSpec::left_runner();
    case 5: return MachineSpec::zigzag();
    default: return MachineSpec::looper();
  }
}

Configuration ToyFamily::input(std::uint64_t m) const {
  return unary_input(machine(m), m);
}

namespace {

// Number of S-state 2-symbol tables: every (state, symbol) entry picks
// (next_state, write, move) from (S+1)*2*3 options.
BigInt table_count(unsigned S) {
  BigInt base = 6 * (S + 1);
  BigInt n = 1;
  for (unsigned i = 0; i < 2 * S; ++i) n *= base;
  return n;
}

}  // namespace

MachineSpec GodelFamily::machine(std::uint64_t m) const {
  BigInt rest = m;
  unsigned S = 1;
  while (rest >= table_count(S)) {
    rest -= table_count(S);
    ++S;
  }
  const BigInt base = 6 * (S + 1);
  std::vector<std::string> states = {"halt"};
  for (unsigned i = 1; i <= S; ++i) states.push_back("q" + std::to_string(i));
  std::vector<std::vector<Transition>> table(S);
  for (unsigned i = 0; i < S; ++i) {
    table[i].resize(2);
    for (unsigned j = 0; j < 2; ++j) {
      const BigInt d = rest % base;
      rest /= base;
      const auto dv = d.convert_to<std::uint64_t>();
      const auto next = static_cast<std::uint16_t>(dv % (S + 1));
      const auto write = static_cast<std::uint16_t>((dv / (S + 1)) % 2);
      const auto mv = static_cast<std::uint8_t>(dv / (2 * (S + 1)));
      table[i][j] = Transition{next, write,
                               mv == 0 ? Move::Left
                                       : (mv == 1 ? Move::Right : Move::Stay)};
    }
  }
  return MachineSpec::make("godel_" + std::to_string(m), std::move(states),
                           {"_", "1"}, 1, std::move(table));
}

Configuration GodelFamily::input(std::uint64_t m) const {
  return unary_input(machine(m), m);
}

std::unique_ptr<MachineFamily> family_by_name(const std::string& name) {
  if (name == "toy") return std::make_unique<ToyFamily>();
  if (name == "godel") return std::make_unique<GodelFamily>();
  throw Error("unknown machine family '" + name + "'");
}

EnumerationPrefix dovetail_enumerate(const MachineFamily& family,
                                     std::uint64_t budget) {
  std::vector<std::uint64_t> values;
  std::unordered_set<std::uint64_t> done;
  std::uint64_t steps_left = budget;
  for (std::uint64_t stage = 1; steps_left > 0 && stage <= budget + 1; ++stage) {
    for (std::uint64_t m = 0; m <= stage; ++m) {
      if (done.count(m)) continue;
      const MachineSpec M = family.machine(m);
      Configuration c = family.input(m);
      bool halted = (c.state == MachineSpec::kHaltState);
      for (std::uint64_t t = 0; t < stage && !halted; ++t) {
        if (steps_left == 0)
          return EnumerationPrefix::from_values(std::move(values),
                                                family.name(), budget);
        c = tm_step(M, c);
        --steps_left;
        halted = (c.state == MachineSpec::kHaltState);
      }
      if (halted) {
        values.push_back(m);
        done.insert(m);
      }
    }
  }
  return EnumerationPrefix::from_values(std::move(values), family.name(),
                                        budget);
}

}  // namespace ncl
