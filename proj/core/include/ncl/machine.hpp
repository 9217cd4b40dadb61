#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ncl/errors.hpp"

namespace ncl {

enum class Move : std::uint8_t { Left, Right, Stay };

struct Transition {
  std::uint16_t next_state;
  std::uint16_t write;
  Move move;
};

// Deterministic single-tape machine. State 0 is the halt state (no outgoing
// transitions); the transition table is total on the remaining states.
// Symbol 0 is the blank. Machines used by the dynamical-system embedding
// are additionally expected to erase their tape before halting, so the
// halting configuration is the unique all-blank one; that property is
// checked empirically where it matters, not enforced here.
class MachineSpec {
 public:
  static constexpr std::uint16_t kHaltState = 0;

  static MachineSpec make(std::string name, std::vector<std::string> states,
                          std::vector<std::string> alphabet,
                          std::uint16_t start_state,
                          std::vector<std::vector<Transition>> table);

  const std::string& name() const { return name_; }
  std::uint16_t state_count() const { return static_cast<std::uint16_t>(states_.size()); }
  std::uint16_t alphabet_size() const { return static_cast<std::uint16_t>(alphabet_.size()); }
  std::uint16_t start_state() const { return start_; }
  const std::string& state_name(std::uint16_t s) const { return states_[s]; }
  const std::string& symbol_name(std::uint16_t a) const { return alphabet_[a]; }

  const Transition& transition(std::uint16_t state, std::uint16_t symbol) const;

  std::string to_json() const;
  static MachineSpec from_json(const std::string& text);
  static MachineSpec load_file(const std::string& path);
  void save_file(const std::string& path) const;

  // Built-in machines (alphabet {_,1} unless noted).
  static MachineSpec halt_now();    // start state is the halt state
  static MachineSpec eraser();      // erase 1s rightward, halt on blank
  static MachineSpec looper();      // 2-state shuttle, never halts
  static MachineSpec right_runner();
  static MachineSpec left_runner();
  static MachineSpec two_phase_writer();  // writes 1s forever
  static MachineSpec zigzag();      // alphabet {_,1,2}; writes then erases, halts clean
  static MachineSpec by_name(const std::string& name);

 private:
  std::string name_;
  std::vector<std::string> states_;
  std::vector<std::string> alphabet_;
  std::uint16_t start_ = 1;
  // table_[state-1][symbol] for state >= 1
  std::vector<std::vector<Transition>> table_;
};

// Tape snapshot. left holds the cells to the left of the head with
// left.back() adjacent to the head; right holds the head cell onward.
// Canonical form: no blank at left.front() or right.back().
struct Configuration {
  std::vector<std::uint16_t> left;
  std::vector<std::uint16_t> right;
  std::uint16_t state = 1;

  void canonicalize();
  bool operator==(const Configuration&) const = default;
  std::string to_string(const MachineSpec& M) const;
};

// Start configuration with the given tape (head on the first cell).
Configuration initial_config(const MachineSpec& M,
                             const std::vector<std::uint16_t>& tape);
Configuration unary_input(const MachineSpec& M, std::uint64_t n);

// One transition; throws AlreadyHalted on a halt-state configuration.
Configuration tm_step(const MachineSpec& M, const Configuration& c);

struct HaltStatus {
  bool halted = false;
  std::uint64_t step = 0;  // meaningful when halted
};

// Runs at most T steps; Halted(t) iff the halt state is reached at t <= T.
HaltStatus halts_within(const MachineSpec& M, Configuration c, std::uint64_t T);

}  // namespace ncl
