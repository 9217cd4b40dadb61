#include "ncl/machine.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace ncl {

using nlohmann::json;

MachineSpec MachineSpec::make(std::string name, std::vector<std::string> states,
                              std::vector<std::string> alphabet,
                              std::uint16_t start_state,
                              std::vector<std::vector<Transition>> table) {
  if (states.empty()) throw Error("machine needs at least the halt state");
  if (alphabet.empty()) throw Error("machine needs at least the blank symbol");
  if (start_state >= states.size()) throw Error("start state out of range");
  if (table.size() + 1 != states.size())
    throw Error("transition table must cover every non-halt state");
  for (const auto& row : table) {
    if (row.size() != alphabet.size())
      throw Error("transition table must be total on the alphabet");
    for (const auto& t : row) {
      if (t.next_state >= states.size() || t.write >= alphabet.size())
        throw Error("transition target out of range");
    }
  }
  MachineSpec M;
  M.name_ = std::move(name);
  M.states_ = std::move(states);
  M.alphabet_ = std::move(alphabet);
  M.start_ = start_state;
  M.table_ = std::move(table);
  return M;
}

const Transition& MachineSpec::transition(std::uint16_t state,
                                          std::uint16_t symbol) const {
  if (state == kHaltState) throw AlreadyHalted();
  return table_.at(state - 1).at(symbol);
}

namespace {

const char* move_name(Move m) {
  switch (m) {
    case Move::Left: return "L";
    case Move::Right: return "R";
    case Move::Stay: return "S";
  }
  return "?";
}

Move move_from_name(const std::string& s) {
  if (s == "L") return Move::Left;
  if (s == "R") return Move::Right;
  if (s == "S") return Move::Stay;
  throw Error("bad move '" + s + "'");
}

}  // namespace

std::string MachineSpec::to_json() const {
  json j;
  j["format_version"] = 1;
  j["name"] = name_;
  j["blank"] = alphabet_[0];
  j["alphabet"] = alphabet_;
  j["states"] = states_;
  j["start"] = states_[start_];
  json trans = json::array();
  for (std::uint16_t s = 1; s < states_.size(); ++s) {
    for (std::uint16_t a = 0; a < alphabet_.size(); ++a) {
      const Transition& t = table_[s - 1][a];
      trans.push_back(json{
          {"from", {states_[s], alphabet_[a]}},
          {"to", {states_[t.next_state], alphabet_[t.write], move_name(t.move)}}});
    }
  }
  j["transitions"] = std::move(trans);
  return j.dump(2);
}

MachineSpec MachineSpec::from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(std::string("machine JSON parse failure: ") + e.what());
  }
  try {
    const auto states = j.at("states").get<std::vector<std::string>>();
    const auto alphabet = j.at("alphabet").get<std::vector<std::string>>();
    if (j.at("blank").get<std::string>() != alphabet.at(0))
      throw Error("blank must be the first alphabet symbol");
    const auto find_state = [&](const std::string& s) -> std::uint16_t {
      for (std::size_t i = 0; i < states.size(); ++i)
        if (states[i] == s) return static_cast<std::uint16_t>(i);
      throw Error("unknown state '" + s + "'");
    };
    const auto find_symbol = [&](const std::string& s) -> std::uint16_t {
      for (std::size_t i = 0; i < alphabet.size(); ++i)
        if (alphabet[i] == s) return static_cast<std::uint16_t>(i);
      throw Error("unknown symbol '" + s + "'");
    };
    std::vector<std::vector<Transition>> table(
        states.size() - 1,
        std::vector<Transition>(alphabet.size(), Transition{0, 0, Move::Stay}));
    std::vector<std::vector<bool>> seen(states.size() - 1,
                                        std::vector<bool>(alphabet.size(), false));
    for (const auto& tj : j.at("transitions")) {
      const std::uint16_t from_s = find_state(tj.at("from").at(0));
      const std::uint16_t from_a = find_symbol(tj.at("from").at(1));
      if (from_s == kHaltState)
        throw Error("halt state cannot have outgoing transitions");
      if (seen[from_s - 1][from_a]) throw Error("duplicate transition");
      seen[from_s - 1][from_a] = true;
      table[from_s - 1][from_a] =
          Transition{find_state(tj.at("to").at(0)), find_symbol(tj.at("to").at(1)),
                     move_from_name(tj.at("to").at(2))};
    }
    for (std::size_t s = 0; s + 1 < states.size(); ++s)
      for (std::size_t a = 0; a < alphabet.size(); ++a)
        if (!seen[s][a])
          throw Error("transition table not total: missing (" + states[s + 1] +
                      ", " + alphabet[a] + ")");
    return make(j.value("name", std::string("machine")), states, alphabet,
                find_state(j.at("start").get<std::string>()), std::move(table));
  } catch (const json::exception& e) {
    throw Error(std::string("machine JSON schema failure: ") + e.what());
  }
}

MachineSpec MachineSpec::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open machine file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return from_json(ss.str());
}

void MachineSpec::save_file(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw Error("cannot write machine file " + path);
  out << to_json() << "\n";
}

namespace {
constexpr std::uint16_t H = MachineSpec::kHaltState;
using Row = std::vector<Transition>;
}  // namespace

MachineSpec MachineSpec::halt_now() {
  return make("halt_now", {"halt"}, {"_", "1"}, 0, {});
}

MachineSpec MachineSpec::eraser() {
  // q1: erase 1s moving right, halt at the first blank.
  return make("eraser", {"halt", "q1"}, {"_", "1"}, 1,
              {Row{{H, 0, Move::Stay}, {1, 0, Move::Right}}});
}

MachineSpec MachineSpec::looper() {
  return make("looper", {"halt", "q1", "q2"}, {"_", "1"}, 1,
              {Row{{2, 0, Move::Right}, {2, 1, Move::Right}},
               Row{{1, 0, Move::Left}, {1, 1, Move::Left}}});
}

MachineSpec MachineSpec::right_runner() {
  return make("right_runner", {"halt", "q1"}, {"_", "1"}, 1,
              {Row{{1, 0, Move::Right}, {1, 1, Move::Right}}});
}

MachineSpec MachineSpec::left_runner() {
  return make("left_runner", {"halt", "q1"}, {"_", "1"}, 1,
              {Row{{1, 0, Move::Left}, {1, 1, Move::Left}}});
}

MachineSpec MachineSpec::two_phase_writer() {
  return make("two_phase_writer", {"halt", "q1", "q2"}, {"_", "1"}, 1,
              {Row{{2, 1, Move::Right}, {2, 1, Move::Right}},
               Row{{1, 1, Move::Right}, {1, 1, Move::Right}}});
}

MachineSpec MachineSpec::zigzag() {
  // Erases any input, writes "12", erases it again, halts with a clean tape.
  return make(
      "zigzag", {"halt", "q1", "q2", "q3", "q4", "q5"}, {"_", "1", "2"}, 1,
      {Row{{2, 1, Move::Right}, {1, 0, Move::Right}, {1, 0, Move::Right}},
       Row{{3, 2, Move::Left}, {2, 1, Move::Right}, {2, 2, Move::Right}},
       Row{{H, 0, Move::Stay}, {4, 0, Move::Right}, {4, 0, Move::Right}},
       Row{{H, 0, Move::Stay}, {4, 0, Move::Right}, {5, 0, Move::Right}},
       Row{{H, 0, Move::Stay}, {5, 0, Move::Right}, {5, 0, Move::Right}}});
}

MachineSpec MachineSpec::by_name(const std::string& name) {
  if (name == "halt_now") return halt_now();
  if (name == "eraser") return eraser();
  if (name == "looper") return looper();
  if (name == "right_runner") return right_runner();
  if (name == "left_runner") return left_runner();
  if (name == "two_phase_writer") return two_phase_writer();
  if (name == "zigzag") return zigzag();
  throw Error("unknown builtin machine '" + name + "'");
}

void Configuration::canonicalize() {
  std::size_t drop_front = 0;
  while (drop_front < left.size() && left[drop_front] == 0) ++drop_front;
  if (drop_front > 0) left.erase(left.begin(), left.begin() + drop_front);
  while (!right.empty() && right.back() == 0) right.pop_back();
}

std::string Configuration::to_string(const MachineSpec& M) const {
  std::string s = "[";
  for (auto c : left) s += M.symbol_name(c);
  s += "|" + M.state_name(state) + "|";
  for (auto c : right) s += M.symbol_name(c);
  s += "]";
  return s;
}

Configuration initial_config(const MachineSpec& M,
                             const std::vector<std::uint16_t>& tape) {
  Configuration c;
  c.right = tape;
  c.state = M.start_state();
  c.canonicalize();
  return c;
}

Configuration unary_input(const MachineSpec& M, std::uint64_t n) {
  return initial_config(M, std::vector<std::uint16_t>(n, 1));
}

Configuration tm_step(const MachineSpec& M, const Configuration& c) {
  if (c.state == MachineSpec::kHaltState) throw AlreadyHalted();
  Configuration n = c;
  const std::uint16_t sym = n.right.empty() ? 0 : n.right.front();
  const Transition& t = M.transition(n.state, sym);
  if (n.right.empty()) n.right.push_back(0);
  n.right.front() = t.write;
  switch (t.move) {
    case Move::Stay:
      break;
    case Move::Right:
      n.left.push_back(n.right.front());
      n.right.erase(n.right.begin());
      break;
    case Move::Left: {
      const std::uint16_t cell = n.left.empty() ? 0 : n.left.back();
      if (!n.left.empty()) n.left.pop_back();
      n.right.insert(n.right.begin(), cell);
      break;
    }
  }
  n.state = t.next_state;
  n.canonicalize();
  return n;
}

HaltStatus halts_within(const MachineSpec& M, Configuration c, std::uint64_t T) {
  if (c.state == MachineSpec::kHaltState) return {true, 0};
  for (std::uint64_t t = 1; t <= T; ++t) {
    c = tm_step(M, c);
    if (c.state == MachineSpec::kHaltState) return {true, t};
  }
  return {false, 0};
}

}  // namespace ncl
