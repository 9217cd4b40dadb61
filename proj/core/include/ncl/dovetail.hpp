#pragma once

#include <memory>

#include "ncl/enumeration.hpp"
#include "ncl/machine.hpp"

namespace ncl {

// An indexed family of machines with designated inputs; program m runs on
// input m. Families must be total in m.
class MachineFamily {
 public:
  virtual ~MachineFamily() = default;
  virtual std::string name() const = 0;
  virtual MachineSpec machine(std::uint64_t m) const = 0;
  virtual Configuration input(std::uint64_t m) const = 0;
};

// Six fixed machines with fully known behavior, for tests with a decidable
// oracle: on input m (unary), exactly programs 2 and 5 halt, within 3 and
// 10 steps respectively. Indices >= 6 alias the looper.
class ToyFamily : public MachineFamily {
 public:
  std::string name() const override { return "toy"; }
  MachineSpec machine(std::uint64_t m) const override;
  Configuration input(std::uint64_t m) const override;
};

// Goedel numbering of all 2-symbol machines: index m decodes to a machine
// with S states (S minimal so the cumulative table count exceeds m) whose
// transition entries are the base-6(S+1) digits of the remainder. Input is
// m in unary. The set {m : program m halts on input m} realizes the
// enumerated r.e. non-recursive set; at desk scale only a finite prefix of
// the enumeration is ever materialized.
class GodelFamily : public MachineFamily {
 public:
  std::string name() const override { return "godel"; }
  MachineSpec machine(std::uint64_t m) const override;
  Configuration input(std::uint64_t m) const override;
};

std::unique_ptr<MachineFamily> family_by_name(const std::string& name);

// Dovetailed first-halt enumeration: stage s = 1, 2, ... runs programs
// 0..s for s steps each (from scratch), charging every simulated step
// against the budget; program m is appended to the prefix the first time
// a run reaches the halt state. Deterministic for a fixed budget, and a
// larger budget only appends.
EnumerationPrefix dovetail_enumerate(const MachineFamily& family,
                                     std::uint64_t budget);

}  // namespace ncl
