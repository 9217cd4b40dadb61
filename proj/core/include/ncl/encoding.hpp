#pragma once

#include <array>
#include <cstdint>

#include "ncl/machine.hpp"

namespace ncl {

// Configuration encoded into N^3: y1 = right tape word (head cell least
// significant) in base b, y2 = left tape word read outward from the head in
// base b, y3 = state index. b = |alphabet| + 1 keeps digit b-1 unused, and
// blank = digit 0 makes canonical stripping and positional encoding agree.
// The clean halting configuration encodes to (0, 0, 0).
struct EncodedConfig {
  std::uint64_t y1 = 0;
  std::uint64_t y2 = 0;
  std::uint64_t y3 = 0;
  bool operator==(const EncodedConfig&) const = default;
  bool is_halting_sink() const { return y1 == 0 && y2 == 0 && y3 == 0; }
};

class ConfigCodec {
 public:
  explicit ConfigCodec(MachineSpec machine);

  const MachineSpec& machine() const { return machine_; }
  std::uint64_t base() const { return base_; }

  EncodedConfig encode(const Configuration& c) const;
  Configuration decode(const EncodedConfig& e) const;  // throws InvalidEncoding
  bool valid(const EncodedConfig& e) const;

  // The transition map on N^3: decode, step, encode. Halting configurations
  // (y3 = 0) are fixed points; throws InvalidEncoding off the valid set.
  EncodedConfig fm_step(const EncodedConfig& e) const;

  // Total extension of fm_step to all of N^3: invalid triples are mapped to
  // themselves. This is the lattice map the smooth extension interpolates;
  // it agrees with fm_step wherever fm_step is defined.
  EncodedConfig lattice_step(const EncodedConfig& e) const;

 private:
  MachineSpec machine_;
  std::uint64_t base_;
};

}  // namespace ncl
