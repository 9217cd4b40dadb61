#include "ncl/encoding.hpp"

namespace ncl {

ConfigCodec::ConfigCodec(MachineSpec machine)
    : machine_(std::move(machine)), base_(machine_.alphabet_size() + 1u) {}

namespace {

std::uint64_t pack_digits_low_first(const std::vector<std::uint16_t>& word,
                                    bool reversed, std::uint64_t base) {
  unsigned __int128 value = 0;
  unsigned __int128 place = 1;
  const std::size_t n = word.size();
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint16_t d = reversed ? word[n - 1 - i] : word[i];
    value += static_cast<unsigned __int128>(d) * place;
    if (value > UINT64_MAX)
      throw InvalidEncoding("tape word too long to encode in 64 bits");
    if (i + 1 < n) {
      place *= base;
      if (place > static_cast<unsigned __int128>(UINT64_MAX) * base)
        throw InvalidEncoding("tape word too long to encode in 64 bits");
    }
  }
  return static_cast<std::uint64_t>(value);
}

std::vector<std::uint16_t> unpack_digits_low_first(std::uint64_t value,
                                                   std::uint64_t base,
                                                   std::uint64_t alphabet_size) {
  std::vector<std::uint16_t> word;
  while (value != 0) {
    const std::uint64_t d = value % base;
    if (d >= alphabet_size)
      throw InvalidEncoding("digit " + std::to_string(d) +
                            " is not a tape symbol");
    word.push_back(static_cast<std::uint16_t>(d));
    value /= base;
  }
  return word;
}

}  // namespace

EncodedConfig ConfigCodec::encode(const Configuration& c) const {
  if (c.state >= machine_.state_count())
    throw InvalidEncoding("state index out of range");
  EncodedConfig e;
  e.y1 = pack_digits_low_first(c.right, /*reversed=*/false, base_);
  e.y2 = pack_digits_low_first(c.left, /*reversed=*/true, base_);
  e.y3 = c.state;
  return e;
}

Configuration ConfigCodec::decode(const EncodedConfig& e) const {
  if (e.y3 >= machine_.state_count())
    throw InvalidEncoding("state index " + std::to_string(e.y3) +
                          " out of range");
  Configuration c;
  c.right = unpack_digits_low_first(e.y1, base_, machine_.alphabet_size());
  auto left_rev = unpack_digits_low_first(e.y2, base_, machine_.alphabet_size());
  c.left.assign(left_rev.rbegin(), left_rev.rend());
  c.state = static_cast<std::uint16_t>(e.y3);
  c.canonicalize();
  return c;
}

bool ConfigCodec::valid(const EncodedConfig& e) const {
  try {
    (void)decode(e);
    return true;
  } catch (const InvalidEncoding&) {
    return false;
  }
}

EncodedConfig ConfigCodec::fm_step(const EncodedConfig& e) const {
  const Configuration c = decode(e);  // throws on invalid triples
  if (c.state == MachineSpec::kHaltState) return e;
  return encode(tm_step(machine_, c));
}

EncodedConfig ConfigCodec::lattice_step(const EncodedConfig& e) const {
  try {
    return fm_step(e);
  } catch (const InvalidEncoding&) {
    return e;
  }
}

}  // namespace ncl
