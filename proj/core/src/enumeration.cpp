#include "ncl/enumeration.hpp"

#include "ncl/errors.hpp"

namespace ncl {

EnumerationPrefix EnumerationPrefix::from_values(
    std::vector<std::uint64_t> values, std::string source,
    std::uint64_t budget) {
  EnumerationPrefix p;
  p.values_ = std::move(values);
  p.source_ = std::move(source);
  p.budget_ = budget;
  for (std::size_t m = 0; m < p.values_.size(); ++m) {
    const auto [it, fresh] = p.index_.emplace(p.values_[m], m);
    (void)it;
    if (!fresh) throw Error("enumeration prefix is not injective");
  }
  return p;
}

std::uint64_t EnumerationPrefix::value(std::size_t m) const {
  if (m >= values_.size())
    throw PrefixTooShort("prefix of length " + std::to_string(values_.size()) +
                         " has no a(" + std::to_string(m) + ")");
  return values_[m];
}

std::optional<std::size_t> EnumerationPrefix::index_of(std::uint64_t v) const {
  const auto it = index_.find(v);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Dyadic partial_sum(const EnumerationPrefix& prefix, std::size_t M,
                   unsigned shift) {
  if (M >= prefix.size())
    throw PrefixTooShort("partial_sum needs M < prefix length, got M=" +
                         std::to_string(M) + " length=" +
                         std::to_string(prefix.size()));
  Dyadic s;
  for (std::size_t m = 0; m <= M; ++m) {
    s += Dyadic::pow2(-static_cast<long>(prefix.value(m)) -
                      static_cast<long>(shift));
  }
  return s;
}

}  // namespace ncl
