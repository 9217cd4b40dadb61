#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "ncl/dyadic.hpp"

namespace ncl {

// Finite injective prefix a(0), a(1), ..., a(M-1) of an enumeration of a
// recursively enumerable set. Shared read-only by every construction;
// all downstream guarantees are stated relative to the prefix.
class EnumerationPrefix {
 public:
  EnumerationPrefix() = default;

  static EnumerationPrefix from_values(std::vector<std::uint64_t> values,
                                       std::string source,
                                       std::uint64_t budget = 0);

  std::size_t size() const { return values_.size(); }
  bool empty() const { return values_.empty(); }
  std::uint64_t value(std::size_t m) const;  // a(m); throws PrefixTooShort
  const std::vector<std::uint64_t>& values() const { return values_; }

  // Index m with a(m) == v, if v has been enumerated.
  std::optional<std::size_t> index_of(std::uint64_t v) const;
  bool contains(std::uint64_t v) const { return index_of(v).has_value(); }

  const std::string& source() const { return source_; }
  std::uint64_t budget() const { return budget_; }

 private:
  std::vector<std::uint64_t> values_;
  std::unordered_map<std::uint64_t, std::size_t> index_;
  std::string source_;
  std::uint64_t budget_ = 0;
};

// Exact value of sum_{m=0}^{M} 2^{-a(m)-shift}. Nondecreasing in M.
Dyadic partial_sum(const EnumerationPrefix& prefix, std::size_t M,
                   unsigned shift);

}  // namespace ncl
