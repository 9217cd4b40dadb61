#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ncl {

// Base class for all library errors so callers can catch one type.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class OverflowBudgetExceeded : public Error {
 public:
  explicit OverflowBudgetExceeded(std::size_t bits)
      : Error("mantissa size cap exceeded: " + std::to_string(bits) + " bits"),
        bits_(bits) {}
  std::size_t bits() const { return bits_; }

 private:
  std::size_t bits_;
};

class DivisorContainsZero : public Error {
 public:
  DivisorContainsZero() : Error("interval division: divisor contains zero") {}
};

class ConsistencyViolation : public Error {
 public:
  explicit ConsistencyViolation(unsigned k)
      : Error("approximation stream inconsistent at k=" + std::to_string(k)),
        k_(k) {}
  unsigned k() const { return k_; }

 private:
  unsigned k_;
};

class PrefixTooShort : public Error {
 public:
  explicit PrefixTooShort(const std::string& what) : Error(what) {}
};

class AlreadyHalted : public Error {
 public:
  AlreadyHalted() : Error("machine is already in the halt state") {}
};

class InvalidEncoding : public Error {
 public:
  explicit InvalidEncoding(const std::string& what) : Error(what) {}
};

// The enclosure of mu touched the forbidden band [1/3, 5/3).
class GapViolation : public Error {
 public:
  GapViolation(const std::string& mu_lo, const std::string& mu_hi)
      : Error("mu enclosure [" + mu_lo + ", " + mu_hi +
              "] meets the forbidden band [1/3, 5/3)") {}
};

class WidthBlowup : public Error {
 public:
  explicit WidthBlowup(std::size_t step)
      : Error("orbit enclosure width exceeded 1 at step " +
              std::to_string(step)) {}
};

class NoContractionCertificate : public Error {
 public:
  explicit NoContractionCertificate(const std::string& what) : Error(what) {}
};

class DomainExit : public Error {
 public:
  explicit DomainExit(double t)
      : Error("trajectory left the evaluation domain at t=" +
              std::to_string(t)) {}
};

class ToleranceUnachievable : public Error {
 public:
  explicit ToleranceUnachievable(const std::string& what) : Error(what) {}
};

class ResolutionExceeded : public Error {
 public:
  explicit ResolutionExceeded(const std::string& what) : Error(what) {}
};

class CycleCertificationFailed : public Error {
 public:
  explicit CycleCertificationFailed(const std::string& what) : Error(what) {}
};

class ManifoldEscape : public Error {
 public:
  explicit ManifoldEscape(const std::string& what) : Error(what) {}
};

class NotStructurallyStable : public Error {
 public:
  explicit NotStructurallyStable(const std::string& what) : Error(what) {}
};

class SchemaError : public Error {
 public:
  explicit SchemaError(const std::string& what) : Error(what) {}
};

}  // namespace ncl
