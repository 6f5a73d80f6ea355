#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace ars {

/// Root of the library's error hierarchy.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Chain composition or construction violated endpoint matching.
class InvalidChainError : public Error {
 public:
  using Error::Error;
};

/// A span did not refer to two edges leaving a common apex, or its edges
/// could not be interpreted by the joiner asked to handle it.
class MalformedSpanError : public Error {
 public:
  using Error::Error;
};

/// A bounded iteration ran out of budget; the computation may not terminate.
class FuelExhaustedError : public Error {
 public:
  using Error::Error;
};

/// A labelling was asked about an edge it does not cover.
class UnlabelledEdgeError : public Error {
 public:
  using Error::Error;
};

/// The operation needs a capability the system does not provide
/// (typically a finite enumeration).
class UnsupportedOperationError : public Error {
 public:
  using Error::Error;
};

/// Malformed textual input (JSON, word syntax, morphism literals, ...).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Structured data failed referential-integrity or law validation.
/// Carries every violation found, not just the first.
class IntegrityError : public Error {
 public:
  IntegrityError(const std::string& summary, std::vector<std::string> violations)
      : Error(summary + describe(violations)), violations_(std::move(violations)) {}

  const std::vector<std::string>& violations() const { return violations_; }

 private:
  static std::string describe(const std::vector<std::string>& violations) {
    std::string out;
    for (const auto& v : violations) {
      out += "\n  - " + v;
    }
    return out;
  }

  std::vector<std::string> violations_;
};

}  // namespace ars
