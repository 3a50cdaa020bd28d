#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace polarity {

enum class ErrorKind {
  NotAntisymmetric,
  NotALattice,
  NotDoublyOrdered,
  CarrierTooLarge,
  InternalMismatch,
  NotALatticeFrame,
  CharacterizationMismatch,
  ParseError,
  ValidationError,
  UnknownProperty,
  InvalidArgument,
};

inline std::string_view to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::NotAntisymmetric: return "NotAntisymmetric";
    case ErrorKind::NotALattice: return "NotALattice";
    case ErrorKind::NotDoublyOrdered: return "NotDoublyOrdered";
    case ErrorKind::CarrierTooLarge: return "CarrierTooLarge";
    case ErrorKind::InternalMismatch: return "InternalMismatch";
    case ErrorKind::NotALatticeFrame: return "NotALatticeFrame";
    case ErrorKind::CharacterizationMismatch: return "CharacterizationMismatch";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::ValidationError: return "ValidationError";
    case ErrorKind::UnknownProperty: return "UnknownProperty";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

/// Every failure raised by the library. `witness` holds the labels (or
/// other tokens) that replay the failure, e.g. the pair lacking a join.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string message, std::vector<std::string> witness = {})
      : std::runtime_error(std::string(to_string(kind)) + ": " + message),
        kind_(kind),
        detail_(std::move(message)),
        witness_(std::move(witness)) {}

  /// Wraps a validator failure raised while loading input.
  static Error validation(const Error& inner, const std::string& context) {
    Error e(ErrorKind::ValidationError, context + ": " + inner.what(), inner.witness());
    e.cause_ = inner.kind();
    return e;
  }

  ErrorKind kind() const noexcept { return kind_; }
  /// The underlying validator error for ValidationError, otherwise kind().
  ErrorKind cause() const noexcept { return cause_; }
  const std::string& detail() const noexcept { return detail_; }
  const std::vector<std::string>& witness() const noexcept { return witness_; }

 private:
  ErrorKind kind_;
  ErrorKind cause_ = kind_;
  std::string detail_;
  std::vector<std::string> witness_;
};

}  // namespace polarity
