#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace radix {

enum class ErrorKind {
  DimensionMismatch,
  NonSymmetric,
  SingularMatrix,
  NotOrthogonal,
  NotRadicalBasis,
  BadScreen,
  SpaceMismatch,
  SlotOutOfRange,
  NotRadicalAnnihilator,
  SingularBasis,
  ParseError,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library. `kind()` is stable and is what the
/// CLI maps onto exit codes; `what()` is a human-readable message.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);
  Error(ErrorKind kind, const std::string& message, std::size_t slot);

  ErrorKind kind() const noexcept { return kind_; }
  /// 1-based slot for NotRadicalAnnihilator / SlotOutOfRange, when known.
  std::optional<std::size_t> slot() const noexcept { return slot_; }

 private:
  ErrorKind kind_;
  std::optional<std::size_t> slot_;
};

}  // namespace radix
