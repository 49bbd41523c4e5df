#include "radix/error.hpp"

namespace radix {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NonSymmetric: return "NonSymmetric";
    case ErrorKind::SingularMatrix: return "SingularMatrix";
    case ErrorKind::NotOrthogonal: return "NotOrthogonal";
    case ErrorKind::NotRadicalBasis: return "NotRadicalBasis";
    case ErrorKind::BadScreen: return "BadScreen";
    case ErrorKind::SpaceMismatch: return "SpaceMismatch";
    case ErrorKind::SlotOutOfRange: return "SlotOutOfRange";
    case ErrorKind::NotRadicalAnnihilator: return "NotRadicalAnnihilator";
    case ErrorKind::SingularBasis: return "SingularBasis";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

Error::Error(ErrorKind kind, const std::string& message, std::size_t slot)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind), slot_(slot) {}

}  // namespace radix
