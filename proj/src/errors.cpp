#include "puregaps/errors.hpp"

namespace puregaps {

std::string_view to_string(ConsistencyKind kind) {
  switch (kind) {
    case ConsistencyKind::GenusIdentityViolation: return "GenusIdentityViolation";
    case ConsistencyKind::CardinalityMismatch: return "CardinalityMismatch";
    case ConsistencyKind::DisjointnessViolation: return "DisjointnessViolation";
    case ConsistencyKind::DiagonalReflectionMismatch: return "DiagonalReflectionMismatch";
    case ConsistencyKind::GenericMismatch: return "GenericMismatch";
    case ConsistencyKind::PiecewiseMismatch: return "PiecewiseMismatch";
    case ConsistencyKind::ClosedFormMismatch: return "ClosedFormMismatch";
    case ConsistencyKind::DivisibilityViolation: return "DivisibilityViolation";
  }
  return "Unknown";
}

ConsistencyError::ConsistencyError(ConsistencyKind kind, const std::string& detail)
    : std::logic_error(std::string(to_string(kind)) + ": " + detail), kind_(kind) {}

ParameterError::ParameterError(ParameterKind kind, const std::string& detail)
    : std::invalid_argument(std::string(kind == ParameterKind::InvalidParams ? "InvalidParams" : "IndexOutOfRange") +
                            ": " + detail),
      kind_(kind) {}

}  // namespace puregaps
