#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace puregaps {

/// Internal cross-checks that can only fail on a transcription error or a
/// malformed input that slipped past validation.
enum class ConsistencyKind {
  GenusIdentityViolation,
  CardinalityMismatch,
  DisjointnessViolation,
  DiagonalReflectionMismatch,
  GenericMismatch,
  PiecewiseMismatch,
  ClosedFormMismatch,
  DivisibilityViolation,
};

std::string_view to_string(ConsistencyKind kind);

class ConsistencyError : public std::logic_error {
 public:
  ConsistencyError(ConsistencyKind kind, const std::string& detail);
  ConsistencyKind kind() const noexcept { return kind_; }

 private:
  ConsistencyKind kind_;
};

/// Family parameters outside their domain.
enum class ParameterKind { InvalidParams, IndexOutOfRange };

class ParameterError : public std::invalid_argument {
 public:
  ParameterError(ParameterKind kind, const std::string& detail);
  ParameterKind kind() const noexcept { return kind_; }

 private:
  ParameterKind kind_;
};

}  // namespace puregaps
