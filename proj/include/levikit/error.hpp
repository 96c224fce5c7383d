#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace levikit {

/// Every failure the library reports. The CLI maps each kind onto an exit code.
enum class ErrorKind {
  // input validation (exit 1)
  DimensionMismatch,
  ShapeMismatch,
  AntisymmetryViolation,
  JacobiViolation,
  HopfAxiomFailure,
  AntipodeAxiomFailure,
  NotAGroup,
  GradingFailure,
  CoactionFailure,
  ActionFailure,
  RepresentationFailure,
  NotAnAutomorphism,
  NotAnIdeal,
  NotSemisimple,
  NotACocycle,
  NotLEquivariant,
  NotCompletelyReducible,
  GroupMismatch,
  InfiniteGroup,
  DimensionCap,
  // theorem hypothesis failures (exit 2)
  RadicalNotInvariant,
  NoIntegral,
  NormalizationImpossible,
  IntegralNotNormalized,
  IntegralNotAdInvariant,
  IntegralUnavailable,
  NoAveragingRoute,
  SymmetryRequired,
  NoSolution,
  // bugs
  InternalInconsistency,
  // I/O (exit 3)
  Io,
  Parse,
};

std::string_view to_string(ErrorKind kind);

/// Exception carrying a typed kind and the basis indices of the failing identity.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message, std::vector<long> indices = {});

  ErrorKind kind() const noexcept { return kind_; }
  const std::vector<long>& indices() const noexcept { return indices_; }
  /// The message without the kind prefix and index suffix.
  const std::string& message() const noexcept { return message_; }

 private:
  ErrorKind kind_;
  std::string message_;
  std::vector<long> indices_;
};

/// True for errors that mean "a theorem hypothesis does not hold" rather than bad input.
bool is_hypothesis_failure(ErrorKind kind);

}  // namespace levikit
