#include "levikit/error.hpp"

#include <sstream>

namespace levikit {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::AntisymmetryViolation: return "AntisymmetryViolation";
    case ErrorKind::JacobiViolation: return "JacobiViolation";
    case ErrorKind::HopfAxiomFailure: return "HopfAxiomFailure";
    case ErrorKind::AntipodeAxiomFailure: return "AntipodeAxiomFailure";
    case ErrorKind::NotAGroup: return "NotAGroup";
    case ErrorKind::GradingFailure: return "GradingFailure";
    case ErrorKind::CoactionFailure: return "CoactionFailure";
    case ErrorKind::ActionFailure: return "ActionFailure";
    case ErrorKind::RepresentationFailure: return "RepresentationFailure";
    case ErrorKind::NotAnAutomorphism: return "NotAnAutomorphism";
    case ErrorKind::NotAnIdeal: return "NotAnIdeal";
    case ErrorKind::NotSemisimple: return "NotSemisimple";
    case ErrorKind::NotACocycle: return "NotACocycle";
    case ErrorKind::NotLEquivariant: return "NotLEquivariant";
    case ErrorKind::NotCompletelyReducible: return "NotCompletelyReducible";
    case ErrorKind::GroupMismatch: return "GroupMismatch";
    case ErrorKind::InfiniteGroup: return "InfiniteGroup";
    case ErrorKind::DimensionCap: return "DimensionCap";
    case ErrorKind::RadicalNotInvariant: return "RadicalNotInvariant";
    case ErrorKind::NoIntegral: return "NoIntegral";
    case ErrorKind::NormalizationImpossible: return "NormalizationImpossible";
    case ErrorKind::IntegralNotNormalized: return "IntegralNotNormalized";
    case ErrorKind::IntegralNotAdInvariant: return "IntegralNotAdInvariant";
    case ErrorKind::IntegralUnavailable: return "IntegralUnavailable";
    case ErrorKind::NoAveragingRoute: return "NoAveragingRoute";
    case ErrorKind::SymmetryRequired: return "SymmetryRequired";
    case ErrorKind::NoSolution: return "NoSolution";
    case ErrorKind::InternalInconsistency: return "InternalInconsistency";
    case ErrorKind::Io: return "Io";
    case ErrorKind::Parse: return "Parse";
  }
  return "Unknown";
}

namespace {

std::string compose(ErrorKind kind, const std::string& message, const std::vector<long>& indices) {
  std::ostringstream out;
  out << to_string(kind) << ": " << message;
  if (!indices.empty()) {
    out << " at (";
    for (size_t i = 0; i < indices.size(); ++i) out << (i ? "," : "") << indices[i];
    out << ")";
  }
  return out.str();
}

}  // namespace

Error::Error(ErrorKind kind, const std::string& message, std::vector<long> indices)
    : std::runtime_error(compose(kind, message, indices)), kind_(kind), message_(message), indices_(std::move(indices)) {}

bool is_hypothesis_failure(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::RadicalNotInvariant:
    case ErrorKind::NoIntegral:
    case ErrorKind::NormalizationImpossible:
    case ErrorKind::IntegralNotNormalized:
    case ErrorKind::IntegralNotAdInvariant:
    case ErrorKind::IntegralUnavailable:
    case ErrorKind::NoAveragingRoute:
    case ErrorKind::SymmetryRequired:
    case ErrorKind::NoSolution:
      return true;
    default:
      return false;
  }
}

}  // namespace levikit
