#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hyperlin {

enum class ErrorCode {
  // input errors
  IoError,
  SyntaxError,
  DuplicateHyperedgeSet,
  EmptyHyperedge,
  UnknownVertex,
  DuplicateLabel,
  // precondition failures
  UnknownLabel,
  EmptyStar,
  NotSquare,
  Singular,
  DimensionMismatch,
  TooSmall,
  NotInNullspace,
  NotDisjoint,
  Overlap,
  NotCardinalityPreserving,
  InvalidCertificate,
  WeightDomainMismatch,
  NotSymmetrizable,
  IsolatedVertex,
  SingletonEdgeNonLazy,
  InvalidPolicy,
  BadDistribution,
  BadHorizon,
  Unreachable,
  Disconnected,
  TooFewEdges,
  NoConvergence,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::DuplicateHyperedgeSet: return "DuplicateHyperedgeSet";
    case ErrorCode::EmptyHyperedge: return "EmptyHyperedge";
    case ErrorCode::UnknownVertex: return "UnknownVertex";
    case ErrorCode::DuplicateLabel: return "DuplicateLabel";
    case ErrorCode::UnknownLabel: return "UnknownLabel";
    case ErrorCode::EmptyStar: return "EmptyStar";
    case ErrorCode::NotSquare: return "NotSquare";
    case ErrorCode::Singular: return "Singular";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::TooSmall: return "TooSmall";
    case ErrorCode::NotInNullspace: return "NotInNullspace";
    case ErrorCode::NotDisjoint: return "NotDisjoint";
    case ErrorCode::Overlap: return "Overlap";
    case ErrorCode::NotCardinalityPreserving: return "NotCardinalityPreserving";
    case ErrorCode::InvalidCertificate: return "InvalidCertificate";
    case ErrorCode::WeightDomainMismatch: return "WeightDomainMismatch";
    case ErrorCode::NotSymmetrizable: return "NotSymmetrizable";
    case ErrorCode::IsolatedVertex: return "IsolatedVertex";
    case ErrorCode::SingletonEdgeNonLazy: return "SingletonEdgeNonLazy";
    case ErrorCode::InvalidPolicy: return "InvalidPolicy";
    case ErrorCode::BadDistribution: return "BadDistribution";
    case ErrorCode::BadHorizon: return "BadHorizon";
    case ErrorCode::Unreachable: return "Unreachable";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::TooFewEdges: return "TooFewEdges";
    case ErrorCode::NoConvergence: return "NoConvergence";
  }
  return "Unknown";
}

/// True for errors caused by malformed input data rather than by a
/// violated operation precondition.
constexpr bool is_input_error(ErrorCode code) {
  return code == ErrorCode::IoError || code == ErrorCode::SyntaxError || code == ErrorCode::DuplicateHyperedgeSet ||
         code == ErrorCode::EmptyHyperedge || code == ErrorCode::UnknownVertex ||
         code == ErrorCode::DuplicateLabel;
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace hyperlin
