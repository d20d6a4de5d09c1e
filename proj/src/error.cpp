#include "bhcr/error.hpp"

namespace bhcr {

ErrorCategory category_of(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ParseError:
    case ErrorKind::NonSquare:
    case ErrorKind::DuplicateMonomial:
    case ErrorKind::SingularMatrix:
    case ErrorKind::NegativeOrMalformedExponent:
    case ErrorKind::UnknownVariable:
    case ErrorKind::DimensionMismatch:
    case ErrorKind::NotAMember:
    case ErrorKind::NotASubgroup:
    case ErrorKind::OutOfRange:
    case ErrorKind::ParityViolation:
      return ErrorCategory::Input;
    case ErrorKind::NonPositiveCharge:
    case ErrorKind::NonCalabiYau:
    case ErrorKind::EnumerationCapExceeded:
    case ErrorKind::NotCoprime:
    case ErrorKind::FirstMonomialNotPureSquare:
    case ErrorKind::WeightObstruction:
    case ErrorKind::NotCalabiYauFactor:
    case ErrorKind::TransposedGcdObstruction:
    case ErrorKind::ExceptionalTriple:
    case ErrorKind::MirrorUndefined:
      return ErrorCategory::Obstruction;
    case ErrorKind::OrderFormulaMismatch:
    case ErrorKind::NoDeterminantOneRepresentative:
    case ErrorKind::NotInImage:
    case ErrorKind::RowMismatch:
    case ErrorKind::VerificationFailed:
      return ErrorCategory::Internal;
  }
  return ErrorCategory::Internal;
}

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::NonSquare: return "NonSquare";
    case ErrorKind::DuplicateMonomial: return "DuplicateMonomial";
    case ErrorKind::SingularMatrix: return "SingularMatrix";
    case ErrorKind::NegativeOrMalformedExponent: return "NegativeOrMalformedExponent";
    case ErrorKind::UnknownVariable: return "UnknownVariable";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NotAMember: return "NotAMember";
    case ErrorKind::NotASubgroup: return "NotASubgroup";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::ParityViolation: return "ParityViolation";
    case ErrorKind::NonPositiveCharge: return "NonPositiveCharge";
    case ErrorKind::NonCalabiYau: return "NonCalabiYau";
    case ErrorKind::EnumerationCapExceeded: return "EnumerationCapExceeded";
    case ErrorKind::NotCoprime: return "NotCoprime";
    case ErrorKind::FirstMonomialNotPureSquare: return "FirstMonomialNotPureSquare";
    case ErrorKind::WeightObstruction: return "WeightObstruction";
    case ErrorKind::NotCalabiYauFactor: return "NotCalabiYauFactor";
    case ErrorKind::TransposedGcdObstruction: return "TransposedGcdObstruction";
    case ErrorKind::ExceptionalTriple: return "ExceptionalTriple";
    case ErrorKind::MirrorUndefined: return "MirrorUndefined";
    case ErrorKind::OrderFormulaMismatch: return "OrderFormulaMismatch";
    case ErrorKind::NoDeterminantOneRepresentative: return "NoDeterminantOneRepresentative";
    case ErrorKind::NotInImage: return "NotInImage";
    case ErrorKind::RowMismatch: return "RowMismatch";
    case ErrorKind::VerificationFailed: return "VerificationFailed";
  }
  return "Unknown";
}

}  // namespace bhcr
