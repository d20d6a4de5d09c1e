#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace bhcr {

enum class ErrorKind {
  // malformed input
  ParseError,
  NonSquare,
  DuplicateMonomial,
  SingularMatrix,
  NegativeOrMalformedExponent,
  UnknownVariable,
  DimensionMismatch,
  NotAMember,
  NotASubgroup,
  OutOfRange,
  ParityViolation,
  // mathematical obstructions
  NonPositiveCharge,
  NonCalabiYau,
  EnumerationCapExceeded,
  NotCoprime,
  FirstMonomialNotPureSquare,
  WeightObstruction,
  NotCalabiYauFactor,
  TransposedGcdObstruction,
  ExceptionalTriple,
  MirrorUndefined,
  // internal consistency
  OrderFormulaMismatch,
  NoDeterminantOneRepresentative,
  NotInImage,
  RowMismatch,
  VerificationFailed,
};

enum class ErrorCategory { Input = 1, Obstruction = 2, Internal = 3 };

ErrorCategory category_of(ErrorKind kind);
std::string_view to_string(ErrorKind kind);

// Process exit code associated with an error category.
inline int exit_code(ErrorCategory c) { return static_cast<int>(c); }

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }
  ErrorCategory category() const noexcept { return category_of(kind_); }

 private:
  ErrorKind kind_;
};

}  // namespace bhcr
