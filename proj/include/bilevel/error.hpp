#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace bilevel {

/// Failure categories raised across the library. Every thrown bilevel::Error
/// carries exactly one of these so callers (and the report engine) can
/// distinguish a mathematical failure from a precondition violation.
enum class ErrorKind {
  ModulusMismatch,
  ZeroDivisor,
  NonIntegralCoefficient,
  NonExactDivision,
  IncompatibleSeries,
  InsufficientPrecision,
  IndexMismatch,
  ConstructionMismatch,
  InvalidQuery,
  NonIntegerExponentData,
  NonPrimitiveVector,
  NegativeCoefficient,
  IrrationalEntry,
  NonUnimodular,
  SingularDenominator,
  NotFound,
  NonIntegerDiscriminant,
  DegenerateRelation,
  SamplingExhausted,
  SearchBudgetExceeded,
  NotInGroup,
  OracleDisagreement,
  UnknownCheck,
  UnknownForm,
  ParseError,
};

std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace bilevel
