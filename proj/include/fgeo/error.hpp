#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fgeo {

enum class ErrorKind {
  NotPrime,
  NotAField,
  SizeLimit,
  SpecMismatch,
  DimMismatch,
  DivisionByZero,
  MalformedTable,
  MalformedStructure,
  TooFewPoints,
  Overflow,
  InvalidInput,
  RangeLimit,
  CurvatureUnsupported,
  NonPositiveScaleFactor,
  StepTooLarge,
};

std::string_view to_string(ErrorKind kind);

/// Domain error raised by every library operation. `witness` carries a
/// human-readable counterexample when one exists (e.g. a zero-divisor pair).
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message, std::string witness = {})
      : std::runtime_error(message), kind_(kind), witness_(std::move(witness)) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& witness() const noexcept { return witness_; }

 private:
  ErrorKind kind_;
  std::string witness_;
};

}  // namespace fgeo
