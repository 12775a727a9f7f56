#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace autoseq {

enum class ErrorKind {
  InvalidArgument,
  Overflow,
  ParseError,
  // core automata
  BudgetExceeded,
  ZeroInstability,
  NoRepetition,
  // arithmetic
  NotDivisible,
  NotCoprime,
  NotADivisor,
  // constructors
  SpecInvalid,
  Undetected,
  // classifier
  NotMultiplicative,
  PeriodUndetected,
  ReconstructionMismatch,
  CompositeNonPeriodic,
  NoFit,
  FormMismatch,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries a kind so front ends can map
/// it to a verdict or an exit code without parsing the message.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace autoseq
