#include "autoseq/error.hpp"

namespace autoseq {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::ZeroInstability: return "ZeroInstability";
    case ErrorKind::NoRepetition: return "NoRepetition";
    case ErrorKind::NotDivisible: return "NotDivisible";
    case ErrorKind::NotCoprime: return "NotCoprime";
    case ErrorKind::NotADivisor: return "NotADivisor";
    case ErrorKind::SpecInvalid: return "SpecInvalid";
    case ErrorKind::Undetected: return "Undetected";
    case ErrorKind::NotMultiplicative: return "NotMultiplicative";
    case ErrorKind::PeriodUndetected: return "PeriodUndetected";
    case ErrorKind::ReconstructionMismatch: return "ReconstructionMismatch";
    case ErrorKind::CompositeNonPeriodic: return "CompositeNonPeriodic";
    case ErrorKind::NoFit: return "NoFit";
    case ErrorKind::FormMismatch: return "FormMismatch";
  }
  return "Unknown";
}

}  // namespace autoseq
