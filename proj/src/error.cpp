#include "cremona/error.hpp"

namespace cremona {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Shape: return "ShapeError";
    case ErrorKind::Arity: return "ArityError";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::CharZeroUnsupported: return "CharZeroUnsupported";
    case ErrorKind::IncompleteBasis: return "IncompleteBasis";
    case ErrorKind::DimensionTooLow: return "DimensionTooLow";
    case ErrorKind::BasePoint: return "BasePoint";
    case ErrorKind::IdentityFailure: return "IdentityFailure";
    case ErrorKind::InsufficientPoints: return "InsufficientPoints";
    case ErrorKind::Range: return "RangeError";
    case ErrorKind::MalformedSpec: return "MalformedSpec";
    case ErrorKind::UnknownId: return "UnknownId";
    case ErrorKind::ConstructionFailed: return "ConstructionFailed";
    case ErrorKind::InvalidField: return "InvalidField";
    case ErrorKind::Parse: return "ParseError";
  }
  return "Error";
}

}  // namespace cremona
