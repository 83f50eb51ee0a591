#include "egfasym/error.hpp"

namespace egfasym {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NonPositiveM: return "NonPositiveM";
    case ErrorKind::OrderViolation: return "OrderViolation";
    case ErrorKind::ZeroR: return "ZeroR";
    case ErrorKind::InvalidNumber: return "InvalidNumber";
    case ErrorKind::CapacityExceeded: return "CapacityExceeded";
    case ErrorKind::NegativeArgument: return "NegativeArgument";
    case ErrorKind::DerivativeVanishes: return "DerivativeVanishes";
    case ErrorKind::NoConvergence: return "NoConvergence";
    case ErrorKind::NegativeVariance: return "NegativeVariance";
    case ErrorKind::FullFormulaRequired: return "FullFormulaRequired";
    case ErrorKind::OrderTooLarge: return "OrderTooLarge";
    case ErrorKind::MalformedLine: return "MalformedLine";
    case ErrorKind::NonContiguousIndex: return "NonContiguousIndex";
    case ErrorKind::Empty: return "Empty";
    case ErrorKind::NetworkError: return "NetworkError";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::InvalidAnum: return "InvalidAnum";
    case ErrorKind::NotExactMode: return "NotExactMode";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace egfasym
