#include "olss/error.hpp"

namespace olss {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::EmptyEdge: return "EmptyEdge";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::ZeroClass: return "ZeroClass";
    case ErrorCode::BadParam: return "BadParam";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::SizeMismatch: return "SizeMismatch";
    case ErrorCode::ZeroSecret: return "ZeroSecret";
    case ErrorCode::SingletonEdge: return "SingletonEdge";
    case ErrorCode::DealerFailure: return "DealerFailure";
    case ErrorCode::FieldTooSmall: return "FieldTooSmall";
    case ErrorCode::InvalidCover: return "InvalidCover";
    case ErrorCode::InvalidSystem: return "InvalidSystem";
    case ErrorCode::Infeasible: return "Infeasible";
    case ErrorCode::Parse: return "Parse";
    case ErrorCode::IO: return "IO";
  }
  return "Unknown";
}

}  // namespace olss
