#include "ksys/error.hpp"

namespace ksys {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotRegular: return "NotRegular";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::FingerprintMismatch: return "FingerprintMismatch";
    case ErrorCode::KOutOfRange: return "KOutOfRange";
    case ErrorCode::EmptySubset: return "EmptySubset";
    case ErrorCode::NotAcyclic: return "NotAcyclic";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::InvalidSet: return "InvalidSet";
    case ErrorCode::DuplicateSet: return "DuplicateSet";
    case ErrorCode::SetTooSmall: return "SetTooSmall";
    case ErrorCode::KMismatch: return "KMismatch";
    case ErrorCode::DimensionTooSmall: return "DimensionTooSmall";
    case ErrorCode::InconsistentTransport: return "InconsistentTransport";
    case ErrorCode::NotCycleSystem: return "NotCycleSystem";
    case ErrorCode::InvalidParams: return "InvalidParams";
    case ErrorCode::NotSimple: return "NotSimple";
    case ErrorCode::NoCoordinates: return "NoCoordinates";
    case ErrorCode::DegenerateWeights: return "DegenerateWeights";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::CandidateCapExceeded: return "CandidateCapExceeded";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace ksys
