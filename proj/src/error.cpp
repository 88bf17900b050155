#include "rotlab/error.hpp"

namespace rotlab {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::BadRational: return "BadRational";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::NonpositiveSlope: return "NonpositiveSlope";
    case ErrorCode::NonMonotone: return "NonMonotone";
    case ErrorCode::DiscontinuousCircleMap: return "DiscontinuousCircleMap";
    case ErrorCode::Discontinuous: return "Discontinuous";
    case ErrorCode::NotBijective: return "NotBijective";
    case ErrorCode::EndpointNotFixed: return "EndpointNotFixed";
    case ErrorCode::PreconditionFailed: return "PreconditionFailed";
    case ErrorCode::CommutationFailed: return "CommutationFailed";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::InternalAssertion: return "InternalAssertion";
    case ErrorCode::BadInput: return "BadInput";
  }
  return "Unknown";
}

}  // namespace rotlab
