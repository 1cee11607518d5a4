#include "pries/error.hpp"

namespace pries {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotSquare: return "NotSquare";
    case ErrorCode::NotReflexive: return "NotReflexive";
    case ErrorCode::NotAntisymmetric: return "NotAntisymmetric";
    case ErrorCode::NotTransitive: return "NotTransitive";
    case ErrorCode::BadLabels: return "BadLabels";
    case ErrorCode::NotMonotone: return "NotMonotone";
    case ErrorCode::EmptyCarrier: return "EmptyCarrier";
    case ErrorCode::NotALattice: return "NotALattice";
    case ErrorCode::NotDistributive: return "NotDistributive";
    case ErrorCode::BadTable: return "BadTable";
    case ErrorCode::NotJoinPreserving: return "NotJoinPreserving";
    case ErrorCode::AdjointMismatch: return "AdjointMismatch";
    case ErrorCode::AdjointAbsent: return "AdjointAbsent";
    case ErrorCode::NotAHom: return "NotAHom";
    case ErrorCode::RoundTripFailure: return "RoundTripFailure";
    case ErrorCode::EquationViolation: return "EquationViolation";
    case ErrorCode::SizeRefused: return "SizeRefused";
    case ErrorCode::NotANucleus: return "NotANucleus";
    case ErrorCode::NotASublocale: return "NotASublocale";
    case ErrorCode::NotLocalic: return "NotLocalic";
    case ErrorCode::IdentityViolation: return "IdentityViolation";
    case ErrorCode::EquivalenceViolation: return "EquivalenceViolation";
    case ErrorCode::PreconditionFailed: return "PreconditionFailed";
    case ErrorCode::NotRepresentable: return "NotRepresentable";
    case ErrorCode::RemarkViolation: return "RemarkViolation";
    case ErrorCode::BadInput: return "BadInput";
  }
  return "Unknown";
}

}  // namespace pries
