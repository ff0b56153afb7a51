#include "hk/error.hpp"

namespace hk {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::InversionOfZero: return "InversionOfZero";
        case ErrorCode::NonUnitReciprocal: return "NonUnitReciprocal";
        case ErrorCode::NonpositiveOrderArgument: return "NonpositiveOrderArgument";
        case ErrorCode::NotDivisible: return "NotDivisible";
        case ErrorCode::ConductorLimit: return "ConductorLimit";
        case ErrorCode::JacobianNotUnit: return "JacobianNotUnit";
        case ErrorCode::ResidueNotInIdeal: return "ResidueNotInIdeal";
        case ErrorCode::SingularJacobian: return "SingularJacobian";
        case ErrorCode::OutsideDomain: return "OutsideDomain";
        case ErrorCode::NonvanishingAtOrigin: return "NonvanishingAtOrigin";
        case ErrorCode::SingularMinor: return "SingularMinor";
        case ErrorCode::SeedNotSimple: return "SeedNotSimple";
        case ErrorCode::SeedInconsistent: return "SeedInconsistent";
        case ErrorCode::HenselFailureAtPoint: return "HenselFailureAtPoint";
        case ErrorCode::PrecisionInsufficient: return "PrecisionInsufficient";
        case ErrorCode::FactorizationUnsupported: return "FactorizationUnsupported";
        case ErrorCode::NotSingleOrbit: return "NotSingleOrbit";
        case ErrorCode::ZeroDiscriminant: return "ZeroDiscriminant";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::SyntaxError: return "SyntaxError";
        case ErrorCode::UnknownVariable: return "UnknownVariable";
    }
    return "Unknown";
}

}  // namespace hk
