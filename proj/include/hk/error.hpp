#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hk {

// Every precondition failure the library can detect. Domain errors map to
// CLI exit code 2; SyntaxError and UnknownVariable map to exit code 1.
enum class ErrorCode {
    InversionOfZero,
    NonUnitReciprocal,
    NonpositiveOrderArgument,
    NotDivisible,
    ConductorLimit,
    JacobianNotUnit,
    ResidueNotInIdeal,
    SingularJacobian,
    OutsideDomain,
    NonvanishingAtOrigin,
    SingularMinor,
    SeedNotSimple,
    SeedInconsistent,
    HenselFailureAtPoint,
    PrecisionInsufficient,
    FactorizationUnsupported,
    NotSingleOrbit,
    ZeroDiscriminant,
    InvalidArgument,
    SyntaxError,
    UnknownVariable,
};

std::string_view to_string(ErrorCode code) noexcept;

class MathError : public std::runtime_error {
   public:
    MathError(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

   private:
    ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& what) { throw MathError(code, what); }

}  // namespace hk
