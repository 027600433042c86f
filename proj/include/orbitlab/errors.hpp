#pragma once

#include <stdexcept>
#include <string>

namespace orbitlab {

// Machine-readable failure codes, surfaced by the CLI as exit-code-1 reports.
enum class ErrorCode {
    ZeroVector,
    DimensionMismatch,
    HorizonExceeded,
    DegeneratePower,
    EmptySubspace,
    NoEligibleIndex,
    NormingFailure,
    NoGoodDirection,
    NormsNotMonotone,
    EmptyCluster,
    EmptyA,
    SearchFailure,
    PlanInfeasible,
    StarFails,
    PlanExhausted,
    VerificationFailure,
    NoMatchedPairs,
    UnknownConstant,
    ClaimFailed,
    ConfigError,
    InvalidArgument,
};

const char* error_code_name(ErrorCode code);

class OrbitLabError : public std::runtime_error {
public:
    OrbitLabError(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
    throw OrbitLabError(code, what);
}

} // namespace orbitlab
