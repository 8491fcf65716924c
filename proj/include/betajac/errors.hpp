#pragma once

#include <stdexcept>
#include <string>

namespace betajac {

/// Invalid argument or precondition violation. CLI maps this to exit code 1.
struct ParamError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Numerical failure (singular matrix, non-converged solve, ...).
/// CLI maps this to exit code 2.
struct NumericError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Soft-edge scaling is undefined because the m_n denominator vanishes
/// (e.g. n1 = n2 = n). Carries the offending denominator value.
struct DegenerateScalingError : ParamError {
    double denominator;
    DegenerateScalingError(double denom, const std::string& msg)
        : ParamError(msg), denominator(denom) {}
};

}  // namespace betajac
