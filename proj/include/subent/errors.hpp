#pragma once

#include <stdexcept>
#include <string>

namespace subent {

/// Input outside the documented domain (negative e_k, bad index, ...).
struct DomainViolation : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Root iteration did not reach the requested tolerance.
struct ConvergenceFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Contour does not enclose all roots, or touches the branch cut.
struct ContourViolation : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Adaptive quadrature ran out of subdivisions before meeting tolerance.
struct QuadratureFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// The requested half-axis integral is non-integrable at tau = 0.
/// `direction` is the sign of the divergent result (+1 -> +inf, -1 -> -inf).
struct DivergentIntegral : std::runtime_error {
    int direction;
    DivergentIntegral(const std::string& what, int dir)
        : std::runtime_error(what), direction(dir) {}
};

/// Neither vector majorizes the other.
struct NotComparable : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

}  // namespace subent
