#ifndef QWHIT_ERRORS_HPP
#define QWHIT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qwhit {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Evaluation point too close to a pole or zero of the dilogarithm / c-function.
struct PoleProximity : Error {
    using Error::Error;
};

// A quadrature failed to reach the requested accuracy within its budget.
struct QuadratureFailure : Error {
    using Error::Error;
};

struct BudgetExceeded : QuadratureFailure {
    using QuadratureFailure::QuadratureFailure;
};

// Tail truncation did not converge: the integrand does not decay along a ray.
struct NonDecayingTail : Error {
    using Error::Error;
};

struct NoSeparatingPath : Error {
    using Error::Error;
};

// Richardson extrapolation of a regularized integral was inconsistent.
struct ExtrapolationUnstable : Error {
    using Error::Error;
};

struct BalancingViolated : Error {
    using Error::Error;
};

struct ShiftUnsupported : Error {
    using Error::Error;
};

struct RankUnsupported : Error {
    using Error::Error;
};

} // namespace qwhit

#endif
