#pragma once

#include <stdexcept>
#include <string>

namespace ostrowski {

// Base class for everything thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad parameters: interval with a >= b, s outside (0,1], q <= 1, x outside
// [a,b], unknown catalog id, ... CLI maps these to exit code 1.
struct ValidationError : Error {
    using Error::Error;
};

// Evaluation point outside the ambient interval.
struct DomainError : ValidationError {
    using ValidationError::ValidationError;
};

struct UnknownId : ValidationError {
    using ValidationError::ValidationError;
};

struct InvalidTau : ValidationError {
    using ValidationError::ValidationError;
};

// tau > 1: the kernel is only defined for tau <= 1. CLI exit code 2.
struct UnsupportedBranch : Error {
    using Error::Error;
};

// |ln tau| below the closed-form cutoff; use the integral route or the
// tau = 1 branch instead.
struct NearSingular : Error {
    using Error::Error;
};

// |f'(b)| = 0, tau undefined.
struct ZeroDenominator : Error {
    using Error::Error;
};

// |f'(a)| = 0, tau = 0 lies outside (0,inf).
struct ZeroNumerator : Error {
    using Error::Error;
};

// An endpoint derivative magnitude is zero; the pointwise hypothesis and tau
// are undefined.
struct ZeroEndpointDerivative : Error {
    using Error::Error;
};

// Density vanishes at a support endpoint; tau undefined.
struct ZeroEndpointDensity : Error {
    using Error::Error;
};

// A membership check hit f(u) <= 0; the log-convexity classes only contain
// positive functions.
struct NonPositiveValue : Error {
    using Error::Error;
};

// Every combination point of the first-sense lattice fell outside the
// interval.
struct EmptyLattice : Error {
    using Error::Error;
};

// The adaptive integrator ran out of its evaluation budget.
struct ToleranceNotReached : Error {
    using Error::Error;
};

// The oracle integrator failed for a reason other than the budget
// (non-finite integrand values and the like).
struct OracleFailure : Error {
    using Error::Error;
};

} // namespace ostrowski
