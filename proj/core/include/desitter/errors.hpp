#pragma once

#include <stdexcept>
#include <string>

namespace desitter {

/// Base class for every error thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Input outside the mathematical domain of an operation
/// (non-positive power base, fractional power of a negative number, ...).
struct DomainError : Error {
    using Error::Error;
};

/// Relation parameters for which a closed form does not exist
/// (linear a = epsilon, second-kind a = -1, power m = 1).
struct DegenerateRelation : Error {
    using Error::Error;
};

/// The denominator eps*f(lambda) - lambda (or f(lambda) + lambda) vanishes:
/// the lambda-parameterization breaks down at an umbilic point.
struct DegenerateAt : Error {
    double lambda;
    explicit DegenerateAt(double lam, const std::string& what)
        : Error(what), lambda(lam) {}
};

/// The integration path crosses a zero of the radius denominator.
struct SingularPath : Error {
    using Error::Error;
};

/// Adaptive quadrature exhausted its subdivision budget.
struct QuadratureFailure : Error {
    using Error::Error;
};

/// A point lies outside every admissible lambda-interval; carries the
/// identifier of the violated constraint.
struct OutsideAdmissible : Error {
    double lambda;
    std::string binding;
    OutsideAdmissible(double lam, std::string constraint, const std::string& what)
        : Error(what), lambda(lam), binding(std::move(constraint)) {}
};

/// lambda_ref and the requested lambda lie in different admissible intervals.
struct PathCrossesSingularity : Error {
    using Error::Error;
};

/// Spherical regime (y<1 vs y>1) inconsistent with the computed radius.
struct RegimeMismatch : Error {
    using Error::Error;
};

/// A finite-difference stencil leaves the admissible interval.
struct StepOutsideAdmissible : Error {
    using Error::Error;
};

/// The (r, r_lambda, r_v) frame is numerically rank-deficient.
struct DegenerateFrame : Error {
    using Error::Error;
};

/// Off-diagonal fundamental-form terms exceed tolerance; the coordinates
/// are expected to be curvature-line coordinates.
struct NonDiagonal : Error {
    using Error::Error;
};

/// No closed-form corollary interval table applies to the given spec.
struct UnsupportedSpec : Error {
    using Error::Error;
};

/// No admissible interval contains lambda_ref.
struct NoAdmissibleInterval : Error {
    using Error::Error;
};

struct ConfigError : Error {
    using Error::Error;
};

struct IOError : Error {
    using Error::Error;
};

} // namespace desitter
