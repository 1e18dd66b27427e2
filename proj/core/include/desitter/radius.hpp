#pragma once

#include "desitter/quadrature.hpp"
#include "desitter/weingarten.hpp"

namespace desitter {

/// The three rotation classes with a delta index (spherical 1, hyperbolic
/// first kind -1, parabolic 0) plus the hyperbolic second kind, which has
/// no delta and is always timelike.
enum class SurfaceFamily { Spherical, HyperbolicFirst, HyperbolicSecond, Parabolic };

/// delta for the families that have one; the second kind does not.
int family_delta(SurfaceFamily family);

bool is_second_kind(SurfaceFamily family);

DenominatorKind family_denominator_kind(SurfaceFamily family);

enum class RadiusMode { ClosedForm, Quadrature };

/// Recipe for the radius coordinate of a profile curve: y (spherical),
/// w (hyperbolic) or z (parabolic). In ClosedForm mode the relation must
/// be linear or power; Quadrature mode fixes the value c at lambda_ref and
/// integrates the defining ODE from there.
struct RadiusFunction {
    SurfaceFamily family = SurfaceFamily::Spherical;
    int eps = 1; // ignored for the second kind
    WeingartenRelation rel;
    double c = 1.0;
    RadiusMode mode = RadiusMode::ClosedForm;
    double lambda_ref = 0.0;
};

/// The power base of the closed form: W(lambda) = (eps*a-1)lambda + eps*b
/// for linear relations, S(lambda) = lambda^(1-m) - eps*a for power
/// relations; second-kind variants (a+1)lambda + b and lambda^(1-m) + a.
double radius_base(const RadiusFunction& rf, double lambda);

/// The exponent applied to the base: 1/(eps*a-1), -1/(a+1) or 1/(m-1).
double radius_exponent(const RadiusFunction& rf);

double radius_closed_form(const RadiusFunction& rf, double lambda);

double radius_quadrature(const RadiusFunction& rf, double lambda,
                         const QuadratureConfig& cfg = {});

/// Mode dispatch.
double radius(const RadiusFunction& rf, double lambda,
              const QuadratureConfig& cfg = {});

/// d(ln r)/dlambda = 1/(eps*f - lambda), or -1/(f + lambda) for the
/// second kind. Throws DegenerateAt when the denominator vanishes.
double log_radius_derivative(const RadiusFunction& rf, double lambda);

namespace detail {

/// lambda^e with integer exponents evaluated for any sign of lambda.
template <class Real>
Real real_power(Real x, double e) {
    using S = ScalarOps<Real>;
    if (is_integer(e)) {
        long n = static_cast<long>(e);
        if (n == 0) return Real(1);
        Real base = n < 0 ? Real(1) / x : x;
        unsigned long k = static_cast<unsigned long>(n < 0 ? -n : n);
        Real r = Real(1);
        while (k) {
            if (k & 1) r = r * base;
            base = base * base;
            k >>= 1;
        }
        return r;
    }
    if (!(x > Real(0)))
        throw DomainError("real_power: non-integer exponent requires a positive base");
    return S::pow(x, Real(e));
}

template <class Real>
Real radius_base_k(const RadiusFunction& rf, Real lambda) {
    const bool second = rf.family == SurfaceFamily::HyperbolicSecond;
    if (const auto* lin = std::get_if<LinearRelation>(&rf.rel)) {
        if (second) return Real(lin->a + 1.0) * lambda + Real(lin->b);
        const double ea = rf.eps * lin->a;
        return Real(ea - 1.0) * lambda + Real(rf.eps * lin->b);
    }
    if (const auto* pw = std::get_if<PowerRelation>(&rf.rel)) {
        const Real t = real_power<Real>(lambda, 1.0 - pw->m);
        if (second) return t + Real(pw->a);
        return t - Real(rf.eps * pw->a);
    }
    throw DegenerateRelation("radius_base: custom relations have no closed-form base");
}

inline double radius_exponent_impl(const RadiusFunction& rf) {
    const bool second = rf.family == SurfaceFamily::HyperbolicSecond;
    if (const auto* lin = std::get_if<LinearRelation>(&rf.rel)) {
        if (second) {
            if (lin->a == -1.0)
                throw DegenerateRelation("second-kind linear closed form needs a != -1");
            return -1.0 / (lin->a + 1.0);
        }
        const double ea = rf.eps * lin->a;
        if (ea == 1.0)
            throw DegenerateRelation("linear closed form needs a != eps");
        return 1.0 / (ea - 1.0);
    }
    if (const auto* pw = std::get_if<PowerRelation>(&rf.rel)) {
        if (pw->m == 1.0)
            throw DegenerateRelation("power closed form needs m != 1");
        return 1.0 / (pw->m - 1.0);
    }
    throw DegenerateRelation("radius_exponent: custom relations have no closed form");
}

template <class Real>
Real radius_closed_k(const RadiusFunction& rf, Real lambda) {
    using S = ScalarOps<Real>;
    const double p = radius_exponent_impl(rf);
    const Real base = radius_base_k<Real>(rf, lambda);
    if (!(base > Real(0)))
        throw DomainError("radius_closed_form: power base must be positive");
    // exp(p*ln(base)): base > 0 enforced above, no branch handling needed
    return Real(rf.c) * S::exp(Real(p) * S::log(base));
}

template <class Real>
Real radius_ode_rhs(const RadiusFunction& rf, Real lambda) {
    if (rf.family == SurfaceFamily::HyperbolicSecond)
        return Real(-1) / denominator_k<Real>(rf.rel, DenominatorKind::FPlusLambda,
                                              rf.eps, lambda);
    return Real(1) / denominator_k<Real>(rf.rel, DenominatorKind::EpsFMinusLambda,
                                         rf.eps, lambda);
}

} // namespace detail

} // namespace desitter
