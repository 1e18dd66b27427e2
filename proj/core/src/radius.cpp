#include "desitter/radius.hpp"

#include <cmath>
#include <string>

namespace desitter {

int family_delta(SurfaceFamily family) {
    switch (family) {
        case SurfaceFamily::Spherical: return 1;
        case SurfaceFamily::HyperbolicFirst: return -1;
        case SurfaceFamily::Parabolic: return 0;
        case SurfaceFamily::HyperbolicSecond:
            throw DomainError("family_delta: the second kind has no delta index");
    }
    return 0;
}

bool is_second_kind(SurfaceFamily family) {
    return family == SurfaceFamily::HyperbolicSecond;
}

DenominatorKind family_denominator_kind(SurfaceFamily family) {
    return is_second_kind(family) ? DenominatorKind::FPlusLambda
                                  : DenominatorKind::EpsFMinusLambda;
}

double radius_base(const RadiusFunction& rf, double lambda) {
    return detail::radius_base_k<double>(rf, lambda);
}

double radius_exponent(const RadiusFunction& rf) {
    return detail::radius_exponent_impl(rf);
}

double radius_closed_form(const RadiusFunction& rf, double lambda) {
    if (!(rf.c > 0.0)) throw DomainError("radius: constant c must be positive");
    return detail::radius_closed_k<double>(rf, lambda);
}

double radius_quadrature(const RadiusFunction& rf, double lambda,
                         const QuadratureConfig& cfg) {
    if (!(rf.c > 0.0)) throw DomainError("radius: constant c must be positive");
    const double a = rf.lambda_ref;
    if (lambda == a) return rf.c;

    // the defining ODE needs eps*f - lambda (or f + lambda) nonvanishing
    // and of one sign between lambda_ref and lambda
    const double lo = std::min(a, lambda), hi = std::max(a, lambda);
    const int n = 257;
    double first_sign = 0.0;
    for (int i = 0; i < n; ++i) {
        const double t = lo + (hi - lo) * i / (n - 1);
        const double d = denominator(rf.rel, family_denominator_kind(rf.family),
                                     rf.eps, t);
        if (d == 0.0 || !std::isfinite(d))
            throw SingularPath("radius_quadrature: denominator vanishes on the path");
        const double s = d > 0.0 ? 1.0 : -1.0;
        if (first_sign == 0.0) first_sign = s;
        else if (s != first_sign)
            throw SingularPath("radius_quadrature: denominator changes sign on the path");
    }

    const double integral = integrate(
        [&](double t) { return detail::radius_ode_rhs<double>(rf, t); }, a, lambda, cfg);
    return rf.c * std::exp(integral);
}

double radius(const RadiusFunction& rf, double lambda, const QuadratureConfig& cfg) {
    if (rf.mode == RadiusMode::ClosedForm) return radius_closed_form(rf, lambda);
    return radius_quadrature(rf, lambda, cfg);
}

double log_radius_derivative(const RadiusFunction& rf, double lambda) {
    const double d = denominator(rf.rel, family_denominator_kind(rf.family),
                                 rf.eps, lambda);
    if (d == 0.0)
        throw DegenerateAt(lambda, "log_radius_derivative: umbilic point, "
                                   "denominator vanishes at lambda = " +
                                       std::to_string(lambda));
    return is_second_kind(rf.family) ? -1.0 / d : 1.0 / d;
}

} // namespace desitter
