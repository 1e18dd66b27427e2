#pragma once

// Pointwise formulas shared by the angle integrands, the admissibility
// constraints, the profile reconstruction and the curvature verifier.
// Everything is templated on the scalar so the verifier can run the same
// code in extended precision.

#include <array>

#include "desitter/radius.hpp"
#include "desitter/spec.hpp"

namespace desitter::detail {

template <class Real>
using Vec4 = std::array<Real, 4>;

template <class Real>
Real bilinear_k(AmbientForm form, const Vec4<Real>& u, const Vec4<Real>& v) {
    if (form == AmbientForm::Parabolic)
        return u[0] * v[0] + u[1] * v[1] + u[2] * v[3] + u[3] * v[2];
    return u[0] * v[0] + u[1] * v[1] + u[2] * v[2] - u[3] * v[3];
}

/// Radicand under the square root of the family's angle integrand.
template <class Real>
Real radicand_k(SurfaceFamily family, int eps, Real r, Real lambda) {
    const Real e = Real(eps);
    switch (family) {
        case SurfaceFamily::Spherical:
            return (lambda * lambda - e) * r * r + e;
        case SurfaceFamily::HyperbolicFirst:
            return (lambda * lambda - e) * r * r - e;
        case SurfaceFamily::Parabolic:
            return lambda * lambda - e;
        case SurfaceFamily::HyperbolicSecond:
            return Real(1) - (lambda * lambda + Real(1)) * r * r;
    }
    return Real(0);
}

/// The factor of the integrand denominator that can vanish inside the
/// radius domain (a pole of the integrand): y^2-1, 1+w^2, 1, 1-w^2.
template <class Real>
Real pole_factor_k(SurfaceFamily family, Real r) {
    switch (family) {
        case SurfaceFamily::Spherical: return r * r - Real(1);
        case SurfaceFamily::HyperbolicFirst: return Real(1) + r * r;
        case SurfaceFamily::Parabolic: return Real(1);
        case SurfaceFamily::HyperbolicSecond: return Real(1) - r * r;
    }
    return Real(0);
}

/// The generic angle integrand with the radius value supplied by the
/// caller. Sign conventions follow the generic construction; the
/// simplified closed-family forms are oriented to match it pointwise.
template <class Real>
Real phi_integrand_given_radius(SurfaceFamily family, int eps,
                                const WeingartenRelation& rel, Real r,
                                Real lambda) {
    using S = ScalarOps<Real>;
    const Real rad = radicand_k<Real>(family, eps, r, lambda);
    const Real root = S::sqrt(rad);
    if (family == SurfaceFamily::HyperbolicSecond) {
        const Real d = denominator_k<Real>(rel, DenominatorKind::FPlusLambda, eps, lambda);
        return lambda * r * r / ((Real(1) - r * r) * d * root);
    }
    const Real d = denominator_k<Real>(rel, DenominatorKind::EpsFMinusLambda, eps, lambda);
    if (family == SurfaceFamily::Parabolic) return lambda / (r * d * root);
    return lambda * r * r / (pole_factor_k<Real>(family, r) * d * root);
}

/// Algebraically simplified integrand for linear and power relations,
/// written in terms of the power base rather than the composed radius.
/// Matches phi_integrand_given_radius pointwise (for power relations the
/// textbook-style form carries the opposite global sign; it is negated
/// here so that the branch parameter means the same thing on both paths).
template <class Real>
Real phi_integrand_simplified_k(const RadiusFunction& rf, Real lambda) {
    using S = ScalarOps<Real>;
    const Real base = radius_base_k<Real>(rf, lambda);
    const double p = radius_exponent_impl(rf);
    const Real c2 = Real(rf.c) * Real(rf.c);
    const Real b2p = real_power<Real>(base, 2.0 * p);
    const Real bnum = real_power<Real>(base, 2.0 * p - 1.0);
    const Real lam2 = lambda * lambda;

    if (rf.family == SurfaceFamily::HyperbolicSecond) {
        const Real pole = Real(1) - c2 * b2p;
        const Real rad = Real(1) - (lam2 + Real(1)) * c2 * b2p;
        Real num;
        if (std::holds_alternative<LinearRelation>(rf.rel)) {
            num = lambda;
        } else {
            const auto& pw = std::get<PowerRelation>(rf.rel);
            num = real_power<Real>(lambda, 1.0 - pw.m);
        }
        return c2 * num * bnum / (pole * S::sqrt(rad));
    }

    const Real dlt = Real(family_delta(rf.family));
    const Real e = Real(rf.eps);
    const Real pole = c2 * b2p - dlt;
    const Real rad = c2 * (lam2 - e) * b2p + dlt * e;
    Real num;
    Real orient = Real(1);
    if (std::holds_alternative<LinearRelation>(rf.rel)) {
        num = lambda;
    } else {
        const auto& pw = std::get<PowerRelation>(rf.rel);
        num = real_power<Real>(lambda, 1.0 - pw.m);
        orient = Real(-1);
    }
    return orient * c2 * num * bnum / (pole * S::sqrt(rad));
}

// ---- profile reconstruction ----

/// Coordinates of the profile curve, ordered (y,z,w) for the spherical
/// family, (x,y,w) for both hyperbolic kinds and (x,z,w) for the
/// parabolic one.
template <class Real>
std::array<Real, 3> profile_coords_k(SurfaceFamily family,
                                     std::optional<SphericalRegime> regime,
                                     Real r, Real phi) {
    using S = ScalarOps<Real>;
    switch (family) {
        case SurfaceFamily::Spherical: {
            if (regime == SphericalRegime::YLessOne) {
                const Real rho = S::sqrt(Real(1) - r * r);
                return {r, rho * S::cosh(phi), rho * S::sinh(phi)};
            }
            const Real rho = S::sqrt(r * r - Real(1));
            return {r, rho * S::sinh(phi), rho * S::cosh(phi)};
        }
        case SurfaceFamily::HyperbolicFirst: {
            const Real rho = S::sqrt(Real(1) + r * r);
            return {rho * S::cos(phi), rho * S::sin(phi), r};
        }
        case SurfaceFamily::HyperbolicSecond: {
            const Real rho = S::sqrt(Real(1) - r * r);
            return {rho * S::cos(phi), rho * S::sin(phi), r};
        }
        case SurfaceFamily::Parabolic: {
            const Real x = phi * r;
            return {x, r, (Real(1) - x * x) / (Real(2) * r)};
        }
    }
    return {};
}

template <class Real>
Vec4<Real> embed_k(SurfaceFamily family, const std::array<Real, 3>& pc, Real v) {
    using S = ScalarOps<Real>;
    switch (family) {
        case SurfaceFamily::Spherical:
            return {pc[0] * S::sin(v), pc[0] * S::cos(v), pc[1], pc[2]};
        case SurfaceFamily::HyperbolicFirst:
            return {pc[0], pc[1], pc[2] * S::sinh(v), pc[2] * S::cosh(v)};
        case SurfaceFamily::HyperbolicSecond:
            return {pc[0], pc[1], pc[2] * S::cosh(v), pc[2] * S::sinh(v)};
        case SurfaceFamily::Parabolic:
            return {pc[0], v * pc[1], pc[1],
                    -v * v * pc[1] / Real(2) + pc[2]};
    }
    return {};
}

/// Analytic d/dv of the embedding.
template <class Real>
Vec4<Real> embed_dv_k(SurfaceFamily family, const std::array<Real, 3>& pc, Real v) {
    using S = ScalarOps<Real>;
    switch (family) {
        case SurfaceFamily::Spherical:
            return {pc[0] * S::cos(v), -pc[0] * S::sin(v), Real(0), Real(0)};
        case SurfaceFamily::HyperbolicFirst:
            return {Real(0), Real(0), pc[2] * S::cosh(v), pc[2] * S::sinh(v)};
        case SurfaceFamily::HyperbolicSecond:
            return {Real(0), Real(0), pc[2] * S::sinh(v), pc[2] * S::cosh(v)};
        case SurfaceFamily::Parabolic:
            return {Real(0), pc[1], Real(0), -v * pc[1]};
    }
    return {};
}

/// Analytic d2/dv2 of the embedding.
template <class Real>
Vec4<Real> embed_dvv_k(SurfaceFamily family, const std::array<Real, 3>& pc, Real v) {
    using S = ScalarOps<Real>;
    switch (family) {
        case SurfaceFamily::Spherical:
            return {-pc[0] * S::sin(v), -pc[0] * S::cos(v), Real(0), Real(0)};
        case SurfaceFamily::HyperbolicFirst:
            return {Real(0), Real(0), pc[2] * S::sinh(v), pc[2] * S::cosh(v)};
        case SurfaceFamily::HyperbolicSecond:
            return {Real(0), Real(0), pc[2] * S::cosh(v), pc[2] * S::sinh(v)};
        case SurfaceFamily::Parabolic:
            return {Real(0), Real(0), Real(0), -pc[1]};
    }
    return {};
}

} // namespace desitter::detail
