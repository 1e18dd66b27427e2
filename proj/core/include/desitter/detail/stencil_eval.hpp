#pragma once

// Finite-difference evaluation of the fundamental forms. The stencil is
// evaluated in Real (by default __float128) so that second central
// differences at h ~ 1e-5 are truncation-dominated; in plain double the
// rounding floor 4*eps/h^2 would swamp them. Quadrature-valued pieces
// (phi and the quadrature-mode radius) are integrated incrementally over
// the stencil segments: constant offsets in phi or in the radius scale
// move within the same congruence family and cannot affect curvature, so
// only the tiny increments need to be accurate.

#include "desitter/detail/family_forms.hpp"
#include "desitter/quadrature.hpp"

namespace desitter::detail {

template <class Real>
Real det3(Real a, Real b, Real c, Real d, Real e, Real f, Real g, Real h, Real i) {
    return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g);
}

/// The vector Euclidean-orthogonal to three 4-vectors (cofactor expansion).
template <class Real>
Vec4<Real> cross4(const Vec4<Real>& u, const Vec4<Real>& v, const Vec4<Real>& w) {
    return {
        +det3(u[1], u[2], u[3], v[1], v[2], v[3], w[1], w[2], w[3]),
        -det3(u[0], u[2], u[3], v[0], v[2], v[3], w[0], w[2], w[3]),
        +det3(u[0], u[1], u[3], v[0], v[1], v[3], w[0], w[1], w[3]),
        -det3(u[0], u[1], u[2], v[0], v[1], v[2], w[0], w[1], w[2]),
    };
}

/// Metric-lowered copy: g(x, y) = lower(x) . y in the Euclidean sense.
template <class Real>
Vec4<Real> lower(AmbientForm form, const Vec4<Real>& a) {
    if (form == AmbientForm::Parabolic) return {a[0], a[1], a[3], a[2]};
    return {a[0], a[1], a[2], -a[3]};
}

/// Fixed (non-adaptive) composite GK15; the stencil segments are a few h
/// wide, where a two-panel rule for an analytic integrand is exact to
/// working precision.
template <class Real, class F>
Real integrate_fixed(F&& f, Real a, Real b, int panels = 2) {
    Real sum = Real(0);
    Real err;
    for (int i = 0; i < panels; ++i) {
        const Real x0 = a + (b - a) * Real(i) / Real(panels);
        const Real x1 = a + (b - a) * Real(i + 1) / Real(panels);
        sum += gk15_panel<Real>(f, x0, x1, err);
    }
    return sum;
}

template <class Real>
struct StencilFrame {
    Vec4<Real> r, r_lambda, r_v;
    Vec4<Real> r_ll, r_lv, r_vv;
    Vec4<Real> normal; // unit, before orientation calibration
    Real E, F, G, L, M, N;
};

template <class Real>
class StencilEval {
public:
    /// phi_center is the double-precision angle at the center point; the
    /// stencil adds extended-precision increments on top of it. Any error
    /// in the center value is a group translation of the whole stencil and
    /// cannot affect the measured curvatures.
    StencilEval(const SurfaceSpec& spec, double lambda, double h, double phi_center)
        : spec_(spec), rf_(radius_function(spec)), lam_(lambda), h_(h) {
        if (rf_.mode == RadiusMode::Quadrature)
            r_center_ = Real(radius(rf_, lambda, spec.quad));
        for (int k = -1; k <= 1; ++k) {
            const Real lk = lam_ + Real(k) * h_;
            rs_[k + 1] = radius_at(lk);
            phis_[k + 1] = Real(phi_center);
        }
        for (int k : {0, 1}) { // segments [center, -+h]
            const Real a = lam_;
            const Real b = lam_ + (k == 0 ? -h_ : h_);
            const Real inc = integrate_fixed<Real>(
                [&](Real t) { return integrand_at(t); }, a, b);
            phis_[k == 0 ? 0 : 2] += Real(spec_.branch) * inc;
        }
        for (int k = -1; k <= 1; ++k)
            coords_[k + 1] = profile_coords_k<Real>(spec_.family, spec_.regime,
                                                    rs_[k + 1], phis_[k + 1]);
    }

    StencilFrame<Real> frame(double v_in) const {
        const Real v = Real(v_in);
        const AmbientForm form = spec_form(spec_.family);
        StencilFrame<Real> f;
        const Vec4<Real> pm = embed_k<Real>(spec_.family, coords_[0], v);
        f.r = embed_k<Real>(spec_.family, coords_[1], v);
        const Vec4<Real> pp = embed_k<Real>(spec_.family, coords_[2], v);

        const Real two_h = Real(2) * h_;
        const Real h2 = h_ * h_;
        for (int i = 0; i < 4; ++i) {
            f.r_lambda[i] = (pp[i] - pm[i]) / two_h;
            f.r_ll[i] = (pp[i] - Real(2) * f.r[i] + pm[i]) / h2;
        }
        f.r_v = embed_dv_k<Real>(spec_.family, coords_[1], v);
        f.r_vv = embed_dvv_k<Real>(spec_.family, coords_[1], v);
        const Vec4<Real> dvp = embed_dv_k<Real>(spec_.family, coords_[2], v);
        const Vec4<Real> dvm = embed_dv_k<Real>(spec_.family, coords_[0], v);
        for (int i = 0; i < 4; ++i) f.r_lv[i] = (dvp[i] - dvm[i]) / two_h;

        // normal: Euclidean-orthogonal to the metric-lowered frame
        using S = ScalarOps<Real>;
        const Vec4<Real> lr = lower<Real>(form, f.r);
        const Vec4<Real> ll = lower<Real>(form, f.r_lambda);
        const Vec4<Real> lv = lower<Real>(form, f.r_v);
        Vec4<Real> xi = cross4<Real>(lr, ll, lv);
        auto enorm = [](const Vec4<Real>& a) {
            return ScalarOps<Real>::sqrt(a[0] * a[0] + a[1] * a[1] + a[2] * a[2] +
                                         a[3] * a[3]);
        };
        const Real scale = enorm(lr) * enorm(ll) * enorm(lv);
        if (!(enorm(xi) > Real(1e-12) * scale))
            throw DegenerateFrame("unit_normal: frame (r, r_lambda, r_v) is "
                                  "numerically rank-deficient");
        const Real g_xi = bilinear_k<Real>(form, xi, xi);
        const Real mag = S::sqrt(S::abs(g_xi));
        if (!(mag > Real(0)))
            throw DegenerateFrame("unit_normal: null normal direction");
        for (int i = 0; i < 4; ++i) xi[i] = xi[i] / mag;
        f.normal = xi;

        f.E = bilinear_k<Real>(form, f.r_lambda, f.r_lambda);
        f.F = bilinear_k<Real>(form, f.r_lambda, f.r_v);
        f.G = bilinear_k<Real>(form, f.r_v, f.r_v);
        f.L = bilinear_k<Real>(form, f.r_ll, xi);
        f.M = bilinear_k<Real>(form, f.r_lv, xi);
        f.N = bilinear_k<Real>(form, f.r_vv, xi);
        return f;
    }

private:
    Real radius_at(Real t) const {
        if (rf_.mode == RadiusMode::ClosedForm)
            return radius_closed_k<Real>(rf_, t);
        using S = ScalarOps<Real>;
        const Real inc = integrate_fixed<Real>(
            [&](Real u) { return radius_ode_rhs<Real>(rf_, u); }, lam_, t, 1);
        return r_center_ * S::exp(inc);
    }

    Real integrand_at(Real t) const {
        return phi_integrand_given_radius<Real>(spec_.family, spec_.eps, spec_.rel,
                                                radius_at(t), t);
    }

    const SurfaceSpec& spec_;
    RadiusFunction rf_;
    Real lam_, h_;
    Real r_center_ = Real(0);
    std::array<Real, 3> rs_, phis_;
    std::array<std::array<Real, 3>, 3> coords_;
};

} // namespace desitter::detail
