#include "desitter/curvature.hpp"

#include <cmath>

#include "desitter/detail/stencil_eval.hpp"

namespace desitter {

namespace {

#ifdef DESITTER_HAVE_FLOAT128
using VerifyReal = __float128;
#else
using VerifyReal = long double;
#endif

void check_stencil(const SurfaceSpec& spec, double lambda, double h) {
    if (!(h > 0.0)) throw DomainError("curvature: step h must be positive");
    for (double x : {lambda - h, lambda, lambda + h}) {
        const PointCheck pc = check_point(spec, x);
        if (!pc.ok)
            throw StepOutsideAdmissible("curvature: stencil point leaves the "
                                        "admissible interval (" + pc.violated + ")");
    }
}

detail::StencilFrame<VerifyReal> eval_frame(const SurfaceSpec& spec, double lambda,
                                            double v, double h) {
    check_stencil(spec, lambda, h);
    const double phi_center = integrate_phi(angle_integral(spec), spec.quad, lambda);
    const detail::StencilEval<VerifyReal> ev(spec, lambda, h, phi_center);
    return ev.frame(v);
}

} // namespace

Vector4 unit_normal(const SurfaceSpec& spec, double lambda, double v, double h) {
    const auto f = eval_frame(spec, lambda, v, h);
    return Vector4{double(f.normal[0]), double(f.normal[1]), double(f.normal[2]),
                   double(f.normal[3])};
}

FundamentalForms fundamental_forms(const SurfaceSpec& spec, double lambda,
                                   double v, double h) {
    const auto f = eval_frame(spec, lambda, v, h);
    FundamentalForms ff;
    ff.E = double(f.E);
    ff.F = double(f.F);
    ff.G = double(f.G);
    ff.L = double(f.L);
    ff.M = double(f.M);
    ff.N = double(f.N);
    ff.normal_sign = 1;
    return ff;
}

std::pair<double, double> principal_curvatures(const FundamentalForms& ff,
                                               double cross_tol) {
    const double metric_scale = std::max({1.0, std::fabs(ff.E), std::fabs(ff.G)});
    const double shape_scale = std::max({1.0, std::fabs(ff.L), std::fabs(ff.N)});
    if (ff.E == 0.0 || ff.G == 0.0 || ff.E * ff.G - ff.F * ff.F == 0.0)
        throw DegenerateFrame("principal_curvatures: degenerate induced metric");
    if (std::fabs(ff.F) > cross_tol * metric_scale ||
        std::fabs(ff.M) > cross_tol * shape_scale)
        throw NonDiagonal("principal_curvatures: cross terms exceed tolerance; "
                          "coordinates are not curvature lines here");
    const double s = ff.normal_sign;
    return {s * ff.L / ff.E, s * ff.N / ff.G};
}

Calibration calibrate(const SurfaceSpec& spec, double v, double h) {
    // The sign choices are read off one sample, so that sample must have
    // lambda, f(lambda) and |p|-|q| all resolvable above noise; e.g. a spec
    // with f(lambda_ref) = 0 leaves the profile sign undetermined exactly at
    // lambda_ref. Probe outward from lambda_ref until the point is
    // well-conditioned, falling back to lambda_ref itself.
    const double lam0 = spec.lambda_ref;
    const double offsets[] = {0.0, 8.0, -8.0, 64.0, -64.0, 512.0, -512.0,
                              4096.0, -4096.0};

    Calibration cal;
    bool have_fallback = false;
    Calibration fallback;
    double fb_p = 0, fb_q = 0;

    for (double k : offsets) {
        const double lam = lam0 + k * h;
        double p, q;
        try {
            const auto ff = fundamental_forms(spec, lam, v, h);
            std::tie(p, q) = principal_curvatures(ff);
        } catch (const Error&) {
            continue;
        }

        Calibration c;
        double best = std::numeric_limits<double>::infinity();
        for (bool swapped : {false, true}) {
            const double cand = swapped ? p : q;
            for (int s : {1, -1}) {
                const double err = std::fabs(s * cand - lam);
                if (err < best) {
                    best = err;
                    c.swapped = swapped;
                    c.sign_rotation = s;
                }
            }
        }
        const double lam_meas = c.sign_rotation * (c.swapped ? p : q);
        const double other = c.swapped ? q : p;
        const double f0 = eval_f(spec.rel, lam_meas);
        c.sign_profile = std::fabs(other - f0) <= std::fabs(-other - f0) ? 1 : -1;

        if (const auto* lin = std::get_if<LinearRelation>(&spec.rel)) {
            double H = 0.0;
            if (spec.family == SurfaceFamily::HyperbolicSecond && lin->a == 1.0)
                H = lin->b / 2.0;
            else if (lin->a == -spec.eps)
                H = spec.eps * lin->b / 2.0;
            c.eps_H = (0.5 * (p + q) * H >= 0.0) ? 1 : -1;
        }

        if (!have_fallback) {
            have_fallback = true;
            fallback = c;
            fb_p = p;
            fb_q = q;
        }
        const double scale = std::max({1.0, std::fabs(lam_meas), std::fabs(f0)});
        const bool conditioned = std::fabs(lam_meas) > 1e-4 * scale &&
                                 std::fabs(f0) > 1e-4 * scale &&
                                 std::fabs(std::fabs(p) - std::fabs(q)) > 1e-4 * scale;
        if (conditioned) return c;
    }
    if (!have_fallback)
        throw StepOutsideAdmissible("calibrate: no admissible probe point near "
                                    "lambda_ref");
    (void)fb_p;
    (void)fb_q;
    return fallback;
}

CurvatureReport verify_point(const SurfaceSpec& spec, const Calibration& cal,
                             double lambda, double v, double h) {
    const auto ff = fundamental_forms(spec, lambda, v, h);
    const auto [p, q] = principal_curvatures(ff);

    CurvatureReport rep;
    rep.lambda_measured = cal.sign_rotation * (cal.swapped ? p : q);
    rep.kappa_measured = cal.sign_profile * (cal.swapped ? q : p);
    rep.parameter_residual = rep.lambda_measured - lambda;
    rep.weingarten_residual = rep.kappa_measured - eval_f(spec.rel, rep.lambda_measured);
    rep.H_derived = 0.5 * (p + q);
    rep.K_ext_derived = rep.kappa_measured * rep.lambda_measured;
    return rep;
}

bool report_within(const CurvatureReport& rep, const VerifyTolerances& tol) {
    return std::fabs(rep.parameter_residual) <= tol.max_param &&
           std::fabs(rep.weingarten_residual) <= tol.max_weingarten;
}

} // namespace desitter
