#include "desitter/surface.hpp"

#include <cmath>

#include "desitter/detail/family_forms.hpp"

namespace desitter {

void validate(const SurfaceSpec& spec) {
    if (!(spec.c > 0.0)) throw ConfigError("spec: constant c must be positive");
    if (spec.branch != 1 && spec.branch != -1)
        throw ConfigError("spec: branch must be +1 or -1");
    if (spec.eps != 1 && spec.eps != -1)
        throw ConfigError("spec: eps must be +1 or -1");
    if (!std::isfinite(spec.lambda_ref) || !std::isfinite(spec.phi0))
        throw ConfigError("spec: lambda_ref and phi0 must be finite");
    if ((spec.family == SurfaceFamily::Spherical) != spec.regime.has_value())
        throw ConfigError("spec: spherical specs need a regime, others must not "
                          "carry one");
    spec.quad.validate();

    if (const auto* cst = std::get_if<CustomRelation>(&spec.rel)) {
        if (!cst->f) throw ConfigError("spec: custom relation has no evaluator");
        if (spec.radius_mode == RadiusMode::ClosedForm)
            throw ConfigError("spec: closed-form radius requires a linear or "
                              "power relation");
    } else if (spec.radius_mode == RadiusMode::ClosedForm) {
        radius_exponent(radius_function(spec)); // throws DegenerateRelation
    }
}

RadiusFunction radius_function(const SurfaceSpec& spec) {
    return RadiusFunction{spec.family, spec.eps,     spec.rel,
                          spec.c,      spec.radius_mode, spec.lambda_ref};
}

AmbientForm spec_form(SurfaceFamily family) {
    return family == SurfaceFamily::Parabolic ? AmbientForm::Parabolic
                                              : AmbientForm::Standard;
}

double profile_constraint_residual(SurfaceFamily family,
                                   const std::array<double, 3>& pc) {
    switch (family) {
        case SurfaceFamily::Spherical: // (y,z,w)
            return pc[0] * pc[0] + pc[1] * pc[1] - pc[2] * pc[2] - 1.0;
        case SurfaceFamily::HyperbolicFirst: // (x,y,w)
            return pc[0] * pc[0] + pc[1] * pc[1] - pc[2] * pc[2] - 1.0;
        case SurfaceFamily::HyperbolicSecond:
            return pc[0] * pc[0] + pc[1] * pc[1] + pc[2] * pc[2] - 1.0;
        case SurfaceFamily::Parabolic: // (x,z,w)
            return 2.0 * pc[1] * pc[2] + pc[0] * pc[0] - 1.0;
    }
    return 0.0;
}

ProfilePoint profile_point(const SurfaceSpec& spec, double lambda) {
    validate(spec);
    const PointCheck pc = check_point(spec, lambda);
    if (!pc.ok) {
        if (pc.violated == "regime")
            throw RegimeMismatch("profile_point: radius inconsistent with the "
                                 "declared spherical regime");
        throw OutsideAdmissible(lambda, pc.violated,
                                "profile_point: lambda outside the admissible "
                                "interval (" + pc.violated + ")");
    }

    ProfilePoint out;
    out.lambda = lambda;
    out.radius = radius(radius_function(spec), lambda, spec.quad);
    out.phi = integrate_phi(angle_integral(spec), spec.quad, lambda);
    out.coords = detail::profile_coords_k<double>(spec.family, spec.regime,
                                                  out.radius, out.phi);
    return out;
}

Vector4 embed_profile(SurfaceFamily family, const ProfilePoint& pp, double v) {
    const auto p = detail::embed_k<double>(family, pp.coords, v);
    return Vector4{p[0], p[1], p[2], p[3]};
}

Vector4 embed(const SurfaceSpec& spec, double lambda, double v) {
    if (spec.family == SurfaceFamily::Spherical &&
        !(v >= 0.0 && v <= 2.0 * M_PI + 1e-12))
        throw DomainError("embed: spherical rotation angle v must lie in [0, 2pi]");
    return embed_profile(spec.family, profile_point(spec, lambda), v);
}

TangentFrame tangent_frame(const SurfaceSpec& spec, double lambda, double v,
                           double h) {
    if (!(h > 0.0)) throw DomainError("tangent_frame: step h must be positive");

    ProfilePoint plus, minus;
    try {
        plus = profile_point(spec, lambda + h);
        minus = profile_point(spec, lambda - h);
    } catch (const OutsideAdmissible&) {
        throw StepOutsideAdmissible("tangent_frame: stencil lambda +- h leaves "
                                    "the admissible interval");
    } catch (const RegimeMismatch&) {
        throw StepOutsideAdmissible("tangent_frame: stencil lambda +- h crosses "
                                    "the regime boundary");
    }

    const ProfilePoint center = profile_point(spec, lambda);
    TangentFrame tf;
    tf.r_lambda = (embed_profile(spec.family, plus, v) -
                   embed_profile(spec.family, minus, v)) /
                  (2.0 * h);
    const auto dv = detail::embed_dv_k<double>(spec.family, center.coords, v);
    tf.r_v = Vector4{dv[0], dv[1], dv[2], dv[3]};
    return tf;
}

} // namespace desitter
