#include "desitter/phi.hpp"

#include <cmath>

#include "desitter/detail/family_forms.hpp"

namespace desitter {

namespace {

struct Pieces {
    double r, denom, pole, radicand;
};

Pieces evaluate_pieces(const AngleIntegral& ai, double lambda) {
    Pieces p{};
    try {
        p.r = radius(ai.rf, lambda, ai.radius_quad);
    } catch (const DomainError&) {
        throw OutsideAdmissible(lambda, "radius_base",
                                "phi_integrand: radius base not positive");
    } catch (const SingularPath&) {
        throw OutsideAdmissible(lambda, "radius_domain",
                                "phi_integrand: radius path crosses a singularity");
    }
    p.denom = denominator(ai.rf.rel, family_denominator_kind(ai.rf.family),
                          ai.rf.eps, lambda);
    p.pole = detail::pole_factor_k<double>(ai.rf.family, p.r);
    p.radicand = detail::radicand_k<double>(ai.rf.family, ai.rf.eps, p.r, lambda);
    if (!(p.radicand > 0.0))
        throw OutsideAdmissible(lambda, "radicand",
                                "phi_integrand: radicand not positive");
    if (p.denom == 0.0)
        throw OutsideAdmissible(lambda, "denominator",
                                "phi_integrand: umbilic denominator vanishes");
    if (p.pole == 0.0)
        throw OutsideAdmissible(lambda, "pole",
                                "phi_integrand: pole factor vanishes");
    return p;
}

void check_path(const AngleIntegral& ai, double lambda) {
    const double a = ai.rf.lambda_ref;
    const Pieces pa = evaluate_pieces(ai, a);        // throws OutsideAdmissible
    const Pieces pb = evaluate_pieces(ai, lambda);   // throws OutsideAdmissible
    (void)pb;

    // a denominator sign flip marks an umbilic root only where its zeros are
    // not already the radius-base boundary: custom relations and power
    // relations with m > 0 (elsewhere the flip is a harmless pole, e.g. the
    // second-kind power denominator at lambda = 0)
    bool track_denom = std::holds_alternative<CustomRelation>(ai.rf.rel);
    if (const auto* pw = std::get_if<PowerRelation>(&ai.rf.rel))
        track_denom = pw->m > 0.0;

    const double lo = std::min(a, lambda), hi = std::max(a, lambda);
    const int n = 257;
    auto sgn = [](double v) { return v > 0.0 ? 1 : -1; };
    for (int i = 1; i + 1 < n; ++i) {
        const double t = lo + (hi - lo) * i / (n - 1);
        try {
            const Pieces p = evaluate_pieces(ai, t);
            if ((track_denom && sgn(p.denom) != sgn(pa.denom)) ||
                sgn(p.pole) != sgn(pa.pole))
                throw PathCrossesSingularity(
                    "integrate_phi: lambda and lambda_ref lie in different "
                    "admissible intervals");
        } catch (const OutsideAdmissible&) {
            throw PathCrossesSingularity(
                "integrate_phi: integration path leaves the admissible interval");
        }
    }
}

} // namespace

AngleIntegral angle_integral(const SurfaceSpec& spec) {
    validate(spec);
    return AngleIntegral{radius_function(spec), spec.branch, spec.phi0, spec.quad};
}

double phi_integrand(const AngleIntegral& ai, double lambda) {
    const Pieces p = evaluate_pieces(ai, lambda);
    return detail::phi_integrand_given_radius<double>(ai.rf.family, ai.rf.eps,
                                                      ai.rf.rel, p.r, lambda);
}

double phi_integrand_simplified(const AngleIntegral& ai, double lambda) {
    if (std::holds_alternative<CustomRelation>(ai.rf.rel))
        throw UnsupportedSpec("phi_integrand_simplified: custom relations have no "
                              "closed-family form");
    evaluate_pieces(ai, lambda); // same admissibility guards as the generic path
    return detail::phi_integrand_simplified_k<double>(ai.rf, lambda);
}

double integrate_phi(const AngleIntegral& ai, const QuadratureConfig& cfg,
                     double lambda) {
    if (ai.branch != 1 && ai.branch != -1)
        throw ConfigError("integrate_phi: branch must be +-1");
    if (lambda == ai.rf.lambda_ref) return ai.phi0;
    check_path(ai, lambda);
    const double integral = integrate(
        [&](double t) { return phi_integrand(ai, t); }, ai.rf.lambda_ref, lambda, cfg);
    return ai.phi0 + ai.branch * integral;
}

double phi_closed_family(const AngleIntegral& ai, const QuadratureConfig& cfg,
                         double lambda) {
    if (ai.branch != 1 && ai.branch != -1)
        throw ConfigError("phi_closed_family: branch must be +-1");
    if (std::holds_alternative<CustomRelation>(ai.rf.rel))
        throw UnsupportedSpec("phi_closed_family: custom relations have no "
                              "closed-family form");
    if (lambda == ai.rf.lambda_ref) return ai.phi0;
    check_path(ai, lambda);
    const double integral = integrate(
        [&](double t) { return phi_integrand_simplified(ai, t); },
        ai.rf.lambda_ref, lambda, cfg);
    return ai.phi0 + ai.branch * integral;
}

} // namespace desitter
