#pragma once

#include "desitter/spec.hpp"

namespace desitter {

/// One angle function phi(lambda) = phi0 + branch * integral from
/// lambda_ref of the family integrand. branch is the sign in front of
/// the integral; both signs give congruent surfaces and neither is
/// canonical.
struct AngleIntegral {
    RadiusFunction rf;
    int branch = 1;
    double phi0 = 0.0;
    QuadratureConfig radius_quad; // used when rf is in quadrature mode
};

AngleIntegral angle_integral(const SurfaceSpec& spec);

/// Pointwise integrand of the family's phi formula (branch not applied).
/// Throws OutsideAdmissible when any guard fails at lambda.
double phi_integrand(const AngleIntegral& ai, double lambda);

/// Simplified integrand written in terms of the closed-form power base;
/// linear and power relations only. Pointwise equal to phi_integrand.
double phi_integrand_simplified(const AngleIntegral& ai, double lambda);

/// phi0 + branch * integral_{lambda_ref}^{lambda} of the generic
/// integrand, by the scheme selected in cfg.
double integrate_phi(const AngleIntegral& ai, const QuadratureConfig& cfg,
                     double lambda);

/// As integrate_phi but through the simplified integrand. Throws
/// UnsupportedSpec for custom relations.
double phi_closed_family(const AngleIntegral& ai, const QuadratureConfig& cfg,
                         double lambda);

} // namespace desitter
