#pragma once

#include <optional>

#include "desitter/minkowski.hpp"
#include "desitter/radius.hpp"

namespace desitter {

/// Which branch of the spherical profile reconstruction applies. The two
/// regimes are different surfaces; the boundary y = 1 is excluded by the
/// admissibility constraints, and the choice is explicit user input
/// validated against the computed radius rather than auto-switched.
enum class SphericalRegime { YLessOne, YGreaterOne };

/// Complete recipe for one rotational surface.
struct SurfaceSpec {
    SurfaceFamily family = SurfaceFamily::Spherical;
    int eps = 1; // causal character of the profile direction; ignored for the second kind
    WeingartenRelation rel;
    double c = 1.0;
    double phi0 = 0.0;
    int branch = 1;
    double lambda_ref = 0.0;
    std::optional<SphericalRegime> regime; // spherical family only
    RadiusMode radius_mode = RadiusMode::ClosedForm;
    QuadratureConfig quad;
};

/// Throws ConfigError / DegenerateRelation on an ill-formed spec.
void validate(const SurfaceSpec& spec);

RadiusFunction radius_function(const SurfaceSpec& spec);

/// The ambient bilinear form the family's embedding lives in.
AmbientForm spec_form(SurfaceFamily family);

} // namespace desitter
