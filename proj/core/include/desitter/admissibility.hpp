#pragma once

#include <string>
#include <utility>
#include <vector>

#include "desitter/spec.hpp"

namespace desitter {

/// One scalar constraint of lambda. Positivity constraints must be
/// strictly positive on an admissible interval; sign constraints
/// (require_positive == false) must merely keep one sign, and their
/// roots split intervals.
struct Constraint {
    std::string id;
    std::function<double(double)> value;
    bool require_positive = true;
};

struct ConstraintSet {
    std::vector<Constraint> items;
};

/// The strict pointwise constraints of a spec: radius base (or path
/// validity in quadrature mode), spherical regime, the second-kind pole
/// factor, the integrand radicand, and the umbilic denominator where its
/// zeros are not already covered by the radius base.
ConstraintSet constraint_set(const SurfaceSpec& spec);

struct PointCheck {
    bool ok = true;
    std::string violated; // first violated constraint id
};

PointCheck check_point(const SurfaceSpec& spec, double lambda);

/// Maximal open interval on which every constraint holds, with the
/// constraint that binds at each endpoint ("window" when clipped).
struct AdmissibleInterval {
    double lo = 0.0;
    double hi = 0.0;
    std::string binding_lo;
    std::string binding_hi;
};

/// Grid sign-scan over `window` refined by bisection to 1e-12 relative.
std::vector<AdmissibleInterval> admissible_intervals(
    const SurfaceSpec& spec, std::pair<double, double> window = {-50.0, 50.0},
    int grid = 100000);

/// Closed-form interval tables for the constant-mean-curvature and
/// constant-Gauss configurations (linear a=-eps / second-kind a=1, and
/// power m=-1). Endpoints may be +-infinity. Throws UnsupportedSpec when
/// the spec matches none of them.
std::vector<AdmissibleInterval> corollary_intervals(const SurfaceSpec& spec);

struct OracleDiff {
    std::vector<AdmissibleInterval> scan;
    std::vector<AdmissibleInterval> corollary; // clipped to the window
    double max_endpoint_discrepancy = 0.0;
    double symmetric_difference_measure = 0.0;
    bool count_mismatch = false;
    std::vector<std::string> notes; // known discrepancies in the source tables
};

OracleDiff oracle_diff(const SurfaceSpec& spec,
                       std::pair<double, double> window = {-50.0, 50.0},
                       int grid = 100000);

} // namespace desitter
