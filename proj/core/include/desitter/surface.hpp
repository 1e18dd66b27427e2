#pragma once

#include "desitter/admissibility.hpp"
#include "desitter/minkowski.hpp"
#include "desitter/phi.hpp"

namespace desitter {

/// Profile-curve point. Coordinate order by family:
/// spherical (y,z,w), hyperbolic first/second kind (x,y,w),
/// parabolic (x,z,w).
struct ProfilePoint {
    double lambda = 0.0;
    double radius = 0.0;
    double phi = 0.0;
    std::array<double, 3> coords{};
};

/// y^2+z^2-w^2-1, x^2+y^2-+w^2-1 or 2zw+x^2-1, per family.
double profile_constraint_residual(SurfaceFamily family,
                                   const std::array<double, 3>& coords);

ProfilePoint profile_point(const SurfaceSpec& spec, double lambda);

/// Rotate/boost/shear the profile point into the surface point r(lambda,v).
Vector4 embed_profile(SurfaceFamily family, const ProfilePoint& pp, double v);

Vector4 embed(const SurfaceSpec& spec, double lambda, double v);

struct TangentFrame {
    Vector4 r_lambda; // central difference of the full reconstruction
    Vector4 r_v;      // analytic
};

TangentFrame tangent_frame(const SurfaceSpec& spec, double lambda, double v,
                           double h);

} // namespace desitter
