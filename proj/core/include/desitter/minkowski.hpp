#pragma once

#include <array>
#include <cmath>

#include "desitter/errors.hpp"

namespace desitter {

/// Ambient vector in E^4_1. Components are plain coordinates; which
/// bilinear form applies is carried separately so the parabolic family
/// cannot leak its form into the others.
struct Vector4 {
    double x1 = 0.0, x2 = 0.0, x3 = 0.0, x4 = 0.0;

    constexpr Vector4() = default;
    constexpr Vector4(double a, double b, double c, double d)
        : x1(a), x2(b), x3(c), x4(d) {}

    double operator[](int i) const { return std::array{x1, x2, x3, x4}[i]; }

    bool finite() const {
        return std::isfinite(x1) && std::isfinite(x2) &&
               std::isfinite(x3) && std::isfinite(x4);
    }

    friend Vector4 operator+(const Vector4& u, const Vector4& v) {
        return {u.x1 + v.x1, u.x2 + v.x2, u.x3 + v.x3, u.x4 + v.x4};
    }
    friend Vector4 operator-(const Vector4& u, const Vector4& v) {
        return {u.x1 - v.x1, u.x2 - v.x2, u.x3 - v.x3, u.x4 - v.x4};
    }
    friend Vector4 operator*(double s, const Vector4& v) {
        return {s * v.x1, s * v.x2, s * v.x3, s * v.x4};
    }
    friend Vector4 operator/(const Vector4& v, double s) {
        return {v.x1 / s, v.x2 / s, v.x3 / s, v.x4 / s};
    }
};

/// The two signature-(3,1) bilinear forms used by the construction.
/// Standard: diag(1,1,1,-1). Parabolic: x1y1 + x2y2 + x3y4 + x4y3,
/// i.e. the 3-4 block is [[0,1],[1,0]]; the forms are isometric.
enum class AmbientForm { Standard, Parabolic };

enum class CausalCharacter { Spacelike, Timelike, Null };

double bilinear(AmbientForm form, const Vector4& u, const Vector4& v);

/// g(p,p) - 1; zero iff p lies on the unit pseudo-sphere under `form`.
double quadric_residual(AmbientForm form, const Vector4& p);

/// Sign of g(v,v) thresholded at +-tol; |g(v,v)| <= tol classifies as Null.
/// The tolerance is interpreted relative to the squared magnitude of the
/// largest component, so O(1) vectors use it as an absolute threshold.
CausalCharacter causal_character(AmbientForm form, const Vector4& v,
                                 double tol = 1e-12);

} // namespace desitter
