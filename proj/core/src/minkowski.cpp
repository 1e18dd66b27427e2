#include "desitter/minkowski.hpp"

#include <algorithm>

namespace desitter {

double bilinear(AmbientForm form, const Vector4& u, const Vector4& v) {
    switch (form) {
        case AmbientForm::Standard:
            return u.x1 * v.x1 + u.x2 * v.x2 + u.x3 * v.x3 - u.x4 * v.x4;
        case AmbientForm::Parabolic:
            return u.x1 * v.x1 + u.x2 * v.x2 + u.x3 * v.x4 + u.x4 * v.x3;
    }
    return 0.0; // unreachable
}

double quadric_residual(AmbientForm form, const Vector4& p) {
    return bilinear(form, p, p) - 1.0;
}

CausalCharacter causal_character(AmbientForm form, const Vector4& v, double tol) {
    if (tol <= 0.0)
        throw DomainError("causal_character: tolerance must be positive");
    const double g = bilinear(form, v, v);
    const double mx = std::max({std::fabs(v.x1), std::fabs(v.x2),
                                std::fabs(v.x3), std::fabs(v.x4)});
    const double scale = std::max(1.0, mx * mx);
    if (std::fabs(g) <= tol * scale) return CausalCharacter::Null;
    return g > 0.0 ? CausalCharacter::Spacelike : CausalCharacter::Timelike;
}

} // namespace desitter
