#pragma once

// Scalar abstraction for the numeric kernels. The public API works in
// double; the curvature verifier instantiates the same kernels with
// __float128 so that second-difference stencils at h ~ 1e-5 stay
// truncation-dominated instead of drowning in rounding noise.

#include <cmath>

#if defined(__GNUC__) && defined(__x86_64__)
#define DESITTER_HAVE_FLOAT128 1
#include <quadmath.h>
#endif

namespace desitter::detail {

template <class Real>
struct ScalarOps {
    static Real sqrt(Real x) { return std::sqrt(x); }
    static Real exp(Real x) { return std::exp(x); }
    static Real log(Real x) { return std::log(x); }
    static Real pow(Real x, Real p) { return std::pow(x, p); }
    static Real sin(Real x) { return std::sin(x); }
    static Real cos(Real x) { return std::cos(x); }
    static Real sinh(Real x) { return std::sinh(x); }
    static Real cosh(Real x) { return std::cosh(x); }
    static Real abs(Real x) { return std::fabs(x); }
    static bool finite(Real x) { return std::isfinite(x); }
};

#ifdef DESITTER_HAVE_FLOAT128
template <>
struct ScalarOps<__float128> {
    static __float128 sqrt(__float128 x) { return sqrtq(x); }
    static __float128 exp(__float128 x) { return expq(x); }
    static __float128 log(__float128 x) { return logq(x); }
    static __float128 pow(__float128 x, __float128 p) { return powq(x, p); }
    static __float128 sin(__float128 x) { return sinq(x); }
    static __float128 cos(__float128 x) { return cosq(x); }
    static __float128 sinh(__float128 x) { return sinhq(x); }
    static __float128 cosh(__float128 x) { return coshq(x); }
    static __float128 abs(__float128 x) { return fabsq(x); }
    static bool finite(__float128 x) { return finiteq(x) != 0; }
};
#endif

} // namespace desitter::detail
