#pragma once

// Two independent one-dimensional integrators.
//
// The primary scheme is globally adaptive bisection with an embedded
// Gauss(7)/Kronrod(15) pair for the per-panel error estimate. The
// secondary scheme is tanh-sinh (double-exponential) quadrature, which
// pushes its nodes toward the endpoints at double-exponential rate and
// therefore copes with the inverse-square-root endpoint behaviour of the
// angle integrands. The two share nothing but the integrand, so their
// agreement is a meaningful cross-check.

#include <cmath>
#include <algorithm>
#include <cstddef>
#include <vector>

#include "desitter/detail/scalar.hpp"
#include "desitter/errors.hpp"

namespace desitter {

enum class QuadratureScheme { AdaptiveBisection, DoubleExponential };

struct QuadratureConfig {
    double abs_tol = 1e-12;
    double rel_tol = 1e-11;
    int max_subdivisions = 4000;
    /// Fraction of the interval length kept clear of singular endpoints;
    /// integration never evaluates exactly at an endpoint.
    double endpoint_inset = 1e-10;
    QuadratureScheme scheme = QuadratureScheme::AdaptiveBisection;

    void validate() const {
        if (!(abs_tol > 0.0) || !(rel_tol > 0.0))
            throw ConfigError("quadrature: tolerances must be positive");
        if (!(endpoint_inset > 0.0 && endpoint_inset < 0.5))
            throw ConfigError("quadrature: endpoint_inset must lie in (0, 0.5)");
        if (max_subdivisions < 1)
            throw ConfigError("quadrature: max_subdivisions must be >= 1");
    }
};

namespace detail {

// Gauss(7)/Kronrod(15) nodes and weights on [-1,1] (QUADPACK dqk15).
// Even indices of xgk are Kronrod-only nodes, odd indices Gauss nodes.
inline constexpr double kGK15Nodes[8] = {
    0.9914553711208126, 0.9491079123427585, 0.8648644233597691,
    0.7415311855993944, 0.5860872354676911, 0.4058451513773972,
    0.2077849550078985, 0.0};
inline constexpr double kGK15WeightsK[8] = {
    0.02293532201052922, 0.06309209262997855, 0.1047900103222502,
    0.1406532597155259,  0.1690047266392679,  0.1903505780647854,
    0.2044329400752989,  0.2094821410847278};
inline constexpr double kGauss7Weights[4] = {
    0.1294849661688697, 0.2797053914892767, 0.3818300505051189,
    0.4179591836734694};

template <class Real, class F>
Real gk15_panel(F&& f, Real a, Real b, Real& err) {
    using S = ScalarOps<Real>;
    const Real mid = (a + b) / Real(2);
    const Real hw = (b - a) / Real(2);

    const Real f0 = f(mid);
    Real gauss = Real(kGauss7Weights[3]) * f0;
    Real kron = Real(kGK15WeightsK[7]) * f0;
    for (int i = 0; i < 7; ++i) {
        const Real dx = hw * Real(kGK15Nodes[i]);
        const Real fi = f(mid + dx) + f(mid - dx);
        kron += Real(kGK15WeightsK[i]) * fi;
        if (i % 2 == 1) gauss += Real(kGauss7Weights[i / 2]) * fi;
    }
    kron *= hw;
    gauss *= hw;
    err = S::abs(kron - gauss);
    return kron;
}

} // namespace detail

/// Globally adaptive Gauss-Kronrod bisection of integral_a^b f: the panel
/// with the largest error estimate is split until the summed estimate
/// meets max(abs_tol, rel_tol*|I|). Panels narrower than
/// endpoint_inset*(b-a) are frozen; their residual estimate is the quoted
/// truncation near a singular endpoint, but a frozen estimate far above
/// tolerance (a non-integrable pole) is rejected rather than regularized.
/// Throws QuadratureFailure when max_subdivisions splits do not converge.
template <class F>
double integrate_adaptive(F&& f, double a, double b, const QuadratureConfig& cfg) {
    cfg.validate();
    if (a == b) return 0.0;
    double sign = 1.0;
    if (a > b) {
        std::swap(a, b);
        sign = -1.0;
    }
    const double total_len = b - a;

    struct Panel {
        double a, b, value, err;
        bool operator<(const Panel& o) const {
            if (err != o.err) return err < o.err;
            return a < o.a; // deterministic tie-break
        }
    };

    std::vector<Panel> heap; // max-heap on err
    double err0;
    const double i0 = detail::gk15_panel<double>(f, a, b, err0);
    heap.push_back({a, b, i0, err0});

    double frozen_value = 0.0, frozen_err = 0.0;
    double active_value = i0, active_err = err0;
    int splits = 0;

    const auto tol = [&] {
        return std::max(cfg.abs_tol,
                        cfg.rel_tol * std::fabs(active_value + frozen_value));
    };

    while (!heap.empty() && active_err > tol()) {
        std::pop_heap(heap.begin(), heap.end());
        const Panel p = heap.back();
        heap.pop_back();
        if ((p.b - p.a) <= cfg.endpoint_inset * total_len) {
            frozen_value += p.value;
            frozen_err += p.err;
            active_value -= p.value;
            active_err -= p.err;
            continue;
        }
        if (++splits > cfg.max_subdivisions)
            throw QuadratureFailure("integrate_adaptive: subdivision budget exhausted");
        const double mid = 0.5 * (p.a + p.b);
        double el, er;
        const double il = detail::gk15_panel<double>(f, p.a, mid, el);
        const double ir = detail::gk15_panel<double>(f, mid, p.b, er);
        active_value += il + ir - p.value;
        active_err += el + er - p.err;
        heap.push_back({p.a, mid, il, el});
        std::push_heap(heap.begin(), heap.end());
        heap.push_back({mid, p.b, ir, er});
        std::push_heap(heap.begin(), heap.end());
    }
    if (frozen_err > 1e3 * tol() + 1e-30)
        throw QuadratureFailure("integrate_adaptive: divergent behaviour at a "
                                "frozen (inset-limited) panel");
    return sign * (active_value + frozen_value);
}

/// tanh-sinh quadrature of integral_a^b f. Abscissae are generated from
/// the endpoint offsets so that near-singular endpoint factors are
/// evaluated without cancellation, and never land exactly on an endpoint:
/// nodes whose offset is no longer representable against the endpoint are
/// dropped, and that double-exponentially small tail is the quoted
/// truncation. Convergence is declared only after a confirming extra
/// refinement level.
template <class F>
double integrate_tanh_sinh(F&& f, double a, double b, const QuadratureConfig& cfg) {
    cfg.validate();
    if (a == b) return 0.0;
    double sign = 1.0;
    if (a > b) {
        std::swap(a, b);
        sign = -1.0;
    }
    const double hw = 0.5 * (b - a);
    const double mid = 0.5 * (a + b);
    (void)mid;
    constexpr double kHalfPi = 1.5707963267948966;
    constexpr double kTMax = 6.8;
    constexpr int kMaxLevel = 12;

    // weighted integrand at t; node placed relative to the nearer endpoint
    const auto term = [&](double t) -> double {
        const double u = kHalfPi * std::sinh(t);
        const double eu = std::exp(-2.0 * std::fabs(u));
        const double offset = hw * 2.0 * eu / (1.0 + eu); // hw*(1 - |tanh u|)
        if (offset == 0.0) return 0.0;
        const double x = t >= 0.0 ? b - offset : a + offset;
        if (x >= b || x <= a) return 0.0; // offset below the representable gap
        const double sech2 = 4.0 * eu / ((1.0 + eu) * (1.0 + eu));
        const double w = hw * kHalfPi * std::cosh(t) * sech2;
        const double v = w * f(x);
        return std::isfinite(v) ? v : 0.0;
    };

    double d = 1.0;
    double sum = term(0.0);
    for (double t = d; t <= kTMax; t += d) sum += term(t) + term(-t);
    double integral = sum * d;

    bool converged_once = false;
    for (int level = 1; level <= kMaxLevel; ++level) {
        d *= 0.5;
        double add = 0.0;
        for (double t = d; t <= kTMax; t += 2.0 * d) add += term(t) + term(-t);
        sum += add;
        const double next = sum * d;
        const double change = std::fabs(next - integral);
        integral = next;
        if (level >= 3 &&
            change <= std::max(cfg.abs_tol, cfg.rel_tol * std::fabs(next))) {
            if (converged_once) return sign * integral;
            converged_once = true; // one more level to confirm
        } else {
            converged_once = false;
        }
    }
    throw QuadratureFailure("integrate_tanh_sinh: no convergence at max level");
}

/// Scheme dispatch used by the public phi/radius entry points.
template <class F>
double integrate(F&& f, double a, double b, const QuadratureConfig& cfg) {
    if (cfg.scheme == QuadratureScheme::DoubleExponential)
        return integrate_tanh_sinh(std::forward<F>(f), a, b, cfg);
    return integrate_adaptive(std::forward<F>(f), a, b, cfg);
}

} // namespace desitter
