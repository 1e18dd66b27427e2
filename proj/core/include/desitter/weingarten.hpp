#pragma once

#include <functional>
#include <string>
#include <variant>

#include "desitter/detail/scalar.hpp"
#include "desitter/errors.hpp"

namespace desitter {

/// kappa = a*lambda + b.
struct LinearRelation {
    double a = 0.0;
    double b = 0.0;
};

/// kappa = a * lambda^m. For non-integer m only lambda > 0 is admitted.
struct PowerRelation {
    double a = 0.0;
    double m = 0.0;
};

/// User-supplied kappa = f(lambda). The evaluator must be re-entrant;
/// it may be called concurrently from independent integrations.
struct CustomRelation {
    std::function<double(double)> f;
    std::string description;
};

using WeingartenRelation = std::variant<LinearRelation, PowerRelation, CustomRelation>;

/// Which radius denominator the family uses: eps*f(lambda) - lambda for
/// the spherical/hyperbolic-first/parabolic families, f(lambda) + lambda
/// for the hyperbolic second kind.
enum class DenominatorKind { EpsFMinusLambda, FPlusLambda };

double eval_f(const WeingartenRelation& rel, double lambda);

/// eps*f(lambda) - lambda or f(lambda) + lambda. A zero value flags an
/// umbilic point where the lambda-parameterization breaks down; callers
/// decide whether that is an error.
double denominator(const WeingartenRelation& rel, DenominatorKind kind,
                   int eps, double lambda);

namespace detail {

inline bool is_integer(double m) {
    return m == std::floor(m);
}

template <class Real>
Real eval_f_k(const WeingartenRelation& rel, Real lambda) {
    using S = ScalarOps<Real>;
    if (const auto* lin = std::get_if<LinearRelation>(&rel))
        return Real(lin->a) * lambda + Real(lin->b);
    if (const auto* pw = std::get_if<PowerRelation>(&rel)) {
        if (is_integer(pw->m)) {
            // integer exponents by repeated multiplication; valid for lambda < 0
            long n = static_cast<long>(pw->m);
            Real base = n < 0 ? Real(1) / lambda : lambda;
            unsigned long k = static_cast<unsigned long>(n < 0 ? -n : n);
            Real r = Real(1);
            while (k) {
                if (k & 1) r = r * base;
                base = base * base;
                k >>= 1;
            }
            return Real(pw->a) * r;
        }
        if (!(lambda > Real(0)))
            throw DomainError("eval_f: power relation with non-integer exponent "
                              "requires lambda > 0");
        return Real(pw->a) * S::pow(lambda, Real(pw->m));
    }
    const auto& cst = std::get<CustomRelation>(rel);
    return Real(cst.f(static_cast<double>(lambda)));
}

template <class Real>
Real denominator_k(const WeingartenRelation& rel, DenominatorKind kind,
                   int eps, Real lambda) {
    const Real f = eval_f_k<Real>(rel, lambda);
    if (kind == DenominatorKind::FPlusLambda) return f + lambda;
    return Real(eps) * f - lambda;
}

} // namespace detail

} // namespace desitter
