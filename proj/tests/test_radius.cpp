#include <doctest.h>

#include <cmath>

#include "desitter/radius.hpp"

using namespace desitter;

namespace {

RadiusFunction make_rf(SurfaceFamily fam, int eps, WeingartenRelation rel, double c,
                       RadiusMode mode = RadiusMode::ClosedForm,
                       double lambda_ref = 0.0) {
    return RadiusFunction{fam, eps, std::move(rel), c, mode, lambda_ref};
}

} // namespace

TEST_CASE("closed-form radius values") {
    // spacelike spherical CMC H=1: y = c/sqrt(2(H-lambda))
    const auto cmc = make_rf(SurfaceFamily::Spherical, 1, LinearRelation{-1, 2}, 1.0);
    CHECK(radius_closed_form(cmc, 0.0) == doctest::Approx(1.0 / std::sqrt(2.0)));

    // constant-Gauss: y = c/sqrt(lambda^2 - a)
    const auto gauss = make_rf(SurfaceFamily::Spherical, 1, PowerRelation{3, -1}, 2.0);
    CHECK(radius_closed_form(gauss, 2.0) == doctest::Approx(2.0));

    // second kind CMC H=1: w = c/sqrt(2(H+lambda))
    const auto cmc2 =
        make_rf(SurfaceFamily::HyperbolicSecond, 1, LinearRelation{1, 2}, 1.0);
    CHECK(radius_closed_form(cmc2, 0.0) == doctest::Approx(1.0 / std::sqrt(2.0)));

    // second kind constant-Gauss: w = c/sqrt(lambda^2 + a)
    const auto gauss2 =
        make_rf(SurfaceFamily::HyperbolicSecond, 1, PowerRelation{3, -1}, 1.0);
    CHECK(radius_closed_form(gauss2, 1.0) == doctest::Approx(0.5));
}

TEST_CASE("closed-form errors") {
    const auto neg = make_rf(SurfaceFamily::Spherical, 1, LinearRelation{-1, 2}, 1.0);
    CHECK_THROWS_AS(radius_closed_form(neg, 2.0), DomainError); // base 2(1-2) < 0

    CHECK_THROWS_AS(
        radius_closed_form(
            make_rf(SurfaceFamily::Spherical, 1, LinearRelation{1, 1}, 1.0), 0.0),
        DegenerateRelation); // a = eps
    CHECK_THROWS_AS(
        radius_closed_form(
            make_rf(SurfaceFamily::HyperbolicSecond, 1, LinearRelation{-1, 1}, 1.0),
            0.0),
        DegenerateRelation); // a = -1
    CHECK_THROWS_AS(
        radius_closed_form(
            make_rf(SurfaceFamily::Parabolic, 1, PowerRelation{2, 1}, 1.0), 0.5),
        DegenerateRelation); // m = 1
    CHECK_THROWS_AS(radius_closed_form(make_rf(SurfaceFamily::Spherical, 1,
                                               LinearRelation{-1, 2}, -1.0),
                                       0.0),
                    DomainError); // c <= 0
}

TEST_CASE("quadrature mode reproduces closed forms after normalization") {
    QuadratureConfig cfg;
    const struct {
        SurfaceFamily fam;
        int eps;
        WeingartenRelation rel;
        double lambda_ref, lo, hi;
    } cases[] = {
        {SurfaceFamily::Spherical, 1, LinearRelation{-1, 4}, 0.0, -1.0, 1.2},
        {SurfaceFamily::HyperbolicFirst, -1, LinearRelation{1, -4}, 0.0, -1.0, 1.2},
        {SurfaceFamily::Spherical, 1, PowerRelation{3, -1}, 2.0, 1.9, 3.0},
        {SurfaceFamily::HyperbolicSecond, 1, LinearRelation{1, 2}, 0.5, -0.5, 1.5},
        {SurfaceFamily::HyperbolicSecond, 1, PowerRelation{3, -1}, 1.0, 0.5, 2.0},
    };
    for (const auto& tc : cases) {
        auto closed = make_rf(tc.fam, tc.eps, tc.rel, 1.0);
        auto quad = make_rf(tc.fam, tc.eps, tc.rel, 1.0, RadiusMode::Quadrature,
                            tc.lambda_ref);
        // absorb the integration constant: both modes equal at lambda_ref
        const double scale = radius_closed_form(closed, tc.lambda_ref);
        CHECK(radius_quadrature(quad, tc.lambda_ref, cfg) == 1.0);
        for (int i = 0; i <= 20; ++i) {
            const double lam = tc.lo + (tc.hi - tc.lo) * i / 20.0;
            const double want = radius_closed_form(closed, lam) / scale;
            const double got = radius_quadrature(quad, lam, cfg);
            CHECK(got == doctest::Approx(want).epsilon(1e-9));
        }
    }
}

TEST_CASE("quadrature mode rejects singular paths") {
    // denominator 2(H - lambda) vanishes at lambda = H = 2
    auto rf = make_rf(SurfaceFamily::Spherical, 1, LinearRelation{-1, 4}, 1.0,
                      RadiusMode::Quadrature, 0.0);
    CHECK_THROWS_AS(radius_quadrature(rf, 3.0, {}), SingularPath);
}

TEST_CASE("log radius derivative") {
    const auto cmc = make_rf(SurfaceFamily::Spherical, 1, LinearRelation{-1, 2}, 1.0);
    CHECK(log_radius_derivative(cmc, 0.0) == doctest::Approx(0.5)); // 1/(2(H-lambda)), H=1

    const auto second =
        make_rf(SurfaceFamily::HyperbolicSecond, 1, LinearRelation{1, 0}, 1.0);
    CHECK(log_radius_derivative(second, 1.0) == doctest::Approx(-0.5)); // -1/(2 lambda)

    CHECK_THROWS_AS(log_radius_derivative(cmc, 1.0), DegenerateAt); // umbilic at H

    // matches d/dlambda ln(closed form) by central difference
    const auto pw = make_rf(SurfaceFamily::Spherical, 1, PowerRelation{2, -1}, 1.0);
    const double lam = std::sqrt(1.0 + 2.0); // lambda^{1-m} = eps*a + 1
    const double h = 1e-6;
    const double fd = (std::log(radius_closed_form(pw, lam + h)) -
                       std::log(radius_closed_form(pw, lam - h))) /
                      (2 * h);
    CHECK(log_radius_derivative(pw, lam) == doctest::Approx(fd).epsilon(1e-7));
}

TEST_CASE("ODE residual of the closed forms") {
    // (d/dlambda) ln r == 1/(eps f - lambda) across the admissible interior
    const struct {
        SurfaceFamily fam;
        int eps;
        WeingartenRelation rel;
        double lo, hi;
    } cases[] = {
        {SurfaceFamily::Spherical, 1, LinearRelation{-1, 4}, -3.0, 1.4},
        {SurfaceFamily::HyperbolicFirst, -1, LinearRelation{1, -4}, -3.0, 1.4},
        {SurfaceFamily::Parabolic, 1, PowerRelation{2, -1}, 1.5, 4.0},
        {SurfaceFamily::HyperbolicSecond, 1, PowerRelation{2, -1}, 0.5, 4.0},
    };
    for (const auto& tc : cases) {
        const auto rf = make_rf(tc.fam, tc.eps, tc.rel, 1.3);
        for (int i = 1; i < 30; ++i) {
            const double lam = tc.lo + (tc.hi - tc.lo) * i / 30.0;
            const double h = 1e-5 * std::max(1.0, std::fabs(lam));
            const double fd = (std::log(radius_closed_form(rf, lam + h)) -
                               std::log(radius_closed_form(rf, lam - h))) /
                              (2 * h);
            CHECK(fd == doctest::Approx(log_radius_derivative(rf, lam)).epsilon(1e-6));
        }
    }
}

TEST_CASE("Bernoulli check for power relations") {
    // r(lambda) = c (lambda^{1-m} - eps a)^{1/(m-1)} satisfies
    // dlambda/dr + lambda/r = eps a lambda^m / r
    for (double m : {-1.0, -2.0, 3.0}) {
        const auto rf = make_rf(SurfaceFamily::Spherical, 1, PowerRelation{2, m}, 1.0);
        for (double lam : {1.8, 2.2, 2.9}) {
            if (!(radius_base(rf, lam) > 0.0)) continue;
            const double r = radius_closed_form(rf, lam);
            const double h = 1e-6 * std::max(1.0, std::fabs(lam));
            const double drdl = (radius_closed_form(rf, lam + h) -
                                 radius_closed_form(rf, lam - h)) /
                                (2 * h);
            const double dldr = 1.0 / drdl; // inverse-function derivative
            const double lhs = dldr + lam / r;
            const double rhs = 2.0 * std::pow(lam, m) / r; // eps a lambda^m / r
            CHECK(lhs == doctest::Approx(rhs).epsilon(1e-6));
        }
    }
}

TEST_CASE("positivity on the declared domain") {
    const auto rf = make_rf(SurfaceFamily::HyperbolicFirst, 1, PowerRelation{2, -1}, 0.7);
    for (int i = 0; i <= 50; ++i) {
        const double lam = 1.5 + 3.0 * i / 50.0;
        CHECK(radius_closed_form(rf, lam) > 0.0);
    }
}
