#include <doctest.h>

#include <cmath>

#include "desitter/phi.hpp"
#include "desitter/surface.hpp"

using namespace desitter;

namespace {

SurfaceSpec spherical_cmc(double H, double c, SphericalRegime regime,
                          double lambda_ref) {
    SurfaceSpec s;
    s.family = SurfaceFamily::Spherical;
    s.eps = 1;
    s.rel = LinearRelation{-1.0, 2.0 * H};
    s.c = c;
    s.lambda_ref = lambda_ref;
    s.regime = regime;
    return s;
}

} // namespace

TEST_CASE("parabolic integrand composes from its pieces") {
    // eps=1, CMC H=2, c=1, lambda=-2: lambda / (z * (eps f - lambda) * sqrt(l^2-1))
    SurfaceSpec s;
    s.family = SurfaceFamily::Parabolic;
    s.eps = 1;
    s.rel = LinearRelation{-1.0, 4.0};
    s.c = 1.0;
    s.lambda_ref = -2.0;
    const AngleIntegral ai = angle_integral(s);

    const double lam = -2.0;
    const double z = 1.0 / std::sqrt(2.0 * (2.0 - lam)); // 1/sqrt(8)
    const double denom = 2.0 * (2.0 - lam);              // 8
    const double root = std::sqrt(lam * lam - 1.0);      // sqrt(3)
    const double expected = lam / (z * denom * root);    // ~ -0.40825
    CHECK(expected == doctest::Approx(-0.408248290463863).epsilon(1e-12));
    CHECK(phi_integrand(ai, lam) == doctest::Approx(expected).epsilon(1e-13));
}

TEST_CASE("integrand vanishes at lambda = 0 when admissible") {
    const auto s = spherical_cmc(2.0, 1.0, SphericalRegime::YLessOne, 0.0);
    CHECK(phi_integrand(angle_integral(s), 0.0) == 0.0);
}

TEST_CASE("integrand blows up toward the y=1 pole") {
    const auto s = spherical_cmc(2.0, 1.0, SphericalRegime::YLessOne, 0.0);
    const AngleIntegral ai = angle_integral(s);
    // regime boundary at lambda = H - c^2/2 = 1.5
    double prev = 0.0;
    for (double d : {1e-2, 1e-4, 1e-6}) {
        const double val = std::fabs(phi_integrand(ai, 1.5 - d));
        CHECK(val > prev);
        prev = val;
    }
    CHECK(prev > 1e4);
}

TEST_CASE("integrate_phi basics") {
    auto s = spherical_cmc(2.0, 1.0, SphericalRegime::YLessOne, 0.0);
    s.phi0 = 0.7;
    const QuadratureConfig cfg;

    AngleIntegral ai = angle_integral(s);
    CHECK(integrate_phi(ai, cfg, 0.0) == 0.7); // empty integral, exactly phi0

    // branch antisymmetry about phi0, bit-exact
    const double plus = integrate_phi(ai, cfg, 1.0);
    ai.branch = -1;
    const double minus = integrate_phi(ai, cfg, 1.0);
    CHECK(plus - 0.7 == -(minus - 0.7));
}

TEST_CASE("the two quadrature schemes agree on phi") {
    const auto s = spherical_cmc(2.0, 1.0, SphericalRegime::YLessOne, 0.0);
    const AngleIntegral ai = angle_integral(s);
    QuadratureConfig a, b;
    a.scheme = QuadratureScheme::AdaptiveBisection;
    b.scheme = QuadratureScheme::DoubleExponential;
    for (int i = 1; i <= 10; ++i) {
        const double lam = -2.0 + 3.2 * i / 10.0; // up to 1.2 < 1.5
        CHECK(integrate_phi(ai, a, lam) ==
              doctest::Approx(integrate_phi(ai, b, lam)).epsilon(1e-9));
    }
}

TEST_CASE("additivity of the integral") {
    const auto s = spherical_cmc(2.0, 1.0, SphericalRegime::YLessOne, 0.0);
    AngleIntegral ai = angle_integral(s);
    const QuadratureConfig cfg;
    const double lam1 = 0.6, lam2 = 1.3;
    const double direct = integrate_phi(ai, cfg, lam2);
    AngleIntegral mid = ai;
    mid.rf.lambda_ref = lam1;
    mid.phi0 = integrate_phi(ai, cfg, lam1);
    const double chained = integrate_phi(mid, cfg, lam2);
    CHECK(std::fabs(direct - chained) <= 2.0 * cfg.abs_tol + 1e-12);
}

TEST_CASE("monotone phi where the integrand keeps one sign") {
    const auto s = spherical_cmc(2.0, 1.0, SphericalRegime::YLessOne, 0.25);
    const AngleIntegral ai = angle_integral(s);
    const QuadratureConfig cfg;
    // integrand < 0 on (0, 1.5): y<1 makes the pole factor negative
    double prev = integrate_phi(ai, cfg, 0.3);
    for (double lam : {0.5, 0.7, 0.9, 1.1, 1.3}) {
        const double cur = integrate_phi(ai, cfg, lam);
        CHECK(cur < prev);
        prev = cur;
    }
}

TEST_CASE("path errors") {
    // constant-Gauss hyperbolic first kind, a=2, c=2: two components +-sqrt(2)
    SurfaceSpec s;
    s.family = SurfaceFamily::HyperbolicFirst;
    s.eps = 1;
    s.rel = PowerRelation{2.0, -1.0};
    s.c = 2.0;
    s.lambda_ref = 2.0;
    const AngleIntegral ai = angle_integral(s);
    const QuadratureConfig cfg;
    CHECK_THROWS_AS(integrate_phi(ai, cfg, -2.0), PathCrossesSingularity);
    CHECK_THROWS_AS(integrate_phi(ai, cfg, 0.5), OutsideAdmissible);
}

TEST_CASE("simplified integrands match the generic ones pointwise") {
    struct Case {
        SurfaceSpec spec;
        double lo, hi;
    };
    std::vector<Case> cases;

    // CMC, all four families, both eps where defined
    cases.push_back({spherical_cmc(2.0, 1.0, SphericalRegime::YLessOne, 0.0), -2.0, 1.4});
    {
        SurfaceSpec s = spherical_cmc(2.0, 1.0, SphericalRegime::YLessOne, 1.2);
        s.eps = -1;
        s.rel = LinearRelation{1.0, -4.0}; // kappa = lambda - 2H, H=2
        cases.push_back({s, 1.05, 1.45});
    }
    {
        SurfaceSpec s;
        s.family = SurfaceFamily::HyperbolicFirst;
        s.eps = 1;
        s.rel = LinearRelation{-1.0, -2.0}; // H = -1
        s.c = 2.0;
        s.lambda_ref = -2.0;
        cases.push_back({s, -3.0, -1.1});
    }
    {
        SurfaceSpec s;
        s.family = SurfaceFamily::Parabolic;
        s.eps = 1;
        s.rel = LinearRelation{-1.0, 4.0};
        s.c = 1.0;
        s.lambda_ref = 1.5;
        cases.push_back({s, 1.1, 1.9});
    }
    {
        SurfaceSpec s;
        s.family = SurfaceFamily::HyperbolicSecond;
        s.rel = LinearRelation{1.0, 2.0}; // H = 1
        s.c = 1.0;
        s.lambda_ref = 1.0;
        cases.push_back({s, -0.3, 2.3});
    }
    // constant-Gauss (power m = -1) for a spacelike, a timelike and a second-kind spec
    {
        SurfaceSpec s;
        s.family = SurfaceFamily::Spherical;
        s.eps = 1;
        s.rel = PowerRelation{2.0, -1.0};
        s.c = 1.0;
        s.lambda_ref = 2.0;
        s.regime = SphericalRegime::YLessOne;
        cases.push_back({s, 1.8, 3.5});
    }
    {
        SurfaceSpec s;
        s.family = SurfaceFamily::HyperbolicFirst;
        s.eps = -1;
        s.rel = PowerRelation{2.0, -1.0};
        s.c = 1.0;
        s.lambda_ref = 0.5;
        cases.push_back({s, 0.1, 3.0});
    }
    {
        SurfaceSpec s;
        s.family = SurfaceFamily::HyperbolicSecond;
        s.rel = PowerRelation{4.0, -1.0};
        s.c = std::sqrt(2.0);
        s.lambda_ref = 0.5;
        cases.push_back({s, -1.3, 1.3});
    }
    // a general (non-corollary) linear and power relation
    {
        SurfaceSpec s;
        s.family = SurfaceFamily::HyperbolicFirst;
        s.eps = 1;
        s.rel = LinearRelation{2.0, 3.0};
        s.c = 2.0;
        s.lambda_ref = 2.0;
        cases.push_back({s, 1.6, 3.0});
    }
    {
        SurfaceSpec s;
        s.family = SurfaceFamily::Parabolic;
        s.eps = 1;
        s.rel = PowerRelation{2.0, -2.0};
        s.c = 1.0;
        s.lambda_ref = 2.0;
        cases.push_back({s, 1.5, 3.5});
    }

    for (const auto& tc : cases) {
        const AngleIntegral ai = angle_integral(tc.spec);
        int tested = 0;
        for (int i = 1; i < 50; ++i) {
            const double lam = tc.lo + (tc.hi - tc.lo) * i / 50.0;
            double generic;
            try {
                generic = phi_integrand(ai, lam);
            } catch (const OutsideAdmissible&) {
                continue;
            }
            const double simplified = phi_integrand_simplified(ai, lam);
            CHECK(std::fabs(generic - simplified) <=
                  1e-10 * std::max(1.0, std::fabs(generic)));
            ++tested;
        }
        CHECK(tested >= 30);
    }
}

TEST_CASE("phi_closed_family equals integrate_phi") {
    const auto s = spherical_cmc(2.0, 1.0, SphericalRegime::YLessOne, 0.0);
    const AngleIntegral ai = angle_integral(s);
    const QuadratureConfig cfg;
    CHECK(phi_closed_family(ai, cfg, 0.0) == s.phi0);
    for (double lam : {-1.0, 0.5, 1.2}) {
        CHECK(phi_closed_family(ai, cfg, lam) ==
              doctest::Approx(integrate_phi(ai, cfg, lam)).epsilon(1e-9));
    }

    SurfaceSpec cst = s;
    cst.rel = CustomRelation{[](double l) { return -l + 4.0; }, "custom CMC"};
    cst.radius_mode = RadiusMode::Quadrature;
    CHECK_THROWS_AS(phi_closed_family(angle_integral(cst), cfg, 0.5), UnsupportedSpec);
}
