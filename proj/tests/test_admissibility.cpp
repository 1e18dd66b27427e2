#include <doctest.h>

#include <cmath>
#include <random>

#include "desitter/admissibility.hpp"

using namespace desitter;

namespace {

SurfaceSpec cmc_spec(SurfaceFamily fam, int eps, double H, double c,
                     std::optional<SphericalRegime> regime = {},
                     double lambda_ref = 0.0) {
    SurfaceSpec s;
    s.family = fam;
    s.eps = eps;
    if (fam == SurfaceFamily::HyperbolicSecond)
        s.rel = LinearRelation{1.0, 2.0 * H};
    else
        s.rel = LinearRelation{-double(eps), 2.0 * eps * H};
    s.c = c;
    s.lambda_ref = lambda_ref;
    s.regime = regime;
    return s;
}

SurfaceSpec gauss_spec(SurfaceFamily fam, int eps, double a, double c,
                       std::optional<SphericalRegime> regime = {},
                       double lambda_ref = 0.0) {
    SurfaceSpec s;
    s.family = fam;
    s.eps = eps;
    s.rel = PowerRelation{a, -1.0};
    s.c = c;
    s.lambda_ref = lambda_ref;
    s.regime = regime;
    return s;
}

} // namespace

TEST_CASE("spacelike spherical CMC case a: lambda < H - c^2/2") {
    // H=1, c=1: the y<1 region is everything left of 0.5
    const auto spec =
        cmc_spec(SurfaceFamily::Spherical, 1, 1.0, 1.0, SphericalRegime::YLessOne);
    const auto ivs = admissible_intervals(spec, {-50.0, 50.0}, 20000);
    REQUIRE(ivs.size() == 1);
    CHECK(ivs[0].lo == -50.0);
    CHECK(ivs[0].binding_lo == "window");
    CHECK(ivs[0].hi == doctest::Approx(0.5).epsilon(1e-10));
    CHECK(ivs[0].binding_hi == "regime");
}

TEST_CASE("spacelike spherical CMC case b: radicand roots bound the scan") {
    // radicand quadratic c^2 l^2 - 2 l + 2H - c^2; roots (1 +- sqrt(1-2Hc^2+c^4))/c^2
    auto check_roots = [](double H, double c) {
        const double disc = 1.0 - 2.0 * H * c * c + c * c * c * c;
        REQUIRE(disc > 0.0);
        const double r1 = (1.0 - std::sqrt(disc)) / (c * c);
        const double r2 = (1.0 + std::sqrt(disc)) / (c * c);
        for (double r : {r1, r2}) {
            const double val = c * c * r * r - 2.0 * r + 2.0 * H - c * c;
            CHECK(std::fabs(val) <= 1e-10);
        }
        return std::pair{r1, r2};
    };
    {
        const auto [r1, r2] = check_roots(-1.0, 2.0);
        CHECK(r1 == doctest::Approx(-1.0));
        CHECK(r2 == doctest::Approx(1.5));
    }
    {
        const auto [r1, r2] = check_roots(2.0, 2.0);
        CHECK(r1 == doctest::Approx(0.0));
        CHECK(r2 == doctest::Approx(0.5));
        // y>1 region (0, 2) minus [0, 0.5] leaves (0.5, 2)
        const auto spec = cmc_spec(SurfaceFamily::Spherical, 1, 2.0, 2.0,
                                   SphericalRegime::YGreaterOne, 1.0);
        const auto ivs = admissible_intervals(spec, {-50.0, 50.0}, 20000);
        REQUIRE(ivs.size() == 1);
        CHECK(ivs[0].lo == doctest::Approx(0.5).epsilon(1e-9));
        CHECK(ivs[0].hi == doctest::Approx(2.0).epsilon(1e-9));
        CHECK(ivs[0].binding_hi == "radius_base");
    }
}

TEST_CASE("constant-Gauss hyperbolic first kind: |lambda| > sqrt(a)") {
    const auto spec = gauss_spec(SurfaceFamily::HyperbolicFirst, 1, 2.0, 2.0, {}, 2.0);
    const auto ivs = admissible_intervals(spec, {-50.0, 50.0}, 20000);
    REQUIRE(ivs.size() == 2);
    CHECK(ivs[0].hi == doctest::Approx(-std::sqrt(2.0)).epsilon(1e-10));
    CHECK(ivs[1].lo == doctest::Approx(std::sqrt(2.0)).epsilon(1e-10));
}

TEST_CASE("corollary tables: timelike CMC") {
    // hyperbolic first kind, timelike: interval (-inf, H) for any H, c
    for (double H : {-1.5, 0.0, 2.0})
        for (double c : {0.5, 1.0, 2.0}) {
            const auto ivs =
                corollary_intervals(cmc_spec(SurfaceFamily::HyperbolicFirst, -1, H, c));
            REQUIRE(ivs.size() == 1);
            CHECK(std::isinf(ivs[0].lo));
            CHECK(ivs[0].hi == doctest::Approx(H));
        }
}

TEST_CASE("corollary tables: constant-Gauss whole-line cases") {
    // timelike hyperbolic first kind with a >= 0: lambda in R
    const auto ivs =
        corollary_intervals(gauss_spec(SurfaceFamily::HyperbolicFirst, -1, 1.0, 1.0));
    REQUIRE(ivs.size() == 1);
    CHECK(std::isinf(ivs[0].lo));
    CHECK(std::isinf(ivs[0].hi));

    // second kind, 1 < c^2 < a: (-sqrt((a-c^2)/(c^2-1)), +sqrt(...))
    const auto ivs2 = corollary_intervals(
        gauss_spec(SurfaceFamily::HyperbolicSecond, 1, 4.0, std::sqrt(2.0)));
    REQUIRE(ivs2.size() == 1);
    CHECK(ivs2[0].lo == doctest::Approx(-std::sqrt(2.0)));
    CHECK(ivs2[0].hi == doctest::Approx(std::sqrt(2.0)));
}

TEST_CASE("second-kind CMC endpoints (1 +- sqrt(1+2Hc^2-c^4))/c^2") {
    const double H = 1.0, c = 1.0;
    const auto spec = cmc_spec(SurfaceFamily::HyperbolicSecond, 1, H, c, {}, 1.0);
    const auto d = oracle_diff(spec, {-50.0, 50.0}, 20000);
    REQUIRE(d.corollary.size() == 1);
    CHECK(d.corollary[0].lo == doctest::Approx(1.0 - std::sqrt(2.0)));
    CHECK(d.corollary[0].hi == doctest::Approx(1.0 + std::sqrt(2.0)));
    CHECK(d.max_endpoint_discrepancy <= 1e-8);
    // radicand 2(H+lambda) - (lambda^2+1)c^2 vanishes at both endpoints
    for (double r : {1.0 - std::sqrt(2.0), 1.0 + std::sqrt(2.0)}) {
        CHECK(std::fabs(2.0 * (H + r) - (r * r + 1.0) * c * c) <= 1e-10);
    }
}

TEST_CASE("empty-vs-empty agreement when guards fail") {
    // second-kind CMC needs H > (c^2 - 1/c^2)/2; H=0, c=2 fails it
    const auto spec = cmc_spec(SurfaceFamily::HyperbolicSecond, 1, 0.0, 2.0);
    CHECK(corollary_intervals(spec).empty());
    CHECK(admissible_intervals(spec, {-50.0, 50.0}, 20000).empty());
}

TEST_CASE("oracle equivalence on random CMC and constant-Gauss draws") {
    std::mt19937_64 rng(123);
    std::uniform_real_distribution<double> dH(-3.0, 3.0);
    std::uniform_real_distribution<double> dc(0.3, 2.5);
    std::uniform_real_distribution<double> da(-3.0, 3.0);

    auto well_separated = [](const std::vector<AdmissibleInterval>& ivs) {
        double prev_hi = -45.0;
        for (const auto& iv : ivs) {
            const double lo = std::max(iv.lo, -50.0), hi = std::min(iv.hi, 50.0);
            if (hi - lo < 0.05) return false;
            if (lo - prev_hi < 0.05 && lo > -50.0) return false;
            prev_hi = hi;
        }
        return true;
    };

    int checked = 0;
    for (int draw = 0; draw < 400 && checked < 100; ++draw) {
        SurfaceSpec spec;
        switch (draw % 4) {
            case 0:
                spec = cmc_spec(SurfaceFamily::Spherical, 1, dH(rng), dc(rng),
                                SphericalRegime::YLessOne);
                break;
            case 1:
                spec = cmc_spec(SurfaceFamily::Spherical, 1, dH(rng), dc(rng),
                                SphericalRegime::YGreaterOne);
                break;
            case 2:
                spec = cmc_spec(SurfaceFamily::HyperbolicFirst, 1, dH(rng), dc(rng));
                break;
            default:
                spec = gauss_spec(SurfaceFamily::Parabolic, 1, da(rng), dc(rng));
                break;
        }
        std::vector<AdmissibleInterval> cor;
        cor = corollary_intervals(spec);
        if (!well_separated(cor)) continue;
        const auto d = oracle_diff(spec, {-50.0, 50.0}, 20000);
        CHECK(d.max_endpoint_discrepancy <= 1e-8);
        CHECK_FALSE(d.count_mismatch);
        ++checked;
    }
    CHECK(checked == 100);
}

TEST_CASE("soundness and maximality of scanned intervals") {
    std::mt19937_64 rng(77);
    const SurfaceSpec specs[] = {
        cmc_spec(SurfaceFamily::Spherical, 1, 2.0, 1.0, SphericalRegime::YLessOne),
        cmc_spec(SurfaceFamily::Spherical, -1, 2.0, 1.0, SphericalRegime::YLessOne),
        gauss_spec(SurfaceFamily::HyperbolicFirst, 1, 2.0, 2.0),
        cmc_spec(SurfaceFamily::HyperbolicSecond, 1, 1.0, 1.0),
        gauss_spec(SurfaceFamily::Parabolic, -1, 2.0, 1.0),
    };
    for (const auto& spec : specs) {
        const auto cs = constraint_set(spec);
        const auto ivs = admissible_intervals(spec, {-50.0, 50.0}, 20000);
        REQUIRE(!ivs.empty());
        for (const auto& iv : ivs) {
            // strictly satisfied at the midpoint and 10 random interior points
            std::uniform_real_distribution<double> dx(iv.lo, iv.hi);
            for (int k = 0; k <= 10; ++k) {
                const double x = k == 0 ? 0.5 * (iv.lo + iv.hi) : dx(rng);
                CHECK(check_point(spec, x).ok);
            }
            // the binding constraint changes sign across each finite endpoint
            for (bool upper : {false, true}) {
                const double x = upper ? iv.hi : iv.lo;
                const std::string& id = upper ? iv.binding_hi : iv.binding_lo;
                if (id == "window") continue;
                const double tol = 1e-12 * std::max(1.0, std::fabs(x));
                const double inside = upper ? x - 10 * tol : x + 10 * tol;
                const double outside = upper ? x + 10 * tol : x - 10 * tol;
                CHECK(check_point(spec, inside).ok);
                CHECK_FALSE(check_point(spec, outside).ok);
            }
        }
    }
}

TEST_CASE("custom relations scan around lambda_ref's component") {
    SurfaceSpec spec;
    spec.family = SurfaceFamily::Parabolic;
    spec.eps = 1;
    spec.rel = CustomRelation{[](double l) { return l * l * l; }, "cubic"};
    spec.c = 1.0;
    spec.lambda_ref = 1.5;
    spec.radius_mode = RadiusMode::Quadrature;
    const auto ivs = admissible_intervals(spec, {-4.0, 4.0}, 2000);
    // radicand needs |lambda|>1 and the umbilic at lambda=1 blocks the path:
    // only the component of lambda_ref survives
    REQUIRE(ivs.size() == 1);
    CHECK(ivs[0].lo == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(ivs[0].hi == 4.0);
}

TEST_CASE("grid precondition") {
    const auto spec =
        cmc_spec(SurfaceFamily::Spherical, 1, 1.0, 1.0, SphericalRegime::YLessOne);
    CHECK_THROWS_AS(admissible_intervals(spec, {-50.0, 50.0}, 100), ConfigError);
}
