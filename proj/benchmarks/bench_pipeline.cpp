#include <benchmark/benchmark.h>

#include "desitter/curvature.hpp"
#include "desitter/mesh.hpp"

namespace {

using namespace desitter;

SurfaceSpec cmc_spec() {
    SurfaceSpec s;
    s.family = SurfaceFamily::Spherical;
    s.eps = 1;
    s.rel = LinearRelation{-1, 4};
    s.c = 1.0;
    s.lambda_ref = 0.0;
    s.regime = SphericalRegime::YLessOne;
    return s;
}

void BM_PhiAdaptive(benchmark::State& state) {
    const AngleIntegral ai = angle_integral(cmc_spec());
    QuadratureConfig cfg;
    cfg.scheme = QuadratureScheme::AdaptiveBisection;
    for (auto _ : state)
        benchmark::DoNotOptimize(integrate_phi(ai, cfg, 1.2));
}
BENCHMARK(BM_PhiAdaptive);

void BM_PhiDoubleExponential(benchmark::State& state) {
    const AngleIntegral ai = angle_integral(cmc_spec());
    QuadratureConfig cfg;
    cfg.scheme = QuadratureScheme::DoubleExponential;
    for (auto _ : state)
        benchmark::DoNotOptimize(integrate_phi(ai, cfg, 1.2));
}
BENCHMARK(BM_PhiDoubleExponential);

void BM_RadiusClosedForm(benchmark::State& state) {
    const RadiusFunction rf = radius_function(cmc_spec());
    double lam = 0.0;
    for (auto _ : state) {
        lam = lam < 1.0 ? lam + 1e-3 : 0.0;
        benchmark::DoNotOptimize(radius_closed_form(rf, lam));
    }
}
BENCHMARK(BM_RadiusClosedForm);

void BM_RadiusQuadrature(benchmark::State& state) {
    SurfaceSpec s = cmc_spec();
    s.radius_mode = RadiusMode::Quadrature;
    const RadiusFunction rf = radius_function(s);
    for (auto _ : state)
        benchmark::DoNotOptimize(radius_quadrature(rf, 1.2, s.quad));
}
BENCHMARK(BM_RadiusQuadrature);

void BM_IntervalScan(benchmark::State& state) {
    const SurfaceSpec s = cmc_spec();
    for (auto _ : state)
        benchmark::DoNotOptimize(
            admissible_intervals(s, {-50.0, 50.0}, int(state.range(0))));
}
BENCHMARK(BM_IntervalScan)->Arg(1000)->Arg(10000)->Arg(100000);

void BM_VerifyPoint(benchmark::State& state) {
    const SurfaceSpec s = cmc_spec();
    const Calibration cal = calibrate(s, 0.7, 1e-5);
    for (auto _ : state)
        benchmark::DoNotOptimize(verify_point(s, cal, 0.9, 0.7, 1e-5));
}
BENCHMARK(BM_VerifyPoint);

void BM_Generate50x50(benchmark::State& state) {
    RunConfig cfg;
    cfg.spec = cmc_spec();
    cfg.window = {-10.0, 10.0};
    cfg.grid = 5000;
    cfg.v_max = 6.2;
    for (auto _ : state)
        benchmark::DoNotOptimize(run_generate(cfg));
}
BENCHMARK(BM_Generate50x50);

} // namespace

BENCHMARK_MAIN();
