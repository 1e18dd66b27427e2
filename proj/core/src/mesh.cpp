#include "desitter/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

namespace desitter {

namespace {

const char* kCsvHeader = "lambda,v,x1,x2,x3,x4,quadric_residual\n";

std::string fmt17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::array<double, 3> project(Projection proj, AmbientForm form, const Vector4& p) {
    switch (proj) {
        case Projection::Drop4: return {p.x1, p.x2, p.x3};
        case Projection::Drop1: return {p.x2, p.x3, p.x4};
        case Projection::Orthonormal3: {
            if (form == AmbientForm::Parabolic) {
                const double s = 1.0 / std::sqrt(2.0);
                return {p.x1, p.x2, s * (p.x3 + p.x4)};
            }
            return {p.x1, p.x2, p.x3};
        }
    }
    return {};
}

} // namespace

void validate(const RunConfig& cfg) {
    validate(cfg.spec);
    if (cfg.lambda_samples < 2 || cfg.v_samples < 2)
        throw ConfigError("run config: lambda_samples and v_samples must be >= 2");
    if (!(cfg.margin > 0.0 && cfg.margin < 0.5))
        throw ConfigError("run config: margin must lie in (0, 0.5)");
    if (!(cfg.v_min < cfg.v_max))
        throw ConfigError("run config: v_range must be ordered");
    if (cfg.spec.family == SurfaceFamily::Spherical &&
        (cfg.v_min < 0.0 || cfg.v_max > 6.283185307179587))
        throw ConfigError("run config: spherical v_range must lie in [0, 2pi]");
    if (cfg.verify_samples < 1)
        throw ConfigError("run config: verify_samples must be >= 1");
    if (!(cfg.fd_step > 0.0))
        throw ConfigError("run config: fd_step must be positive");
}

std::pair<double, double> generation_interval(const RunConfig& cfg) {
    const auto intervals = admissible_intervals(cfg.spec, cfg.window, cfg.grid);
    for (const auto& iv : intervals) {
        if (cfg.spec.lambda_ref > iv.lo && cfg.spec.lambda_ref < iv.hi) {
            const double len = iv.hi - iv.lo;
            return {iv.lo + cfg.margin * len, iv.hi - cfg.margin * len};
        }
    }
    throw NoAdmissibleInterval("no admissible interval contains lambda_ref");
}

MeshOutput run_generate(const RunConfig& cfg) {
    validate(cfg);
    const auto [lo, hi] = generation_interval(cfg);
    const AmbientForm form = spec_form(cfg.spec.family);

    MeshOutput mesh;
    mesh.lambda_samples = cfg.lambda_samples;
    mesh.v_samples = cfg.v_samples;
    mesh.vertices.reserve(static_cast<std::size_t>(cfg.lambda_samples) * cfg.v_samples);

    for (int i = 0; i < cfg.lambda_samples; ++i) {
        const double lam = lo + (hi - lo) * i / (cfg.lambda_samples - 1);
        const ProfilePoint pp = profile_point(cfg.spec, lam);
        for (int j = 0; j < cfg.v_samples; ++j) {
            const double v = cfg.v_min + (cfg.v_max - cfg.v_min) * j / (cfg.v_samples - 1);
            MeshVertex vx;
            vx.lambda = lam;
            vx.v = v;
            vx.p = embed_profile(cfg.spec.family, pp, v);
            vx.residual = quadric_residual(form, vx.p);
            vx.projected = project(cfg.projection, form, vx.p);
            mesh.vertices.push_back(vx);
        }
    }
    for (int i = 0; i + 1 < cfg.lambda_samples; ++i)
        for (int j = 0; j + 1 < cfg.v_samples; ++j) {
            const int a = i * cfg.v_samples + j;
            mesh.faces.push_back({a, a + 1, a + cfg.v_samples + 1, a + cfg.v_samples});
        }
    return mesh;
}

void write_csv(const MeshOutput& mesh, std::ostream& os) {
    os << kCsvHeader;
    for (const auto& v : mesh.vertices) {
        os << fmt17(v.lambda) << ',' << fmt17(v.v) << ',' << fmt17(v.p.x1) << ','
           << fmt17(v.p.x2) << ',' << fmt17(v.p.x3) << ',' << fmt17(v.p.x4) << ','
           << fmt17(v.residual) << '\n';
    }
}

void write_obj(const MeshOutput& mesh, std::ostream& os) {
    os << "# rotational surface mesh (" << mesh.lambda_samples << " x "
       << mesh.v_samples << ")\n";
    for (const auto& v : mesh.vertices)
        os << "v " << fmt17(v.projected[0]) << ' ' << fmt17(v.projected[1]) << ' '
           << fmt17(v.projected[2]) << '\n';
    for (const auto& f : mesh.faces)
        os << "f " << f[0] + 1 << ' ' << f[1] + 1 << ' ' << f[2] + 1 << ' '
           << f[3] + 1 << '\n';
}

void write_mesh(const RunConfig& cfg, const MeshOutput& mesh) {
    std::ofstream out(cfg.out_path, std::ios::binary);
    if (!out) throw IOError("cannot open output file: " + cfg.out_path);
    switch (cfg.format) {
        case OutputFormat::CSV: write_csv(mesh, out); break;
        case OutputFormat::OBJ: write_obj(mesh, out); break;
        case OutputFormat::JSON: write_json(mesh, out); break;
    }
    if (!out.good()) throw IOError("write failed: " + cfg.out_path);
}

VerifySummary run_verify(const RunConfig& cfg) {
    validate(cfg);
    auto [lo, hi] = generation_interval(cfg);
    if (cfg.verify_range) {
        lo = std::max(lo, cfg.verify_range->first);
        hi = std::min(hi, cfg.verify_range->second);
        if (!(lo < hi))
            throw ConfigError("run_verify: verify_range does not meet the "
                              "admissible interval");
    }
    const AmbientForm form = spec_form(cfg.spec.family);
    const Calibration cal = calibrate(cfg.spec, cfg.verify_v, cfg.fd_step);

    VerifySummary s;
    std::vector<double> hvals, kvals;
    for (int i = 0; i < cfg.verify_samples; ++i) {
        const double lam = cfg.verify_samples == 1
                               ? 0.5 * (lo + hi)
                               : lo + (hi - lo) * i / (cfg.verify_samples - 1);
        const CurvatureReport rep =
            verify_point(cfg.spec, cal, lam, cfg.verify_v, cfg.fd_step);
        s.max_param = std::max(s.max_param, std::fabs(rep.parameter_residual));
        s.max_weingarten =
            std::max(s.max_weingarten, std::fabs(rep.weingarten_residual));
        hvals.push_back(rep.H_derived);
        kvals.push_back(rep.K_ext_derived);
        const Vector4 p = embed(cfg.spec, lam, cfg.verify_v);
        const double quad_res = std::fabs(quadric_residual(form, p));
        s.max_quadric = std::max(s.max_quadric, quad_res);
        s.rows.push_back({lam, cfg.verify_v, quad_res, rep});
    }

    bool pass = s.max_quadric <= cfg.max_quadric && s.max_param <= cfg.tol.max_param &&
                s.max_weingarten <= cfg.tol.max_weingarten;

    if (const auto* lin = std::get_if<LinearRelation>(&cfg.spec.rel)) {
        const bool second = cfg.spec.family == SurfaceFamily::HyperbolicSecond;
        const bool cmc = second ? lin->a == 1.0 : lin->a == -cfg.spec.eps;
        if (cmc) {
            const double H = second ? lin->b / 2.0 : cfg.spec.eps * lin->b / 2.0;
            const auto [mn, mx] = std::minmax_element(hvals.begin(), hvals.end());
            s.h_spread = *mx - *mn;
            double worst = 0.0;
            for (double hv : hvals)
                worst = std::max(worst, std::fabs(std::fabs(hv) - std::fabs(H)));
            s.h_abs_err = worst;
            pass = pass && *s.h_spread <= cfg.max_spread && worst <= cfg.max_spread;
        }
    } else if (const auto* pw = std::get_if<PowerRelation>(&cfg.spec.rel)) {
        if (pw->m == -1.0) {
            const auto [mn, mx] = std::minmax_element(kvals.begin(), kvals.end());
            s.k_spread = *mx - *mn;
            double worst = 0.0;
            for (double kv : kvals) worst = std::max(worst, std::fabs(kv - pw->a));
            s.k_abs_err = worst;
            pass = pass && *s.k_spread <= cfg.max_spread && worst <= cfg.max_spread;
        }
    }
    s.pass = pass;
    return s;
}

void write_verify_csv(const VerifySummary& s, std::ostream& os) {
    os << "lambda,v,lambda_measured,kappa_measured,parameter_residual,"
          "weingarten_residual,H_derived,K_ext_derived,quadric_residual\n";
    for (const auto& r : s.rows) {
        os << fmt17(r.lambda) << ',' << fmt17(r.v) << ','
           << fmt17(r.report.lambda_measured) << ',' << fmt17(r.report.kappa_measured)
           << ',' << fmt17(r.report.parameter_residual) << ','
           << fmt17(r.report.weingarten_residual) << ',' << fmt17(r.report.H_derived)
           << ',' << fmt17(r.report.K_ext_derived) << ',' << fmt17(r.quadric_residual)
           << '\n';
    }
}

IntervalsReport run_intervals(const RunConfig& cfg) {
    validate(cfg);
    IntervalsReport rep;
    rep.scan = admissible_intervals(cfg.spec, cfg.window, cfg.grid);
    try {
        rep.diff = oracle_diff(cfg.spec, cfg.window, cfg.grid);
    } catch (const UnsupportedSpec&) {
        // no closed-form table for this spec; the scan alone is the answer
    }
    return rep;
}

} // namespace desitter
