#include <fstream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "desitter/mesh.hpp"

namespace desitter {

using nlohmann::json;

namespace {

SurfaceFamily parse_family(const std::string& s) {
    if (s == "spherical") return SurfaceFamily::Spherical;
    if (s == "hyperbolic_first") return SurfaceFamily::HyperbolicFirst;
    if (s == "hyperbolic_second") return SurfaceFamily::HyperbolicSecond;
    if (s == "parabolic") return SurfaceFamily::Parabolic;
    throw ConfigError("unknown family: " + s);
}

WeingartenRelation parse_relation(const json& j) {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "linear")
        return LinearRelation{j.at("a").get<double>(), j.at("b").get<double>()};
    if (kind == "power")
        return PowerRelation{j.at("a").get<double>(), j.at("m").get<double>()};
    throw ConfigError("unknown relation kind: " + kind);
}

SurfaceSpec parse_spec(const json& j) {
    SurfaceSpec spec;
    spec.family = parse_family(j.at("family").get<std::string>());
    spec.eps = j.value("epsilon", 1);
    spec.rel = parse_relation(j.at("relation"));
    spec.c = j.at("c").get<double>();
    spec.phi0 = j.value("phi0", 0.0);
    spec.branch = j.value("branch", 1);
    spec.lambda_ref = j.at("lambda_ref").get<double>();
    if (j.contains("spherical_regime")) {
        const std::string r = j.at("spherical_regime").get<std::string>();
        if (r == "y_less_one")
            spec.regime = SphericalRegime::YLessOne;
        else if (r == "y_greater_one")
            spec.regime = SphericalRegime::YGreaterOne;
        else
            throw ConfigError("unknown spherical_regime: " + r);
    }
    const std::string mode = j.value("radius_mode", std::string("closed_form"));
    if (mode == "closed_form")
        spec.radius_mode = RadiusMode::ClosedForm;
    else if (mode == "quadrature")
        spec.radius_mode = RadiusMode::Quadrature;
    else
        throw ConfigError("unknown radius_mode: " + mode);
    return spec;
}

void parse_quadrature(const json& j, QuadratureConfig& q) {
    q.abs_tol = j.value("abs_tol", q.abs_tol);
    q.rel_tol = j.value("rel_tol", q.rel_tol);
    q.max_subdivisions = j.value("max_subdivisions", q.max_subdivisions);
    q.endpoint_inset = j.value("endpoint_inset", q.endpoint_inset);
    if (j.contains("scheme")) {
        const std::string s = j.at("scheme").get<std::string>();
        if (s == "adaptive")
            q.scheme = QuadratureScheme::AdaptiveBisection;
        else if (s == "double_exponential")
            q.scheme = QuadratureScheme::DoubleExponential;
        else
            throw ConfigError("unknown quadrature scheme: " + s);
    }
}

json interval_to_json(const AdmissibleInterval& iv) {
    return json{{"lo", iv.lo},
                {"hi", iv.hi},
                {"binding_lo", iv.binding_lo},
                {"binding_hi", iv.binding_hi}};
}

} // namespace

RunConfig parse_run_config(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ConfigError(std::string("config parse error: ") + e.what());
    }
    try {
        RunConfig cfg;
        cfg.spec = parse_spec(j.at("spec"));
        cfg.lambda_samples = j.value("lambda_samples", cfg.lambda_samples);
        cfg.v_samples = j.value("v_samples", cfg.v_samples);
        if (j.contains("v_range")) {
            cfg.v_min = j.at("v_range").at(0).get<double>();
            cfg.v_max = j.at("v_range").at(1).get<double>();
        } else if (cfg.spec.family != SurfaceFamily::Spherical) {
            cfg.v_min = -1.0;
            cfg.v_max = 1.0;
        }
        cfg.margin = j.value("margin", cfg.margin);
        if (j.contains("output")) {
            cfg.out_path = j.at("output").value("path", std::string());
            const std::string f = j.at("output").value("format", std::string("csv"));
            if (f == "csv")
                cfg.format = OutputFormat::CSV;
            else if (f == "obj")
                cfg.format = OutputFormat::OBJ;
            else if (f == "json")
                cfg.format = OutputFormat::JSON;
            else
                throw ConfigError("unknown output format: " + f);
        }
        if (j.contains("projection")) {
            const std::string p = j.at("projection").get<std::string>();
            if (p == "drop4")
                cfg.projection = Projection::Drop4;
            else if (p == "drop1")
                cfg.projection = Projection::Drop1;
            else if (p == "orthonormal3")
                cfg.projection = Projection::Orthonormal3;
            else
                throw ConfigError("unknown projection: " + p);
        }
        if (j.contains("window")) {
            cfg.window = {j.at("window").at(0).get<double>(),
                          j.at("window").at(1).get<double>()};
        }
        cfg.grid = j.value("grid", cfg.grid);
        if (j.contains("quadrature")) parse_quadrature(j.at("quadrature"), cfg.spec.quad);
        if (j.contains("verify")) {
            const json& v = j.at("verify");
            cfg.verify_samples = v.value("samples", cfg.verify_samples);
            cfg.fd_step = v.value("fd_step", cfg.fd_step);
            cfg.verify_v = v.value("v", cfg.verify_v);
            cfg.tol.max_param = v.value("max_param", cfg.tol.max_param);
            cfg.tol.max_weingarten = v.value("max_weingarten", cfg.tol.max_weingarten);
            cfg.max_quadric = v.value("max_quadric", cfg.max_quadric);
            cfg.max_spread = v.value("max_spread", cfg.max_spread);
            if (v.contains("range"))
                cfg.verify_range = {{v.at("range").at(0).get<double>(),
                                     v.at("range").at(1).get<double>()}};
        }
        return cfg;
    } catch (const json::exception& e) {
        throw ConfigError(std::string("config schema error: ") + e.what());
    }
}

RunConfig load_run_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_run_config(ss.str());
}

void write_json(const MeshOutput& mesh, std::ostream& os) {
    json j;
    j["lambda_samples"] = mesh.lambda_samples;
    j["v_samples"] = mesh.v_samples;
    json verts = json::array();
    for (const auto& v : mesh.vertices) {
        verts.push_back({{"lambda", v.lambda},
                         {"v", v.v},
                         {"x", {v.p.x1, v.p.x2, v.p.x3, v.p.x4}},
                         {"projected", v.projected},
                         {"quadric_residual", v.residual}});
    }
    j["vertices"] = std::move(verts);
    json faces = json::array();
    for (const auto& f : mesh.faces) faces.push_back(f);
    j["faces"] = std::move(faces);
    os << j.dump(2) << '\n';
}

std::string verify_summary_json(const VerifySummary& s) {
    json j;
    j["max_quadric"] = s.max_quadric;
    j["max_param"] = s.max_param;
    j["max_weingarten"] = s.max_weingarten;
    if (s.h_spread) {
        j["max_H_spread"] = *s.h_spread;
        j["max_H_abs_err"] = *s.h_abs_err;
    }
    if (s.k_spread) {
        j["max_K_spread"] = *s.k_spread;
        j["max_K_abs_err"] = *s.k_abs_err;
    }
    j["pass"] = s.pass;
    return j.dump(2);
}

std::string intervals_report_json(const IntervalsReport& r) {
    json j;
    json scan = json::array();
    for (const auto& iv : r.scan) scan.push_back(interval_to_json(iv));
    j["intervals"] = std::move(scan);
    if (r.diff) {
        json cor = json::array();
        for (const auto& iv : r.diff->corollary) cor.push_back(interval_to_json(iv));
        j["corollary_intervals"] = std::move(cor);
        j["max_endpoint_discrepancy"] = r.diff->max_endpoint_discrepancy;
        j["symmetric_difference_measure"] = r.diff->symmetric_difference_measure;
        j["count_mismatch"] = r.diff->count_mismatch;
        j["notes"] = r.diff->notes;
    }
    return j.dump(2);
}

} // namespace desitter
