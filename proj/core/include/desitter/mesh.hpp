#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "desitter/curvature.hpp"

namespace desitter {

enum class OutputFormat { OBJ, CSV, JSON };

/// 3D projection used for OBJ export. Drop4/Drop1 discard one coordinate;
/// Orthonormal3 first rotates the degenerate (x3,x4) block of the
/// parabolic form to an orthonormal basis, then drops the timelike axis.
/// Dropping x4 directly under the parabolic form would mix null
/// directions and produce misleading pictures.
enum class Projection { Drop4, Drop1, Orthonormal3 };

struct RunConfig {
    SurfaceSpec spec;
    int lambda_samples = 50;
    int v_samples = 50;
    double v_min = 0.0;
    double v_max = 6.283185307179586;
    double margin = 0.05; // fraction trimmed at each interval end
    std::string out_path;
    OutputFormat format = OutputFormat::CSV;
    Projection projection = Projection::Drop4;
    std::pair<double, double> window = {-50.0, 50.0};
    int grid = 100000;

    // verification sweep settings
    int verify_samples = 20;
    double fd_step = 1e-5;
    double verify_v = 0.7;
    std::optional<std::pair<double, double>> verify_range;
    VerifyTolerances tol;
    double max_quadric = 1e-9;
    double max_spread = 2e-4;
};

void validate(const RunConfig& cfg);

struct MeshVertex {
    double lambda = 0, v = 0;
    Vector4 p;
    double residual = 0; // quadric membership residual of the raw 4D point
    std::array<double, 3> projected{};
};

struct MeshOutput {
    int lambda_samples = 0, v_samples = 0;
    std::vector<MeshVertex> vertices;         // row-major, lambda outer
    std::vector<std::array<int, 4>> faces;    // 0-based quad indices
};

/// The maximal admissible interval containing lambda_ref, margin-trimmed.
/// Throws NoAdmissibleInterval when none contains it.
std::pair<double, double> generation_interval(const RunConfig& cfg);

MeshOutput run_generate(const RunConfig& cfg);

void write_csv(const MeshOutput& mesh, std::ostream& os);
void write_obj(const MeshOutput& mesh, std::ostream& os);
void write_json(const MeshOutput& mesh, std::ostream& os);

/// Generate per cfg.format and write to cfg.out_path.
void write_mesh(const RunConfig& cfg, const MeshOutput& mesh);

struct VerifyRow {
    double lambda = 0, v = 0;
    double quadric_residual = 0;
    CurvatureReport report;
};

struct VerifySummary {
    double max_quadric = 0;
    double max_param = 0;
    double max_weingarten = 0;
    std::optional<double> h_spread;   // CMC specs
    std::optional<double> h_abs_err;  // | |H_derived| - |H| |
    std::optional<double> k_spread;   // constant-Gauss specs
    std::optional<double> k_abs_err;  // |K_ext - a|
    std::vector<VerifyRow> rows;
    bool pass = false;
};

VerifySummary run_verify(const RunConfig& cfg);

std::string verify_summary_json(const VerifySummary& s);

/// Per-point report rows as CSV (header + one row per sample).
void write_verify_csv(const VerifySummary& s, std::ostream& os);

struct IntervalsReport {
    std::vector<AdmissibleInterval> scan;
    std::optional<OracleDiff> diff; // present when a corollary table applies
};

IntervalsReport run_intervals(const RunConfig& cfg);

std::string intervals_report_json(const IntervalsReport& r);

/// JSON config loading (schema documented in the README).
RunConfig load_run_config(const std::string& path);
RunConfig parse_run_config(const std::string& text);

} // namespace desitter
