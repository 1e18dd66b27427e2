// desitter-rotor: sample, export and verify rotational Weingarten surfaces
// in the 3-dimensional de Sitter space.
//
//   desitter-rotor generate  --config cfg.json [--out mesh.obj]
//   desitter-rotor verify    --config cfg.json
//   desitter-rotor intervals --config cfg.json
//
// Exit codes: 0 pass, 1 verification failure, 2 config error, 3 domain error.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "desitter/mesh.hpp"

namespace {

int run(const std::string& command, const std::string& config_path,
        const std::string& out_override) {
    desitter::RunConfig cfg = desitter::load_run_config(config_path);
    if (!out_override.empty()) {
        cfg.out_path = out_override;
        // infer the format from a recognizable extension
        const auto dot = out_override.rfind('.');
        if (dot != std::string::npos) {
            const std::string ext = out_override.substr(dot + 1);
            if (ext == "obj") cfg.format = desitter::OutputFormat::OBJ;
            if (ext == "csv") cfg.format = desitter::OutputFormat::CSV;
            if (ext == "json") cfg.format = desitter::OutputFormat::JSON;
        }
    }

    if (command == "generate") {
        const desitter::MeshOutput mesh = desitter::run_generate(cfg);
        if (cfg.out_path.empty())
            throw desitter::ConfigError("generate: no output path given "
                                        "(config output.path or --out)");
        desitter::write_mesh(cfg, mesh);
        std::cout << "wrote " << mesh.vertices.size() << " vertices, "
                  << mesh.faces.size() << " faces to " << cfg.out_path << "\n";
        return 0;
    }
    if (command == "verify") {
        const desitter::VerifySummary s = desitter::run_verify(cfg);
        if (!cfg.out_path.empty()) {
            std::ofstream out(cfg.out_path, std::ios::binary);
            if (!out) throw desitter::IOError("cannot open " + cfg.out_path);
            desitter::write_verify_csv(s, out);
        }
        std::cout << desitter::verify_summary_json(s) << "\n";
        return s.pass ? 0 : 1;
    }
    // intervals
    const desitter::IntervalsReport rep = desitter::run_intervals(cfg);
    std::cout << desitter::intervals_report_json(rep) << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"rotational Weingarten surfaces in de Sitter 3-space"};
    app.require_subcommand(1);

    std::string config_path, out_override;
    for (const char* name : {"generate", "verify", "intervals"}) {
        CLI::App* sub = app.add_subcommand(name);
        sub->add_option("--config", config_path, "JSON run configuration")
            ->required();
        sub->add_option("--out", out_override, "output path override");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) ? 2 : 0;
    }

    try {
        return run(app.get_subcommands().front()->get_name(), config_path,
                   out_override);
    } catch (const desitter::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const desitter::IOError& e) {
        std::cerr << "io error: " << e.what() << "\n";
        return 2;
    } catch (const desitter::Error& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return 3;
    }
}
