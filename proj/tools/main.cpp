// symtopo command line: run containment experiments from a JSON config.
//
// Exit codes: 0 all experiments verified/contained, 1 at least one
// counterexample, 2 at least one inconclusive result (caps) and no
// counterexample, 3 configuration error.

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "symtopo/config.hpp"
#include "symtopo/report.hpp"

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) symtopo::fail(symtopo::errc::io_error, "cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::filesystem::path& path, const std::string& body) {
    std::ofstream out(path, std::ios::binary);
    if (!out) symtopo::fail(symtopo::errc::io_error, "cannot write '" + path.string() + "'");
    out << body;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"symtopo: exact symbolic-power containment experiments"};

    std::string config_path;
    std::string format = "md";
    std::string out_dir;
    int max_degree = -1;
    int jobs = -1;
    long long seed = -1;

    app.add_option("--config", config_path, "JSON experiment configuration")->required();
    app.add_option("--format", format, "report format")
        ->check(CLI::IsMember({"csv", "md", "json"}));
    app.add_option("--out", out_dir, "directory for report + timing sidecar");
    app.add_option("--max-degree", max_degree, "override limits.max_degree");
    app.add_option("--jobs", jobs, "override limits.jobs");
    app.add_option("--seed", seed, "override the seed of corpus experiments");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 3;
    }

    try {
        symtopo::ExperimentConfig cfg = symtopo::parse_config(read_file(config_path));
        if (max_degree >= 0) {
            cfg.limits.max_degree = max_degree;
            cfg.canonical["limits"]["max_degree"] = max_degree;
        }
        if (jobs >= 1) cfg.limits.jobs = jobs;  // parallelism never changes results
        if (seed >= 0) {
            for (size_t i = 0; i < cfg.experiments.size(); ++i)
                if (cfg.experiments[i].kind == "corpus_hh") {
                    cfg.experiments[i].seed = static_cast<uint64_t>(seed);
                    cfg.canonical["experiments"][i]["seed"] = seed;
                }
        }

        symtopo::ReportBundle bundle = symtopo::run(cfg);
        std::string body = symtopo::emit(bundle, format);
        std::cout << body;
        if (!out_dir.empty()) {
            std::filesystem::path dir(out_dir);
            std::filesystem::create_directories(dir);
            write_file(dir / ("report." + format), body);
            write_file(dir / "timing.json", symtopo::emit_timing_json(bundle));
        }
        return symtopo::exit_code(bundle);
    } catch (const symtopo::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 3;
    } catch (const symtopo::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
