// sonn: batch trainer and exporter for self-organizing network models
// (fixed-grid SOM, growing cell structures, growing neural gas, and the
// self-organizing tree algorithm).

#include "sonn/csv.hpp"
#include "sonn/runner.hpp"
#include "sonn/synth.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

sonn::Vector parse_reals(const std::string& text) {
    sonn::Vector out;
    std::istringstream in(text);
    std::string cell;
    while (std::getline(in, cell, ',')) {
        char* end = nullptr;
        const double v = std::strtod(cell.c_str(), &end);
        if (cell.empty() || end != cell.c_str() + cell.size()) {
            throw sonn::Error("expected comma-separated reals, got '" + text + "'");
        }
        out.push_back(v);
    }
    if (out.empty()) throw sonn::Error("expected comma-separated reals, got '" + text + "'");
    return out;
}

std::vector<sonn::Vector> parse_points(const std::string& text) {
    std::vector<sonn::Vector> out;
    std::istringstream in(text);
    std::string group;
    while (std::getline(in, group, ';')) {
        out.push_back(parse_reals(group));
    }
    return out;
}

struct SynthFlags {
    std::string kind = "uniform_rect";
    std::size_t n = 1000;
    std::uint64_t seed = 1;
    std::string out_path;  // empty = stdout
    std::string lo = "0,0";
    std::string hi = "1,1";
    std::string centers = "0,0";
    std::string sigmas = "1";
    std::string weights = "1";
    std::string center = "0,0";
    double inner = 0.5;
    double outer = 1.0;
    double side = 1.0;
    double gap = 3.0;
};

sonn::SynthSpec build_synth_spec(const SynthFlags& f) {
    switch (sonn::parse_synth_kind(f.kind)) {
        case sonn::SynthKind::UniformRect:
            return sonn::SynthSpec::uniform_rect(parse_reals(f.lo), parse_reals(f.hi), f.n, f.seed);
        case sonn::SynthKind::GaussianMixture: {
            std::vector<double> sigmas = parse_reals(f.sigmas);
            std::vector<double> weights = parse_reals(f.weights);
            return sonn::SynthSpec::gaussian_mixture(parse_points(f.centers), std::move(sigmas),
                                                     std::move(weights), f.n, f.seed);
        }
        case sonn::SynthKind::Ring:
            return sonn::SynthSpec::ring(parse_reals(f.center), f.inner, f.outer, f.n, f.seed);
        case sonn::SynthKind::TwoSquares:
            return sonn::SynthSpec::two_squares(f.side, f.gap, f.n, f.seed);
    }
    throw sonn::Error("unknown synth kind");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"self-organizing network clustering toolkit"};
    app.require_subcommand(1);

    // train
    auto* train = app.add_subcommand("train", "train a model and export its artifacts");
    std::string model, data, config, out;
    std::uint64_t seed = 0;
    bool has_header = false;
    train->add_option("--model", model, "som | gcs | gng | sota");
    train->add_option("--data", data, "input CSV");
    train->add_option("--config", config, "key = value config file");
    train->add_option("--seed", seed, "PRNG seed");
    train->add_option("--out", out, "output directory");
    train->add_flag("--has-header", has_header, "input CSV starts with a header line");

    // assign
    auto* assign = app.add_subcommand("assign", "assign inputs to an exported codebook");
    std::string a_codebook, a_data, a_out;
    bool a_header = false;
    assign->add_option("--codebook", a_codebook, "codebook CSV")->required();
    assign->add_option("--data", a_data, "input CSV")->required();
    assign->add_option("--out", a_out, "output directory");
    assign->add_flag("--has-header", a_header, "input CSV starts with a header line");

    // metrics
    auto* metrics = app.add_subcommand("metrics", "codebook quality metrics for a dataset");
    std::string m_codebook, m_data, m_out;
    bool m_header = false;
    metrics->add_option("--codebook", m_codebook, "codebook CSV")->required();
    metrics->add_option("--data", m_data, "input CSV")->required();
    metrics->add_option("--out", m_out, "output directory");
    metrics->add_flag("--has-header", m_header, "input CSV starts with a header line");

    // synth
    auto* synth = app.add_subcommand("synth", "emit a deterministic synthetic dataset as CSV");
    SynthFlags sf;
    synth->add_option("--kind", sf.kind, "uniform_rect | gaussian_mixture | ring | two_squares");
    synth->add_option("--n", sf.n, "sample count");
    synth->add_option("--seed", sf.seed, "PRNG seed");
    synth->add_option("--out", sf.out_path, "output CSV file (default stdout)");
    synth->add_option("--lo", sf.lo, "uniform_rect lower bounds, comma separated");
    synth->add_option("--hi", sf.hi, "uniform_rect upper bounds, comma separated");
    synth->add_option("--centers", sf.centers, "mixture centers, e.g. '0,0;4,4'");
    synth->add_option("--sigmas", sf.sigmas, "mixture sigmas, comma separated");
    synth->add_option("--weights", sf.weights, "mixture weights, comma separated");
    synth->add_option("--center", sf.center, "ring center");
    synth->add_option("--inner", sf.inner, "ring inner radius");
    synth->add_option("--outer", sf.outer, "ring outer radius");
    synth->add_option("--side", sf.side, "square side length");
    synth->add_option("--gap", sf.gap, "gap between the two squares");

    CLI11_PARSE(app, argc, argv);

    try {
        if (train->parsed()) {
            sonn::RunConfig cfg;
            if (!config.empty()) sonn::apply_config_file(cfg, config);
            // flags beat file values
            if (train->count("--model")) cfg.model = model;
            if (train->count("--data")) cfg.data_path = data;
            if (train->count("--seed")) cfg.seed = seed;
            if (train->count("--out")) cfg.out_dir = out;
            if (train->count("--has-header")) cfg.has_header = has_header;
            const sonn::RunArtifacts art = sonn::run_train(cfg);
            std::cout << "codebook: " << art.codebook_path << "\n"
                      << "edges: " << art.edges_path << "\n"
                      << "assignments: " << art.assignments_path << "\n"
                      << "metrics: " << art.metrics_path << "\n";
        } else if (assign->parsed()) {
            const sonn::RunArtifacts art = sonn::run_assign(a_codebook, a_data, a_header, a_out);
            std::cout << "assignments: " << art.assignments_path << "\n";
        } else if (metrics->parsed()) {
            const sonn::RunArtifacts art = sonn::run_metrics(m_codebook, m_data, m_header, m_out);
            std::ifstream in(art.metrics_path);
            std::cout << in.rdbuf();
        } else if (synth->parsed()) {
            const sonn::Dataset d = sonn::generate(build_synth_spec(sf));
            if (sf.out_path.empty()) {
                sonn::write_dataset_csv(std::cout, d);
            } else {
                std::ofstream file(sf.out_path, std::ios::binary);
                if (!file) throw sonn::Error("cannot open '" + sf.out_path + "' for writing");
                sonn::write_dataset_csv(file, d);
            }
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
