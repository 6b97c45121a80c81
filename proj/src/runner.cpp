#include "sonn/runner.hpp"

#include "sonn/csv.hpp"
#include "sonn/gcs.hpp"
#include "sonn/gng.hpp"
#include "sonn/metrics.hpp"
#include "sonn/som.hpp"
#include "sonn/sota.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

namespace sonn {

namespace {

namespace fs = std::filesystem;

// Collects written paths so a failed run leaves no partial artifacts.
class ArtifactSink {
public:
    explicit ArtifactSink(const std::string& dir) : dir_(dir) {
        std::error_code ec;
        fs::create_directories(dir_, ec);
        if (ec) throw Error("cannot create output directory '" + dir + "': " + ec.message());
    }

    std::string write(const std::string& name, const std::string& content) {
        const fs::path path = fs::path(dir_) / name;
        std::ofstream out(path, std::ios::binary);
        if (!out) throw Error("cannot open '" + path.string() + "' for writing");
        written_.push_back(path);
        out << content;
        out.close();
        if (!out) throw Error("failed writing '" + path.string() + "'");
        return path.string();
    }

    void remove_written() {
        for (const fs::path& p : written_) {
            std::error_code ec;
            fs::remove(p, ec);
        }
        written_.clear();
    }

private:
    fs::path dir_;
    std::vector<fs::path> written_;
};

DecaySchedule make_schedule(const std::string& kind, double initial, double final_value,
                            std::uint64_t steps) {
    if (kind == "linear") return DecaySchedule::linear(initial, final_value, steps);
    if (kind == "exponential") return DecaySchedule::exponential(initial, final_value, steps);
    throw Error("config: unknown schedule kind '" + kind + "' (expected linear or exponential)");
}

struct TrainedModel {
    Codebook codebook;
    std::vector<EdgeRecord> edges;
    std::vector<std::pair<std::size_t, long long>> assignment_rows;
    std::vector<std::pair<std::string, std::string>> metrics;
};

std::vector<std::pair<std::string, std::string>> report_to_kv(const MetricReport& r) {
    std::vector<std::pair<std::string, std::string>> kv;
    kv.emplace_back("quantization_error", format_double(r.quantization_error));
    if (r.topographic_error) {
        kv.emplace_back("topographic_error", format_double(*r.topographic_error));
    }
    kv.emplace_back("dead_units", std::to_string(r.dead_units));
    kv.emplace_back("n_units", std::to_string(r.n_units));
    kv.emplace_back("n_inputs", std::to_string(r.n_inputs));
    return kv;
}

std::vector<std::pair<std::size_t, long long>> index_to_id_rows(
    const std::vector<std::size_t>& idx, const std::vector<int>& ids) {
    std::vector<std::pair<std::size_t, long long>> rows;
    rows.reserve(idx.size());
    for (std::size_t i = 0; i < idx.size(); ++i) {
        rows.emplace_back(i, ids[idx[i]]);
    }
    return rows;
}

TrainedModel train_som(const RunConfig& cfg, const Dataset& d) {
    const auto& s = cfg.som;
    // steps = 0 exports the initialization; schedules still need a horizon
    const std::uint64_t horizon = std::max<std::uint64_t>(s.steps, 1);
    const SomParams params(make_schedule(s.alpha_kind, s.alpha_initial, s.alpha_final, horizon),
                           make_schedule(s.radius_kind, s.radius_initial, s.radius_final, horizon),
                           s.steps);
    RandomStream rs(cfg.seed);
    SomGrid grid = som_init(s.width, s.height, parse_topology(s.topology), d, rs);
    grid = som_train(d, params, std::move(grid), rs);

    TrainedModel m;
    m.codebook.aux_name = "aux";
    for (std::size_t i = 0; i < grid.units(); ++i) {
        m.codebook.ids.push_back(static_cast<int>(i));
        m.codebook.vectors.push_back(grid.codebook[i]);
        m.codebook.aux.push_back(0.0);
    }
    for (std::size_t a = 0; a < grid.units(); ++a) {
        for (std::size_t b = a + 1; b < grid.units(); ++b) {
            if (grid_distance(grid, a, b) == 1) {
                m.edges.push_back({static_cast<int>(a), static_cast<int>(b), std::nullopt});
            }
        }
    }
    m.assignment_rows = index_to_id_rows(assignments(grid.codebook, d), m.codebook.ids);
    m.metrics = report_to_kv(metric_report(grid, d));
    return m;
}

TrainedModel train_gcs(const RunConfig& cfg, const Dataset& d) {
    const auto& c = cfg.gcs;
    GcsParams params;
    params.eps_b = c.eps_b;
    params.eps_n = c.eps_n;
    params.counter_decay = c.counter_decay;
    params.insert_every = c.insert_every;
    params.delete_every = c.delete_every;
    params.delete_threshold = c.delete_threshold;
    params.max_nodes = c.max_nodes;
    RandomStream rs(cfg.seed);
    const GcsNetwork net = gcs_train(d, params, rs, c.presentations, c.k);

    TrainedModel m;
    m.codebook.aux_name = "counter";
    for (const auto& [id, node] : net.nodes()) {
        m.codebook.ids.push_back(id);
        m.codebook.vectors.push_back(node.w);
        m.codebook.aux.push_back(node.counter);
    }
    for (const auto& [a, b] : net.edges()) {
        m.edges.push_back({a, b, std::nullopt});
    }
    m.assignment_rows = index_to_id_rows(assignments(m.codebook.vectors, d), m.codebook.ids);
    m.metrics = report_to_kv(metric_report(m.codebook.vectors, d));
    return m;
}

TrainedModel train_gng(const RunConfig& cfg, const Dataset& d) {
    const auto& c = cfg.gng;
    GngParams params;
    params.eps_b = c.eps_b;
    params.eps_n = c.eps_n;
    params.max_age = c.max_age;
    params.insert_every = c.insert_every;
    params.alpha_split = c.alpha_split;
    params.beta_decay = c.beta_decay;
    params.max_nodes = c.max_nodes;
    RandomStream rs(cfg.seed);
    const GngGraph g = gng_train(d, params, rs, c.presentations);

    TrainedModel m;
    m.codebook.aux_name = "error";
    for (const auto& [id, node] : g.nodes()) {
        m.codebook.ids.push_back(id);
        m.codebook.vectors.push_back(node.w);
        m.codebook.aux.push_back(node.error);
    }
    for (const auto& [key, age] : g.edges()) {
        m.edges.push_back({key.first, key.second, age});
    }
    m.assignment_rows = index_to_id_rows(assignments(m.codebook.vectors, d), m.codebook.ids);
    m.metrics = report_to_kv(metric_report(m.codebook.vectors, d));
    m.metrics.emplace_back("components", std::to_string(gng_components(g)));
    return m;
}

TrainedModel train_sota(const RunConfig& cfg, const Dataset& d) {
    const auto& c = cfg.sota;
    SotaParams params;
    params.eta_winner = c.eta_winner;
    params.eta_sister = c.eta_sister;
    params.eta_mother = c.eta_mother;
    params.cycle_presentations = c.cycle_presentations;
    params.resource_threshold = c.resource_threshold;
    params.max_leaves = c.max_leaves;
    const SotaResult<VectorPoint> result = sota_train(d, params);
    const VectorSotaTree& tree = result.tree;

    TrainedModel m;
    m.codebook.aux_name = "resource";
    std::vector<Vector> leaf_profiles;
    std::vector<int> leaf_ids;
    for (const auto& node : tree.nodes()) {
        m.codebook.ids.push_back(node.id);
        m.codebook.vectors.push_back(node.profile);
        m.codebook.aux.push_back(node.resource);
        if (node.is_leaf()) {
            leaf_ids.push_back(node.id);
            leaf_profiles.push_back(node.profile);
        }
        if (!node.is_leaf()) {
            for (int child : node.children) {
                m.edges.push_back({node.id, child, node.frozen ? 1 : 0});
            }
        }
    }
    m.assignment_rows.reserve(result.assignments.size());
    for (std::size_t i = 0; i < result.assignments.size(); ++i) {
        m.assignment_rows.emplace_back(i, result.assignments[i]);
    }
    MetricReport report = metric_report(leaf_profiles, d);
    m.metrics = report_to_kv(report);
    m.metrics.emplace_back("n_tree_nodes", std::to_string(tree.node_count()));
    m.metrics.emplace_back("cycles", std::to_string(result.cycles));
    return m;
}

RunArtifacts write_artifacts(ArtifactSink& sink, const TrainedModel& m) {
    RunArtifacts art;
    std::ostringstream cb;
    write_codebook(cb, m.codebook);
    art.codebook_path = sink.write("codebook.csv", cb.str());

    std::ostringstream ed;
    write_edges(ed, m.edges);
    art.edges_path = sink.write("edges.txt", ed.str());

    std::ostringstream as;
    write_assignments(as, m.assignment_rows);
    art.assignments_path = sink.write("assignments.csv", as.str());

    std::ostringstream me;
    write_key_values(me, m.metrics);
    art.metrics_path = sink.write("metrics.txt", me.str());
    return art;
}

std::string resolve_out_dir(const std::string& out_dir) {
    return out_dir.empty() ? default_out_dir() : out_dir;
}

}  // namespace

RunArtifacts run_train(const RunConfig& cfg) {
    if (cfg.model.empty()) throw Error("train: no model given (key 'model')");
    if (cfg.data_path.empty()) throw Error("train: no dataset given (key 'data')");
    const Dataset d = ingest_csv(cfg.data_path, cfg.has_header);

    ArtifactSink sink(resolve_out_dir(cfg.out_dir));
    try {
        TrainedModel m;
        if (cfg.model == "som") {
            m = train_som(cfg, d);
        } else if (cfg.model == "gcs") {
            m = train_gcs(cfg, d);
        } else if (cfg.model == "gng") {
            m = train_gng(cfg, d);
        } else if (cfg.model == "sota") {
            m = train_sota(cfg, d);
        } else {
            throw Error("train: unknown model '" + cfg.model + "' (expected som, gcs, gng or sota)");
        }
        return write_artifacts(sink, m);
    } catch (...) {
        sink.remove_written();
        throw;
    }
}

RunArtifacts run_assign(const std::string& codebook_path, const std::string& data_path,
                        bool has_header, const std::string& out_dir) {
    const Codebook cb = read_codebook(codebook_path);
    const Dataset d = ingest_csv(data_path, has_header);
    ArtifactSink sink(resolve_out_dir(out_dir));
    try {
        RunArtifacts art;
        std::ostringstream as;
        write_assignments(as, index_to_id_rows(assignments(cb.vectors, d), cb.ids));
        art.assignments_path = sink.write("assignments.csv", as.str());
        return art;
    } catch (...) {
        sink.remove_written();
        throw;
    }
}

RunArtifacts run_metrics(const std::string& codebook_path, const std::string& data_path,
                         bool has_header, const std::string& out_dir) {
    const Codebook cb = read_codebook(codebook_path);
    const Dataset d = ingest_csv(data_path, has_header);
    ArtifactSink sink(resolve_out_dir(out_dir));
    try {
        RunArtifacts art;
        std::ostringstream me;
        write_key_values(me, report_to_kv(metric_report(cb.vectors, d)));
        art.metrics_path = sink.write("metrics.txt", me.str());
        return art;
    } catch (...) {
        sink.remove_written();
        throw;
    }
}

}  // namespace sonn
