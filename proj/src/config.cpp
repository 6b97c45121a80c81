#include "sonn/config.hpp"

#include "sonn/csv.hpp"

#include <cstdlib>

namespace sonn {

namespace {

double to_double(const std::string& key, const std::string& value) {
    char* end = nullptr;
    const double v = std::strtod(value.c_str(), &end);
    if (value.empty() || end != value.c_str() + value.size()) {
        throw Error("config: key '" + key + "': expected a real number, got '" + value + "'");
    }
    return v;
}

std::uint64_t to_u64(const std::string& key, const std::string& value) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(value.c_str(), &end, 10);
    if (value.empty() || end != value.c_str() + value.size() || value.front() == '-') {
        throw Error("config: key '" + key + "': expected a non-negative integer, got '" + value + "'");
    }
    return v;
}

int to_int(const std::string& key, const std::string& value) {
    char* end = nullptr;
    const long v = std::strtol(value.c_str(), &end, 10);
    if (value.empty() || end != value.c_str() + value.size()) {
        throw Error("config: key '" + key + "': expected an integer, got '" + value + "'");
    }
    return static_cast<int>(v);
}

bool to_bool(const std::string& key, const std::string& value) {
    if (value == "true" || value == "1") return true;
    if (value == "false" || value == "0") return false;
    throw Error("config: key '" + key + "': expected true/false, got '" + value + "'");
}

}  // namespace

void apply_key_value(RunConfig& cfg, const std::string& key, const std::string& value) {
    if (key == "model") { cfg.model = value; return; }
    if (key == "data") { cfg.data_path = value; return; }
    if (key == "seed") { cfg.seed = to_u64(key, value); return; }
    if (key == "out") { cfg.out_dir = value; return; }
    if (key == "has_header") { cfg.has_header = to_bool(key, value); return; }

    if (key == "som.width") { cfg.som.width = to_u64(key, value); return; }
    if (key == "som.height") { cfg.som.height = to_u64(key, value); return; }
    if (key == "som.topology") { cfg.som.topology = value; return; }
    if (key == "som.steps") { cfg.som.steps = to_u64(key, value); return; }
    if (key == "som.alpha_kind") { cfg.som.alpha_kind = value; return; }
    if (key == "som.alpha_initial") { cfg.som.alpha_initial = to_double(key, value); return; }
    if (key == "som.alpha_final") { cfg.som.alpha_final = to_double(key, value); return; }
    if (key == "som.radius_kind") { cfg.som.radius_kind = value; return; }
    if (key == "som.radius_initial") { cfg.som.radius_initial = to_double(key, value); return; }
    if (key == "som.radius_final") { cfg.som.radius_final = to_double(key, value); return; }

    if (key == "gcs.k") { cfg.gcs.k = to_int(key, value); return; }
    if (key == "gcs.eps_b") { cfg.gcs.eps_b = to_double(key, value); return; }
    if (key == "gcs.eps_n") { cfg.gcs.eps_n = to_double(key, value); return; }
    if (key == "gcs.counter_decay") { cfg.gcs.counter_decay = to_double(key, value); return; }
    if (key == "gcs.insert_every") { cfg.gcs.insert_every = to_u64(key, value); return; }
    if (key == "gcs.delete_every") { cfg.gcs.delete_every = to_u64(key, value); return; }
    if (key == "gcs.delete_threshold") { cfg.gcs.delete_threshold = to_double(key, value); return; }
    if (key == "gcs.max_nodes") { cfg.gcs.max_nodes = to_u64(key, value); return; }
    if (key == "gcs.presentations") { cfg.gcs.presentations = to_u64(key, value); return; }

    if (key == "gng.eps_b") { cfg.gng.eps_b = to_double(key, value); return; }
    if (key == "gng.eps_n") { cfg.gng.eps_n = to_double(key, value); return; }
    if (key == "gng.max_age") { cfg.gng.max_age = to_int(key, value); return; }
    if (key == "gng.insert_every") { cfg.gng.insert_every = to_u64(key, value); return; }
    if (key == "gng.alpha_split") { cfg.gng.alpha_split = to_double(key, value); return; }
    if (key == "gng.beta_decay") { cfg.gng.beta_decay = to_double(key, value); return; }
    if (key == "gng.max_nodes") { cfg.gng.max_nodes = to_u64(key, value); return; }
    if (key == "gng.presentations") { cfg.gng.presentations = to_u64(key, value); return; }

    if (key == "sota.eta_winner") { cfg.sota.eta_winner = to_double(key, value); return; }
    if (key == "sota.eta_sister") { cfg.sota.eta_sister = to_double(key, value); return; }
    if (key == "sota.eta_mother") { cfg.sota.eta_mother = to_double(key, value); return; }
    if (key == "sota.cycle_presentations") { cfg.sota.cycle_presentations = to_u64(key, value); return; }
    if (key == "sota.resource_threshold") { cfg.sota.resource_threshold = to_double(key, value); return; }
    if (key == "sota.max_leaves") { cfg.sota.max_leaves = to_u64(key, value); return; }

    throw Error("config: unknown key '" + key + "'");
}

void apply_config_file(RunConfig& cfg, const std::string& path) {
    for (const auto& [key, value] : read_key_values(path)) {
        apply_key_value(cfg, key, value);
    }
}

std::string default_out_dir() {
    const char* env = std::getenv("SONN_OUT_DIR");
    return (env && *env) ? env : ".";
}

}  // namespace sonn
