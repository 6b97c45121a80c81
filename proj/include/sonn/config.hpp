#pragma once

#include "sonn/core.hpp"

namespace sonn {

// Flat key=value run configuration. Every field has a working default;
// file values override defaults and CLI flags override file values.
// Unknown keys are rejected.
struct RunConfig {
    std::string model;  // som | gcs | gng | sota
    std::string data_path;
    std::uint64_t seed = 1;
    std::string out_dir;  // empty: $SONN_OUT_DIR, then "."
    bool has_header = false;

    struct Som {
        std::size_t width = 10;
        std::size_t height = 10;
        std::string topology = "rectangular";
        std::uint64_t steps = 10000;
        std::string alpha_kind = "linear";
        double alpha_initial = 0.5;
        double alpha_final = 0.01;
        std::string radius_kind = "linear";
        double radius_initial = 5.0;
        double radius_final = 0.0;
    } som;

    struct Gcs {
        int k = 2;
        double eps_b = 0.06;
        double eps_n = 0.006;
        double counter_decay = 0.02;
        std::uint64_t insert_every = 100;
        std::uint64_t delete_every = 0;  // 0 = never
        double delete_threshold = 0.5;
        std::size_t max_nodes = 100;
        std::uint64_t presentations = 10000;
    } gcs;

    struct Gng {
        double eps_b = 0.2;
        double eps_n = 0.006;
        int max_age = 50;
        std::uint64_t insert_every = 100;
        double alpha_split = 0.5;
        double beta_decay = 0.0005;
        std::size_t max_nodes = 100;
        std::uint64_t presentations = 10000;
    } gng;

    struct Sota {
        double eta_winner = 0.1;
        double eta_sister = 0.05;
        double eta_mother = 0.01;
        std::uint64_t cycle_presentations = 0;  // 0 = one pass
        double resource_threshold = 0.05;
        std::size_t max_leaves = 16;
    } sota;
};

// Applies one key. Throws on unknown keys or unparseable values.
void apply_key_value(RunConfig& cfg, const std::string& key, const std::string& value);

// Applies a `key = value` config file in line order.
void apply_config_file(RunConfig& cfg, const std::string& path);

// $SONN_OUT_DIR when set, "." otherwise.
std::string default_out_dir();

}  // namespace sonn
