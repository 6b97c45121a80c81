#pragma once

#include "sonn/config.hpp"

namespace sonn {

struct RunArtifacts {
    std::string codebook_path;
    std::string edges_path;
    std::string assignments_path;
    std::string metrics_path;
};

// Trains the configured model and writes codebook.csv, edges.txt,
// assignments.csv and metrics.txt into the output directory. Outputs
// are deterministic per config+seed; partially written files are
// removed when the run fails.
RunArtifacts run_train(const RunConfig& cfg);

// BMU assignment of a dataset against an exported codebook.
RunArtifacts run_assign(const std::string& codebook_path, const std::string& data_path,
                        bool has_header, const std::string& out_dir);

// Codebook-level metrics for a dataset (no grid, so no topographic error).
RunArtifacts run_metrics(const std::string& codebook_path, const std::string& data_path,
                         bool has_header, const std::string& out_dir);

}  // namespace sonn
