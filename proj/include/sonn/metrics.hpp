#pragma once

#include "sonn/core.hpp"
#include "sonn/som.hpp"

#include <optional>

namespace sonn {

struct MetricReport {
    double quantization_error = 0.0;
    std::optional<double> topographic_error;  // grid models only
    std::size_t dead_units = 0;
    std::size_t n_units = 0;
    std::size_t n_inputs = 0;
};

// Per-input BMU index, standard lowest-index tie-breaking.
std::vector<std::size_t> assignments(std::span<const Vector> codebook, const Dataset& d);

// Mean distance from each input to its BMU; squared=true averages the
// squared distances instead.
double quantization_error(std::span<const Vector> codebook, const Dataset& d, bool squared = false);

// Fraction of inputs whose two best units are not within grid distance
// 1 of each other. Needs at least two units.
double topographic_error(const SomGrid& g, const Dataset& d);

// Units that win no input at all.
std::size_t dead_units(std::span<const Vector> codebook, const Dataset& d);

MetricReport metric_report(std::span<const Vector> codebook, const Dataset& d);
MetricReport metric_report(const SomGrid& g, const Dataset& d);

}  // namespace sonn
