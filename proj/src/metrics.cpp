#include "sonn/metrics.hpp"

#include <cmath>
#include <set>

namespace sonn {

std::vector<std::size_t> assignments(std::span<const Vector> codebook, const Dataset& d) {
    if (codebook.empty()) throw Error("assignments: empty codebook");
    std::vector<std::size_t> out;
    out.reserve(d.size());
    for (const Vector& x : d.rows) {
        out.push_back(find_winner(codebook, x));
    }
    return out;
}

double quantization_error(std::span<const Vector> codebook, const Dataset& d, bool squared) {
    if (codebook.empty()) throw Error("quantization_error: empty codebook");
    if (d.rows.empty()) throw Error("quantization_error: empty dataset");
    double sum = 0.0;
    for (const Vector& x : d.rows) {
        const double sq = squared_distance(codebook[find_winner(codebook, x)], x);
        sum += squared ? sq : std::sqrt(sq);
    }
    return sum / static_cast<double>(d.size());
}

double topographic_error(const SomGrid& g, const Dataset& d) {
    if (g.units() < 2) throw Error("topographic_error: grid needs at least 2 units");
    if (d.rows.empty()) throw Error("topographic_error: empty dataset");
    std::size_t broken = 0;
    for (const Vector& x : d.rows) {
        const auto [b1, b2] = find_winners(g.codebook, x);
        if (grid_distance(g, b1, b2) > 1) ++broken;
    }
    return static_cast<double>(broken) / static_cast<double>(d.size());
}

std::size_t dead_units(std::span<const Vector> codebook, const Dataset& d) {
    std::set<std::size_t> winners;
    for (std::size_t i : assignments(codebook, d)) winners.insert(i);
    return codebook.size() - winners.size();
}

MetricReport metric_report(std::span<const Vector> codebook, const Dataset& d) {
    MetricReport r;
    r.quantization_error = quantization_error(codebook, d);
    r.dead_units = dead_units(codebook, d);
    r.n_units = codebook.size();
    r.n_inputs = d.size();
    return r;
}

MetricReport metric_report(const SomGrid& g, const Dataset& d) {
    MetricReport r = metric_report(std::span<const Vector>(g.codebook), d);
    if (g.units() >= 2) r.topographic_error = topographic_error(g, d);
    return r;
}

}  // namespace sonn
