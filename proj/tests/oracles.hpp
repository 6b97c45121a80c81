// Test-only reference implementations, deliberately written as plain
// double loops so they stay independent of the library's search and
// metric code paths.
#pragma once

#include "sonn/core.hpp"

#include <cmath>
#include <cstddef>
#include <map>
#include <utility>
#include <vector>

namespace oracle {

inline double dist2(const sonn::Vector& a, const sonn::Vector& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        s += (a[i] - b[i]) * (a[i] - b[i]);
    }
    return s;
}

inline double dist(const sonn::Vector& a, const sonn::Vector& b) {
    return std::sqrt(dist2(a, b));
}

inline std::size_t nearest(const std::vector<sonn::Vector>& codebook, const sonn::Vector& x) {
    std::size_t best = 0;
    double best_d = dist2(codebook[0], x);
    for (std::size_t i = 1; i < codebook.size(); ++i) {
        const double d = dist2(codebook[i], x);
        if (d < best_d) {
            best_d = d;
            best = i;
        }
    }
    return best;
}

inline std::pair<std::size_t, std::size_t> two_nearest(const std::vector<sonn::Vector>& codebook,
                                                       const sonn::Vector& x) {
    const std::size_t first = nearest(codebook, x);
    std::size_t second = first == 0 ? 1 : 0;
    double second_d = dist2(codebook[second], x);
    for (std::size_t i = 0; i < codebook.size(); ++i) {
        if (i == first) continue;
        const double d = dist2(codebook[i], x);
        if (d < second_d) {
            second_d = d;
            second = i;
        }
    }
    return {first, second};
}

inline std::vector<std::size_t> assign_all(const std::vector<sonn::Vector>& codebook,
                                           const std::vector<sonn::Vector>& inputs) {
    std::vector<std::size_t> out;
    for (const auto& x : inputs) out.push_back(nearest(codebook, x));
    return out;
}

inline double mean_bmu_distance(const std::vector<sonn::Vector>& codebook,
                                const std::vector<sonn::Vector>& inputs) {
    double sum = 0.0;
    for (const auto& x : inputs) sum += dist(codebook[nearest(codebook, x)], x);
    return sum / static_cast<double>(inputs.size());
}

// Nearest reference comparing true (not squared) distances, matching
// the leaf competition, which minimizes the distance value itself.
inline std::size_t nearest_by_distance(const std::vector<sonn::Vector>& refs,
                                       const sonn::Vector& x) {
    std::size_t best = 0;
    double best_d = dist(refs[0], x);
    for (std::size_t i = 1; i < refs.size(); ++i) {
        const double d = dist(refs[i], x);
        if (d < best_d) {
            best_d = d;
            best = i;
        }
    }
    return best;
}

// Mean distance of each input to its nearest reference among `refs`,
// keyed by the reference's position in `refs` (used against
// sota_resources with refs = leaf profiles in leaf-id order).
inline std::map<std::size_t, double> per_ref_mean_distance(const std::vector<sonn::Vector>& refs,
                                                           const std::vector<sonn::Vector>& inputs) {
    std::map<std::size_t, double> sums;
    std::map<std::size_t, std::size_t> counts;
    for (std::size_t i = 0; i < refs.size(); ++i) {
        sums[i] = 0.0;
        counts[i] = 0;
    }
    for (const auto& x : inputs) {
        const std::size_t i = nearest_by_distance(refs, x);
        sums[i] += dist(refs[i], x);
        counts[i] += 1;
    }
    std::map<std::size_t, double> means;
    for (const auto& [i, s] : sums) {
        means[i] = counts[i] == 0 ? 0.0 : s / static_cast<double>(counts[i]);
    }
    return means;
}

// Lloyd's algorithm with k-means++ seeding, run until the assignment
// vector stops changing. Centroids of emptied clusters stay put.
inline std::vector<sonn::Vector> kmeans(const std::vector<sonn::Vector>& data, std::size_t k,
                                        sonn::RandomStream& rs, std::size_t max_iters = 500) {
    std::vector<sonn::Vector> centroids;
    centroids.push_back(data[rs.next_index(data.size())]);
    std::vector<double> d2(data.size());
    while (centroids.size() < k) {
        double total = 0.0;
        for (std::size_t i = 0; i < data.size(); ++i) {
            double best = dist2(centroids[0], data[i]);
            for (std::size_t c = 1; c < centroids.size(); ++c) {
                best = std::min(best, dist2(centroids[c], data[i]));
            }
            d2[i] = best;
            total += best;
        }
        if (total <= 0.0) {
            centroids.push_back(data[rs.next_index(data.size())]);
            continue;
        }
        double u = rs.next_double() * total;
        std::size_t pick = data.size() - 1;
        for (std::size_t i = 0; i < data.size(); ++i) {
            u -= d2[i];
            if (u <= 0.0) {
                pick = i;
                break;
            }
        }
        centroids.push_back(data[pick]);
    }

    std::vector<std::size_t> owner(data.size(), 0);
    for (std::size_t iter = 0; iter < max_iters; ++iter) {
        bool changed = false;
        for (std::size_t i = 0; i < data.size(); ++i) {
            const std::size_t c = nearest(centroids, data[i]);
            if (c != owner[i]) {
                owner[i] = c;
                changed = true;
            }
        }
        if (!changed && iter > 0) break;
        std::vector<sonn::Vector> sums(centroids.size(), sonn::Vector(data.front().size(), 0.0));
        std::vector<std::size_t> counts(centroids.size(), 0);
        for (std::size_t i = 0; i < data.size(); ++i) {
            for (std::size_t j = 0; j < data[i].size(); ++j) sums[owner[i]][j] += data[i][j];
            counts[owner[i]] += 1;
        }
        for (std::size_t c = 0; c < centroids.size(); ++c) {
            if (counts[c] == 0) continue;
            for (std::size_t j = 0; j < centroids[c].size(); ++j) {
                centroids[c][j] = sums[c][j] / static_cast<double>(counts[c]);
            }
        }
    }
    return centroids;
}

inline sonn::Vector random_vector(std::size_t dim, sonn::RandomStream& rs, double lo = -10.0,
                                  double hi = 10.0) {
    sonn::Vector v(dim);
    for (double& x : v) x = rs.next_uniform(lo, hi);
    return v;
}

}  // namespace oracle
