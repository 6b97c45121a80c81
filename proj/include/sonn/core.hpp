#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sonn {

// Thrown for every contract violation: dimension mismatches, bad
// parameters, malformed input files.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what_arg) : std::runtime_error(what_arg) {}
};

using Vector = std::vector<double>;

bool is_finite(const Vector& v);

// Feature vectors in row order, all of the same dimension. Labels are
// optional integer class tags consumed by evaluation code only; the
// trainers never see them.
struct Dataset {
    std::vector<Vector> rows;
    std::size_t dim = 0;
    std::vector<int> labels;  // empty = unlabeled

    Dataset() = default;
    explicit Dataset(std::vector<Vector> rows_in, std::vector<int> labels_in = {});

    std::size_t size() const { return rows.size(); }
    bool has_labels() const { return !labels.empty(); }
};

// Seeded pseudo-random stream. The engine is std::mt19937_64, whose
// output sequence is pinned down by the C++ standard, and every derived
// draw below is a fixed transform of that sequence, so replaying a seed
// reproduces all draws bit-exactly on any platform.
class RandomStream {
public:
    explicit RandomStream(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    // Uniform in [0, 1): top 53 bits of one engine draw.
    double next_double();

    // Uniform index in [0, n), rejection-sampled to avoid modulo bias.
    std::size_t next_index(std::size_t n);

    // Uniform in [lo, hi).
    double next_uniform(double lo, double hi);

    // Standard normal via the Box-Muller transform. Values come in
    // pairs; the second of each pair is cached for the next call.
    double next_gaussian();

private:
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

enum class DecayKind { Linear, Exponential };

// Non-increasing schedule running from `initial` at step 0 to `final`
// at step `total_steps`. Linear interpolates; exponential follows
// initial * (final/initial)^(t/T) and therefore needs final > 0.
class DecaySchedule {
public:
    static DecaySchedule linear(double initial, double final_value, std::uint64_t total_steps);
    static DecaySchedule exponential(double initial, double final_value, std::uint64_t total_steps);

    double value(std::uint64_t t) const;

    DecayKind kind() const { return kind_; }
    double initial() const { return initial_; }
    double final_value() const { return final_; }
    std::uint64_t total_steps() const { return total_; }

private:
    DecaySchedule(DecayKind kind, double initial, double final_value, std::uint64_t total_steps);

    DecayKind kind_;
    double initial_;
    double final_;
    std::uint64_t total_;
};

double euclidean_distance(const Vector& a, const Vector& b);

// ||a - b||^2 without the square root. Winner searches compare on this
// quantity; ties on it are exactly ties on the distance.
double squared_distance(const Vector& a, const Vector& b);

// Index of the codebook vector closest to x; ties go to the lowest
// index. Requires at least one entry.
std::size_t find_winner(std::span<const Vector> codebook, const Vector& x);

// (best, second-best) indices, each tie broken by lowest index.
// Requires at least two entries.
std::pair<std::size_t, std::size_t> find_winners(std::span<const Vector> codebook, const Vector& x);

const Vector& draw_sample(const Dataset& d, RandomStream& rs);

// w += eps * (x - w), the adaptation move shared by all models.
void move_toward(Vector& w, const Vector& x, double eps);

// Per-coordinate [lo, hi] bounds of a dataset.
struct BoundingBox {
    Vector lo;
    Vector hi;
};

BoundingBox bounding_box(const Dataset& d);
Vector uniform_in_box(const BoundingBox& box, RandomStream& rs);

}  // namespace sonn
