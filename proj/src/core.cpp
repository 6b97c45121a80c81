#include "sonn/core.hpp"

#include <cmath>
#include <limits>

namespace sonn {

bool is_finite(const Vector& v) {
    for (double x : v) {
        if (!std::isfinite(x)) return false;
    }
    return true;
}

Dataset::Dataset(std::vector<Vector> rows_in, std::vector<int> labels_in)
    : rows(std::move(rows_in)), labels(std::move(labels_in)) {
    if (rows.empty()) throw Error("dataset: no rows");
    dim = rows.front().size();
    if (dim == 0) throw Error("dataset: zero-dimensional rows");
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != dim) {
            throw Error("dataset: row " + std::to_string(i) + " has dimension " +
                        std::to_string(rows[i].size()) + ", expected " + std::to_string(dim));
        }
        if (!is_finite(rows[i])) {
            throw Error("dataset: row " + std::to_string(i) + " has a non-finite coordinate");
        }
    }
    if (!labels.empty() && labels.size() != rows.size()) {
        throw Error("dataset: " + std::to_string(labels.size()) + " labels for " +
                    std::to_string(rows.size()) + " rows");
    }
}

double RandomStream::next_double() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

std::size_t RandomStream::next_index(std::size_t n) {
    if (n == 0) throw Error("next_index: empty range");
    const std::uint64_t un = n;
    // Accept x only below the largest multiple of n that fits in 64 bits.
    const std::uint64_t rem = (std::numeric_limits<std::uint64_t>::max() % un + 1) % un;
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - rem;
    std::uint64_t x = engine_();
    while (x > limit) x = engine_();
    return static_cast<std::size_t>(x % un);
}

double RandomStream::next_uniform(double lo, double hi) {
    return lo + next_double() * (hi - lo);
}

double RandomStream::next_gaussian() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    const double u1 = 1.0 - next_double();  // (0, 1], keeps the log finite
    const double u2 = next_double();
    const double mag = std::sqrt(-2.0 * std::log(u1));
    const double ang = 2.0 * M_PI * u2;
    spare_ = mag * std::sin(ang);
    has_spare_ = true;
    return mag * std::cos(ang);
}

DecaySchedule::DecaySchedule(DecayKind kind, double initial, double final_value,
                             std::uint64_t total_steps)
    : kind_(kind), initial_(initial), final_(final_value), total_(total_steps) {}

DecaySchedule DecaySchedule::linear(double initial, double final_value, std::uint64_t total_steps) {
    if (!(initial >= 0.0) || !std::isfinite(initial)) throw Error("schedule: initial must be >= 0");
    if (!(final_value >= 0.0) || !std::isfinite(final_value)) throw Error("schedule: final must be >= 0");
    if (final_value > initial) throw Error("schedule: final exceeds initial (schedule must not increase)");
    if (total_steps == 0) throw Error("schedule: total_steps must be positive");
    return DecaySchedule(DecayKind::Linear, initial, final_value, total_steps);
}

DecaySchedule DecaySchedule::exponential(double initial, double final_value, std::uint64_t total_steps) {
    if (!(initial > 0.0) || !std::isfinite(initial)) throw Error("schedule: initial must be > 0");
    if (!(final_value > 0.0) || !std::isfinite(final_value)) {
        throw Error("schedule: exponential decay needs final > 0");
    }
    if (final_value > initial) throw Error("schedule: final exceeds initial (schedule must not increase)");
    if (total_steps == 0) throw Error("schedule: total_steps must be positive");
    return DecaySchedule(DecayKind::Exponential, initial, final_value, total_steps);
}

double DecaySchedule::value(std::uint64_t t) const {
    if (t > total_) {
        throw Error("schedule: step " + std::to_string(t) + " past horizon " + std::to_string(total_));
    }
    if (t == 0) return initial_;
    if (t == total_) return final_;
    const double frac = static_cast<double>(t) / static_cast<double>(total_);
    if (kind_ == DecayKind::Linear) {
        return initial_ + (final_ - initial_) * frac;
    }
    return initial_ * std::pow(final_ / initial_, frac);
}

namespace {

void check_same_dim(const Vector& a, const Vector& b, const char* where) {
    if (a.size() != b.size()) {
        throw Error(std::string(where) + ": dimension mismatch (" + std::to_string(a.size()) +
                    " vs " + std::to_string(b.size()) + ")");
    }
}

}  // namespace

double squared_distance(const Vector& a, const Vector& b) {
    check_same_dim(a, b, "distance");
    double sum = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double diff = a[i] - b[i];
        sum += diff * diff;
    }
    return sum;
}

double euclidean_distance(const Vector& a, const Vector& b) {
    return std::sqrt(squared_distance(a, b));
}

std::size_t find_winner(std::span<const Vector> codebook, const Vector& x) {
    if (codebook.empty()) throw Error("find_winner: empty codebook");
    std::size_t best = 0;
    double best_d = squared_distance(codebook[0], x);
    for (std::size_t i = 1; i < codebook.size(); ++i) {
        const double d = squared_distance(codebook[i], x);
        if (d < best_d) {
            best_d = d;
            best = i;
        }
    }
    return best;
}

std::pair<std::size_t, std::size_t> find_winners(std::span<const Vector> codebook, const Vector& x) {
    if (codebook.size() < 2) throw Error("find_winners: codebook needs at least 2 entries");
    std::size_t best = 0, second = 1;
    double best_d = squared_distance(codebook[0], x);
    double second_d = squared_distance(codebook[1], x);
    if (second_d < best_d) {
        std::swap(best, second);
        std::swap(best_d, second_d);
    }
    for (std::size_t i = 2; i < codebook.size(); ++i) {
        const double d = squared_distance(codebook[i], x);
        if (d < best_d) {
            second = best;
            second_d = best_d;
            best = i;
            best_d = d;
        } else if (d < second_d) {
            second = i;
            second_d = d;
        }
    }
    return {best, second};
}

const Vector& draw_sample(const Dataset& d, RandomStream& rs) {
    if (d.rows.empty()) throw Error("draw_sample: empty dataset");
    return d.rows[rs.next_index(d.rows.size())];
}

void move_toward(Vector& w, const Vector& x, double eps) {
    check_same_dim(w, x, "move_toward");
    for (std::size_t i = 0; i < w.size(); ++i) {
        w[i] += eps * (x[i] - w[i]);
    }
}

BoundingBox bounding_box(const Dataset& d) {
    if (d.rows.empty()) throw Error("bounding_box: empty dataset");
    BoundingBox box{d.rows.front(), d.rows.front()};
    for (const Vector& row : d.rows) {
        for (std::size_t j = 0; j < row.size(); ++j) {
            box.lo[j] = std::min(box.lo[j], row[j]);
            box.hi[j] = std::max(box.hi[j], row[j]);
        }
    }
    return box;
}

Vector uniform_in_box(const BoundingBox& box, RandomStream& rs) {
    Vector v(box.lo.size());
    for (std::size_t j = 0; j < v.size(); ++j) {
        v[j] = rs.next_uniform(box.lo[j], box.hi[j]);
    }
    return v;
}

}  // namespace sonn
