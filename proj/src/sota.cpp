#include "sonn/sota.hpp"

#include <cmath>

namespace sonn {

SequenceProfile::SequenceProfile(std::size_t positions_in, std::size_t alphabet_in,
                                 std::vector<double> values_in)
    : positions(positions_in), alphabet(alphabet_in), values(std::move(values_in)) {
    if (positions == 0 || alphabet == 0) throw Error("profile: empty shape");
    if (values.size() != positions * alphabet) {
        throw Error("profile: expected " + std::to_string(positions * alphabet) +
                    " values, got " + std::to_string(values.size()));
    }
    for (std::size_t l = 0; l < positions; ++l) {
        double row_sum = 0.0;
        for (std::size_t r = 0; r < alphabet; ++r) {
            const double v = at(l, r);
            if (!(v >= 0.0 && v <= 1.0)) {
                throw Error("profile: entry outside [0, 1] at position " + std::to_string(l));
            }
            row_sum += v;
        }
        if (std::abs(row_sum - 1.0) > 1e-9) {
            throw Error("profile: row " + std::to_string(l) + " sums to " + std::to_string(row_sum));
        }
    }
}

double sequence_distance(const SequenceProfile& s, const SequenceProfile& c) {
    ProfilePoint::check_shape(s, c);
    double total = 0.0;
    for (std::size_t l = 0; l < s.positions; ++l) {
        double dot = 0.0;
        for (std::size_t r = 0; r < s.alphabet; ++r) {
            dot += s.at(l, r) * c.at(l, r);
        }
        total += 1.0 - dot;
    }
    return total / static_cast<double>(s.positions);
}

void SotaParams::validate() const {
    if (!(eta_winner >= eta_sister && eta_sister >= eta_mother && eta_mother >= 0.0)) {
        throw Error("sota: rates must satisfy eta_winner >= eta_sister >= eta_mother >= 0");
    }
    if (eta_winner > 1.0) throw Error("sota: eta_winner must be <= 1");
    if (!(resource_threshold > 0.0)) throw Error("sota: resource_threshold must be > 0");
    if (max_leaves == 0) throw Error("sota: max_leaves must be >= 1");
}

Vector VectorPoint::mean(std::span<const Vector> items) {
    if (items.empty()) throw Error("mean of empty set");
    Vector m(items.front().size(), 0.0);
    for (const Vector& v : items) {
        check_shape(m, v);
        for (std::size_t j = 0; j < m.size(); ++j) m[j] += v[j];
    }
    for (double& x : m) x /= static_cast<double>(items.size());
    return m;
}

void VectorPoint::check_shape(const Vector& a, const Vector& b) {
    if (a.size() != b.size()) {
        throw Error("sota: vector dimension mismatch (" + std::to_string(a.size()) + " vs " +
                    std::to_string(b.size()) + ")");
    }
}

void ProfilePoint::blend(SequenceProfile& c, const SequenceProfile& x, double eta) {
    check_shape(c, x);
    for (std::size_t i = 0; i < c.values.size(); ++i) {
        c.values[i] += eta * (x.values[i] - c.values[i]);
    }
}

SequenceProfile ProfilePoint::mean(std::span<const SequenceProfile> items) {
    if (items.empty()) throw Error("mean of empty set");
    SequenceProfile m = items.front();
    for (double& v : m.values) v = 0.0;
    for (const SequenceProfile& s : items) {
        check_shape(m, s);
        for (std::size_t i = 0; i < m.values.size(); ++i) m.values[i] += s.values[i];
    }
    for (double& v : m.values) v /= static_cast<double>(items.size());
    return m;
}

void ProfilePoint::check_shape(const SequenceProfile& a, const SequenceProfile& b) {
    if (a.positions != b.positions || a.alphabet != b.alphabet) {
        throw Error("sota: profile shape mismatch");
    }
}

SotaResult<VectorPoint> sota_train(const Dataset& d, const SotaParams& p,
                                   const SotaObserver<VectorPoint>& observer) {
    return sota_train<VectorPoint>(d.rows, p, observer);
}

}  // namespace sonn
