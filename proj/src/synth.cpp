#include "sonn/synth.hpp"

#include <cmath>

namespace sonn {

SynthKind parse_synth_kind(const std::string& name) {
    if (name == "uniform_rect") return SynthKind::UniformRect;
    if (name == "gaussian_mixture") return SynthKind::GaussianMixture;
    if (name == "ring") return SynthKind::Ring;
    if (name == "two_squares") return SynthKind::TwoSquares;
    throw Error("unknown synth kind '" + name + "'");
}

std::string synth_kind_name(SynthKind k) {
    switch (k) {
        case SynthKind::UniformRect: return "uniform_rect";
        case SynthKind::GaussianMixture: return "gaussian_mixture";
        case SynthKind::Ring: return "ring";
        case SynthKind::TwoSquares: return "two_squares";
    }
    throw Error("unknown synth kind");
}

SynthSpec SynthSpec::uniform_rect(Vector lo, Vector hi, std::size_t n, std::uint64_t seed) {
    SynthSpec s;
    s.kind = SynthKind::UniformRect;
    s.lo = std::move(lo);
    s.hi = std::move(hi);
    s.n = n;
    s.seed = seed;
    s.validate();
    return s;
}

SynthSpec SynthSpec::gaussian_mixture(std::vector<Vector> centers, std::vector<double> sigmas,
                                      std::vector<double> weights, std::size_t n, std::uint64_t seed) {
    SynthSpec s;
    s.kind = SynthKind::GaussianMixture;
    s.centers = std::move(centers);
    s.sigmas = std::move(sigmas);
    s.weights = std::move(weights);
    s.n = n;
    s.seed = seed;
    s.validate();
    return s;
}

SynthSpec SynthSpec::ring(Vector center, double inner, double outer, std::size_t n, std::uint64_t seed) {
    SynthSpec s;
    s.kind = SynthKind::Ring;
    s.center = std::move(center);
    s.inner = inner;
    s.outer = outer;
    s.n = n;
    s.seed = seed;
    s.validate();
    return s;
}

SynthSpec SynthSpec::two_squares(double side, double gap, std::size_t n, std::uint64_t seed) {
    SynthSpec s;
    s.kind = SynthKind::TwoSquares;
    s.side = side;
    s.gap = gap;
    s.n = n;
    s.seed = seed;
    s.validate();
    return s;
}

void SynthSpec::validate() const {
    if (n == 0) throw Error("synth: sample count must be positive");
    switch (kind) {
        case SynthKind::UniformRect: {
            if (lo.empty() || lo.size() != hi.size()) throw Error("synth: lo/hi bounds disagree");
            for (std::size_t j = 0; j < lo.size(); ++j) {
                if (!(lo[j] <= hi[j])) throw Error("synth: lo exceeds hi in column " + std::to_string(j));
            }
            break;
        }
        case SynthKind::GaussianMixture: {
            if (centers.empty()) throw Error("synth: mixture needs at least one component");
            if (sigmas.size() != centers.size() || weights.size() != centers.size()) {
                throw Error("synth: centers, sigmas and weights must align");
            }
            const std::size_t dim = centers.front().size();
            if (dim == 0) throw Error("synth: zero-dimensional centers");
            double wsum = 0.0;
            for (std::size_t i = 0; i < centers.size(); ++i) {
                if (centers[i].size() != dim) throw Error("synth: centers disagree on dimension");
                if (!(sigmas[i] > 0.0)) throw Error("synth: sigmas must be > 0");
                if (!(weights[i] > 0.0)) throw Error("synth: weights must be > 0");
                wsum += weights[i];
            }
            if (std::abs(wsum - 1.0) > 1e-9) throw Error("synth: weights must sum to 1");
            break;
        }
        case SynthKind::Ring: {
            if (center.size() != 2) throw Error("synth: ring is two-dimensional");
            if (!(inner >= 0.0) || !(outer > inner)) throw Error("synth: need 0 <= inner < outer");
            break;
        }
        case SynthKind::TwoSquares: {
            if (!(side > 0.0)) throw Error("synth: side must be > 0");
            if (!(gap >= 0.0)) throw Error("synth: gap must be >= 0");
            break;
        }
    }
}

Dataset generate(const SynthSpec& spec) {
    spec.validate();
    RandomStream rs(spec.seed);
    std::vector<Vector> rows;
    std::vector<int> labels;
    rows.reserve(spec.n);

    switch (spec.kind) {
        case SynthKind::UniformRect: {
            for (std::size_t i = 0; i < spec.n; ++i) {
                Vector v(spec.lo.size());
                for (std::size_t j = 0; j < v.size(); ++j) {
                    v[j] = rs.next_uniform(spec.lo[j], spec.hi[j]);
                }
                rows.push_back(std::move(v));
            }
            break;
        }
        case SynthKind::GaussianMixture: {
            labels.reserve(spec.n);
            for (std::size_t i = 0; i < spec.n; ++i) {
                const double u = rs.next_double();
                std::size_t comp = 0;
                double cum = 0.0;
                for (std::size_t c = 0; c < spec.weights.size(); ++c) {
                    cum += spec.weights[c];
                    if (u < cum) {
                        comp = c;
                        break;
                    }
                    comp = c;  // rounding can leave cum slightly below 1
                }
                Vector v(spec.centers[comp].size());
                for (std::size_t j = 0; j < v.size(); ++j) {
                    v[j] = spec.centers[comp][j] + spec.sigmas[comp] * rs.next_gaussian();
                }
                rows.push_back(std::move(v));
                labels.push_back(static_cast<int>(comp));
            }
            break;
        }
        case SynthKind::Ring: {
            // Radius via inverse-CDF in r^2 so density is uniform by area.
            for (std::size_t i = 0; i < spec.n; ++i) {
                const double ang = 2.0 * M_PI * rs.next_double();
                const double r2 = spec.inner * spec.inner +
                                  rs.next_double() * (spec.outer * spec.outer - spec.inner * spec.inner);
                const double r = std::sqrt(r2);
                rows.push_back({spec.center[0] + r * std::cos(ang), spec.center[1] + r * std::sin(ang)});
            }
            break;
        }
        case SynthKind::TwoSquares: {
            // Left square starts at x = 0, right square at x = side + gap.
            for (std::size_t i = 0; i < spec.n; ++i) {
                const double offset = rs.next_double() < 0.5 ? 0.0 : spec.side + spec.gap;
                rows.push_back({offset + rs.next_uniform(0.0, spec.side), rs.next_uniform(0.0, spec.side)});
            }
            break;
        }
    }
    return Dataset(std::move(rows), std::move(labels));
}

}  // namespace sonn
