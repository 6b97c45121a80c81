#pragma once

#include "sonn/core.hpp"

namespace sonn {

enum class SynthKind { UniformRect, GaussianMixture, Ring, TwoSquares };

SynthKind parse_synth_kind(const std::string& name);
std::string synth_kind_name(SynthKind k);

// Deterministic synthetic-distribution generator. Same spec (including
// seed) always yields a bit-identical dataset.
struct SynthSpec {
    SynthKind kind = SynthKind::UniformRect;
    std::size_t n = 0;
    std::uint64_t seed = 0;

    // uniform_rect
    Vector lo;
    Vector hi;

    // gaussian_mixture (isotropic components; component index becomes the label)
    std::vector<Vector> centers;
    std::vector<double> sigmas;
    std::vector<double> weights;

    // ring (2-D annulus, uniform by area)
    Vector center{0.0, 0.0};
    double inner = 0.0;
    double outer = 1.0;

    // two_squares (two axis-aligned squares of `side`, `gap` apart in x)
    double side = 1.0;
    double gap = 3.0;

    static SynthSpec uniform_rect(Vector lo, Vector hi, std::size_t n, std::uint64_t seed);
    static SynthSpec gaussian_mixture(std::vector<Vector> centers, std::vector<double> sigmas,
                                      std::vector<double> weights, std::size_t n, std::uint64_t seed);
    static SynthSpec ring(Vector center, double inner, double outer, std::size_t n, std::uint64_t seed);
    static SynthSpec two_squares(double side, double gap, std::size_t n, std::uint64_t seed);

    void validate() const;
};

Dataset generate(const SynthSpec& spec);

}  // namespace sonn
