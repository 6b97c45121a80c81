#include "sonn/som.hpp"

#include <cmath>
#include <cstdlib>

namespace sonn {

GridTopology parse_topology(const std::string& name) {
    if (name == "rectangular") return GridTopology::Rectangular;
    if (name == "hexagonal") return GridTopology::Hexagonal;
    throw Error("unknown grid topology '" + name + "' (expected rectangular or hexagonal)");
}

std::string topology_name(GridTopology t) {
    return t == GridTopology::Rectangular ? "rectangular" : "hexagonal";
}

SomParams::SomParams(DecaySchedule alpha_in, DecaySchedule radius_in, std::uint64_t total_steps_in)
    : alpha(alpha_in), radius(radius_in), total_steps(total_steps_in) {
    if (!(alpha.initial() > 0.0) || alpha.initial() > 1.0) {
        throw Error("som: alpha initial must be in (0, 1]");
    }
    // total_steps == 0 never consults the schedules, so any horizon is fine
    if (total_steps > 0 &&
        (alpha.total_steps() != total_steps || radius.total_steps() != total_steps)) {
        throw Error("som: schedules must share the training horizon");
    }
}

namespace {

void check_unit(const SomGrid& g, std::size_t c) {
    if (c >= g.units()) {
        throw Error("som: unit index " + std::to_string(c) + " out of range");
    }
}

}  // namespace

int grid_distance(const SomGrid& g, std::size_t a, std::size_t b) {
    check_unit(g, a);
    check_unit(g, b);
    const long ax = static_cast<long>(a % g.width), ay = static_cast<long>(a / g.width);
    const long bx = static_cast<long>(b % g.width), by = static_cast<long>(b / g.width);
    if (g.topology == GridTopology::Rectangular) {
        return static_cast<int>(std::max(std::labs(ax - bx), std::labs(ay - by)));
    }
    // odd-r offset -> axial coordinates
    const long aq = ax - (ay - (ay & 1)) / 2;
    const long bq = bx - (by - (by & 1)) / 2;
    const long dq = aq - bq, dr = ay - by;
    return static_cast<int>((std::labs(dq) + std::labs(dr) + std::labs(dq + dr)) / 2);
}

std::vector<std::size_t> grid_neighbors(const SomGrid& g, std::size_t c, double radius) {
    check_unit(g, c);
    if (radius < 0.0) throw Error("som: negative neighborhood radius");
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < g.units(); ++i) {
        if (static_cast<double>(grid_distance(g, c, i)) <= radius) out.push_back(i);
    }
    return out;
}

SomGrid som_init(std::size_t width, std::size_t height, GridTopology topology,
                 const Dataset& d, RandomStream& rs) {
    if (width == 0 || height == 0) throw Error("som: grid must have at least one unit");
    const BoundingBox box = bounding_box(d);
    SomGrid g;
    g.width = width;
    g.height = height;
    g.topology = topology;
    g.codebook.reserve(width * height);
    for (std::size_t i = 0; i < width * height; ++i) {
        g.codebook.push_back(uniform_in_box(box, rs));
    }
    return g;
}

void som_train_step(SomGrid& g, const SomParams& p, const Vector& x, std::uint64_t t) {
    if (x.size() != g.codebook.front().size()) {
        throw Error("som: sample dimension does not match the codebook");
    }
    const double alpha = p.alpha.value(t);
    const double radius = p.radius.value(t);
    const std::size_t c = find_winner(g.codebook, x);
    for (std::size_t i : grid_neighbors(g, c, radius)) {
        move_toward(g.codebook[i], x, alpha);
    }
}

SomGrid som_train(const Dataset& d, const SomParams& p, SomGrid g, RandomStream& rs) {
    if (g.codebook.empty() || g.codebook.front().size() != d.dim) {
        throw Error("som: grid dimension does not match the dataset");
    }
    for (std::uint64_t t = 0; t < p.total_steps; ++t) {
        const Vector& x = draw_sample(d, rs);
        som_train_step(g, p, x, t);
    }
    return g;
}

}  // namespace sonn
