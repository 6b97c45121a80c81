#pragma once

#include "sonn/core.hpp"

namespace sonn {

enum class GridTopology { Rectangular, Hexagonal };

GridTopology parse_topology(const std::string& name);
std::string topology_name(GridTopology t);

// Fixed two-dimensional lattice of units. Unit i sits at grid cell
// (i % width, i / width); hexagonal grids use the odd-r layout (odd
// rows shifted half a cell to the right).
struct SomGrid {
    std::size_t width = 0;
    std::size_t height = 0;
    GridTopology topology = GridTopology::Rectangular;
    std::vector<Vector> codebook;  // width * height reference vectors

    std::size_t units() const { return width * height; }
};

struct SomParams {
    DecaySchedule alpha;   // learning rate schedule
    DecaySchedule radius;  // neighborhood radius schedule, grid-distance units
    std::uint64_t total_steps;

    SomParams(DecaySchedule alpha_in, DecaySchedule radius_in, std::uint64_t total_steps_in);
};

// Grid-space distance between units a and b: Chebyshev for rectangular
// grids, hex ring distance (via axial coordinates) for hexagonal ones.
// Integer-valued for both.
int grid_distance(const SomGrid& g, std::size_t a, std::size_t b);

// Indices of all units within `radius` of unit c in grid space,
// including c itself. Ascending order.
std::vector<std::size_t> grid_neighbors(const SomGrid& g, std::size_t c, double radius);

// Codebook drawn uniformly inside the per-coordinate bounding box of d.
SomGrid som_init(std::size_t width, std::size_t height, GridTopology topology,
                 const Dataset& d, RandomStream& rs);

// One presentation: find the BMU of x, move every unit within the
// radius at step t toward x by alpha(t), leave all others untouched.
void som_train_step(SomGrid& g, const SomParams& p, const Vector& x, std::uint64_t t);

// total_steps presentations of randomly drawn samples.
SomGrid som_train(const Dataset& d, const SomParams& p, SomGrid g, RandomStream& rs);

}  // namespace sonn
