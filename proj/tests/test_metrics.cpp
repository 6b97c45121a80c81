#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "sonn/metrics.hpp"

#include <algorithm>
#include <set>

using namespace sonn;

namespace {

SomGrid line_grid(std::vector<Vector> codebook) {
    SomGrid g;
    g.width = codebook.size();
    g.height = 1;
    g.topology = GridTopology::Rectangular;
    g.codebook = std::move(codebook);
    return g;
}

}  // namespace

TEST_CASE("quantization error on known configurations") {
    const Dataset exact({{0.0, 0.0}, {1.0, 1.0}});
    const std::vector<Vector> cb = {{0.0, 0.0}, {1.0, 1.0}};
    CHECK(quantization_error(cb, exact) == 0.0);

    const Dataset two({{0.0, 3.0}, {0.0, 4.0}});
    const std::vector<Vector> origin = {{0.0, 0.0}};
    CHECK(quantization_error(origin, two) == 3.5);           // mean of 3 and 4
    CHECK(quantization_error(origin, two, true) == 12.5);    // mean of 9 and 16

    CHECK_THROWS_AS(quantization_error(std::vector<Vector>{}, two), Error);
}

TEST_CASE("quantization error and assignments match the brute-force oracle") {
    RandomStream rs(57);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t dim = 1 + rs.next_index(5);
        std::vector<Vector> cb;
        const std::size_t units = 1 + rs.next_index(20);
        for (std::size_t i = 0; i < units; ++i) cb.push_back(oracle::random_vector(dim, rs));
        std::vector<Vector> rows;
        const std::size_t n = 1 + rs.next_index(50);
        for (std::size_t i = 0; i < n; ++i) rows.push_back(oracle::random_vector(dim, rs));
        const Dataset d(rows);

        const auto got = assignments(cb, d);
        const auto want = oracle::assign_all(cb, rows);
        REQUIRE(got == want);
        REQUIRE(quantization_error(cb, d) == oracle::mean_bmu_distance(cb, rows));
    }
}

TEST_CASE("quantization error ignores codebook order when distances are distinct") {
    const Dataset d({{0.1, 0.0}, {3.9, 0.0}, {8.2, 0.0}});
    std::vector<Vector> cb = {{0.0, 0.0}, {4.0, 0.0}, {8.0, 0.0}};
    const double base = quantization_error(cb, d);
    std::reverse(cb.begin(), cb.end());
    CHECK(quantization_error(cb, d) == base);
}

TEST_CASE("topographic error on ordered and shuffled 1-D maps") {
    // two units are always adjacent
    const SomGrid tiny = line_grid({{0.0}, {9.0}});
    const Dataset any({{0.2}, {5.0}, {8.8}});
    CHECK(topographic_error(tiny, any) == 0.0);

    // ordered map on sorted data: first and second BMU are neighbors
    const SomGrid ordered = line_grid({{0.0}, {1.0}, {2.0}, {3.0}, {4.0}});
    std::vector<Vector> rows;
    for (int i = 0; i < 40; ++i) rows.push_back({i * 0.1});
    const Dataset sorted(rows);
    CHECK(topographic_error(ordered, sorted) == 0.0);

    // scrambling the codebook breaks adjacency for part of the inputs
    const SomGrid shuffled = line_grid({{0.0}, {2.0}, {4.0}, {1.0}, {3.0}});
    CHECK(topographic_error(shuffled, sorted) > 0.0);

    const SomGrid single = line_grid({{0.0}});
    CHECK_THROWS_AS(topographic_error(single, sorted), Error);
}

TEST_CASE("assignments on degenerate codebooks") {
    const Dataset d({{0.1, 0.0}, {5.0, 2.0}, {-3.0, 1.0}});
    CHECK(assignments(std::vector<Vector>{{0.0, 0.0}}, d) ==
          std::vector<std::size_t>{0, 0, 0});

    // inputs sitting exactly on distinct codebook vectors map to them
    const std::vector<Vector> cb = {{0.1, 0.0}, {5.0, 2.0}, {-3.0, 1.0}};
    CHECK(assignments(cb, d) == std::vector<std::size_t>{0, 1, 2});
}

TEST_CASE("dead unit accounting") {
    const Dataset d(std::vector<Vector>{{0.0}, {1.0}});
    CHECK(dead_units(std::vector<Vector>{{0.5}}, d) == 0);
    CHECK(dead_units(std::vector<Vector>{{0.0}, {1.0}, {500.0}}, d) >= 1);

    RandomStream rs(3);
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<Vector> cb;
        const std::size_t units = 1 + rs.next_index(12);
        for (std::size_t i = 0; i < units; ++i) cb.push_back(oracle::random_vector(2, rs));
        std::vector<Vector> rows;
        for (int i = 0; i < 25; ++i) rows.push_back(oracle::random_vector(2, rs));
        const Dataset data(rows);
        const auto assigned = assignments(cb, data);
        const std::set<std::size_t> winners(assigned.begin(), assigned.end());
        REQUIRE(dead_units(cb, data) == cb.size() - winners.size());
    }
}

TEST_CASE("metric report carries topographic error only for grids") {
    const Dataset d({{0.0}, {1.0}, {2.0}});
    const MetricReport flat = metric_report(std::vector<Vector>{{0.0}, {2.0}}, d);
    CHECK_FALSE(flat.topographic_error.has_value());
    CHECK(flat.n_units == 2);
    CHECK(flat.n_inputs == 3);

    const MetricReport grid = metric_report(line_grid({{0.0}, {2.0}}), d);
    CHECK(grid.topographic_error.has_value());
}
