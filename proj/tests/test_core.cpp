#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "sonn/core.hpp"

#include <cmath>

using namespace sonn;

TEST_CASE("euclidean distance on known points") {
    CHECK(euclidean_distance({0, 0}, {0, 0}) == 0.0);
    CHECK(euclidean_distance({0, 0}, {3, 4}) == 5.0);
    CHECK(euclidean_distance({1, 2, 3}, {4, 6, 3}) == 5.0);  // sqrt(9 + 16)
    CHECK_THROWS_AS(euclidean_distance({1, 2}, {1, 2, 3}), Error);
}

TEST_CASE("distance symmetry and triangle inequality on random triples") {
    RandomStream rs(99);
    for (int trial = 0; trial < 10000; ++trial) {
        const std::size_t dim = 1 + rs.next_index(5);
        const Vector a = oracle::random_vector(dim, rs);
        const Vector b = oracle::random_vector(dim, rs);
        const Vector c = oracle::random_vector(dim, rs);
        const double ab = euclidean_distance(a, b);
        const double ba = euclidean_distance(b, a);
        REQUIRE(ab == ba);
        REQUIRE(euclidean_distance(a, c) <= ab + euclidean_distance(b, c) + 1e-12);
    }
}

TEST_CASE("find_winners picks the two closest with lowest-index ties") {
    CHECK(find_winners(std::vector<Vector>{{0, 0}, {10, 10}}, {1, 1}) ==
          std::pair<std::size_t, std::size_t>{0, 1});
    CHECK(find_winners(std::vector<Vector>{{0, 0}, {0, 0}, {5, 5}}, {0, 0}) ==
          std::pair<std::size_t, std::size_t>{0, 1});
    // d0 = d1 = sqrt(0.52): tie resolved toward index 0
    CHECK(find_winners(std::vector<Vector>{{1, 0}, {0, 1}, {2, 2}}, {0.6, 0.6}) ==
          std::pair<std::size_t, std::size_t>{0, 1});

    CHECK_THROWS_AS(find_winners(std::vector<Vector>{{0.0, 0.0}}, {0, 0}), Error);
    CHECK(find_winner(std::vector<Vector>{{0.0, 0.0}}, {3, 3}) == 0);
    CHECK_THROWS_AS(find_winner(std::vector<Vector>{}, {3, 3}), Error);
}

TEST_CASE("find_winners agrees with the brute-force scan") {
    RandomStream rs(431);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t dim = 1 + rs.next_index(4);
        const std::size_t units = 2 + rs.next_index(9);
        std::vector<Vector> codebook;
        for (std::size_t i = 0; i < units; ++i) {
            codebook.push_back(oracle::random_vector(dim, rs, 0.0, 1.0));
        }
        // exercise ties via duplicated entries
        if (trial % 3 == 0) codebook.push_back(codebook[rs.next_index(codebook.size())]);
        const Vector x = trial % 5 == 0 ? codebook[rs.next_index(codebook.size())]
                                        : oracle::random_vector(dim, rs, 0.0, 1.0);
        const auto got = find_winners(codebook, x);
        const auto want = oracle::two_nearest(codebook, x);
        REQUIRE(got == want);
    }
}

TEST_CASE("find_winners matches brute force exhaustively on tiny codebooks") {
    // every 3-entry codebook over a 3x3 coordinate set, probed with every
    // grid point; duplicates make tie-breaking load-bearing
    const double coords[] = {0.0, 0.5, 1.0};
    std::vector<Vector> points;
    for (double a : coords) {
        for (double b : coords) points.push_back({a, b});
    }
    for (std::size_t i = 0; i < points.size(); ++i) {
        for (std::size_t j = 0; j < points.size(); ++j) {
            for (std::size_t k = 0; k < points.size(); ++k) {
                const std::vector<Vector> codebook = {points[i], points[j], points[k]};
                for (const Vector& x : points) {
                    REQUIRE(find_winners(codebook, x) == oracle::two_nearest(codebook, x));
                    REQUIRE(find_winner(codebook, x) == oracle::nearest(codebook, x));
                }
            }
        }
    }
}

TEST_CASE("decay schedules hit their endpoints") {
    const DecaySchedule lin = DecaySchedule::linear(1.0, 0.0, 10);
    CHECK(lin.value(0) == 1.0);
    CHECK(lin.value(5) == 0.5);
    CHECK(lin.value(10) == 0.0);

    const DecaySchedule expo = DecaySchedule::exponential(1.0, 0.01, 100);
    CHECK(expo.value(0) == 1.0);
    CHECK(expo.value(50) == doctest::Approx(0.1).epsilon(1e-12));
    CHECK(expo.value(100) == 0.01);

    CHECK_THROWS_AS(lin.value(11), Error);
    CHECK_THROWS_AS(DecaySchedule::exponential(1.0, 0.0, 10), Error);
    CHECK_THROWS_AS(DecaySchedule::linear(0.5, 0.8, 10), Error);
    CHECK_THROWS_AS(DecaySchedule::linear(1.0, 0.0, 0), Error);
}

TEST_CASE("decay schedules never increase") {
    for (const DecaySchedule& s : {DecaySchedule::linear(0.9, 0.1, 137),
                                   DecaySchedule::exponential(2.5, 0.004, 137),
                                   DecaySchedule::linear(1.0, 1.0, 7)}) {
        for (std::uint64_t t = 0; t < s.total_steps(); ++t) {
            REQUIRE(s.value(t + 1) <= s.value(t));
        }
    }
}

TEST_CASE("draw_sample is uniform and reproducible") {
    const Dataset single({{7.0, 7.0}});
    RandomStream rs(3);
    CHECK(draw_sample(single, rs) == Vector{7.0, 7.0});

    const Dataset four({{0.0}, {1.0}, {2.0}, {3.0}});
    RandomStream a(42), b(42);
    for (int i = 0; i < 1000; ++i) {
        REQUIRE(draw_sample(four, a) == draw_sample(four, b));
    }

    // 1e5 draws: each row within 1% of the ideal 0.25 share
    RandomStream freq_rs(42);
    std::size_t counts[4] = {0, 0, 0, 0};
    const int draws = 100000;
    for (int i = 0; i < draws; ++i) {
        counts[static_cast<std::size_t>(draw_sample(four, freq_rs)[0])] += 1;
    }
    for (std::size_t r = 0; r < 4; ++r) {
        const double f = static_cast<double>(counts[r]) / draws;
        REQUIRE(std::abs(f - 0.25) < 0.01 * 0.25);
    }
}

TEST_CASE("random streams replay bit-exactly from a seed") {
    RandomStream a(123456), b(123456);
    for (int i = 0; i < 2000; ++i) {
        REQUIRE(a.next_u64() == b.next_u64());
    }
    RandomStream c(9), d(9);
    for (int i = 0; i < 2000; ++i) {
        REQUIRE(c.next_double() == d.next_double());
        REQUIRE(c.next_gaussian() == d.next_gaussian());
        REQUIRE(c.next_index(17) == d.next_index(17));
    }
}

TEST_CASE("dataset construction enforces shape") {
    CHECK_THROWS_AS(Dataset(std::vector<Vector>{}), Error);
    CHECK_THROWS_AS(Dataset({{1.0, 2.0}, {1.0}}), Error);
    CHECK_THROWS_AS(Dataset({{1.0, std::nan("")}}), Error);
    CHECK_THROWS_AS(Dataset({{1.0}, {2.0}}, {0, 1, 2}), Error);
    const Dataset ok({{1.0, 2.0}, {3.0, 4.0}}, {0, 1});
    CHECK(ok.dim == 2);
    CHECK(ok.has_labels());
}

TEST_CASE("bounding box and uniform draw stay inside it") {
    const Dataset d({{0.0, 5.0}, {2.0, -1.0}, {1.0, 3.0}});
    const BoundingBox box = bounding_box(d);
    CHECK(box.lo == Vector{0.0, -1.0});
    CHECK(box.hi == Vector{2.0, 5.0});
    RandomStream rs(8);
    for (int i = 0; i < 500; ++i) {
        const Vector v = uniform_in_box(box, rs);
        REQUIRE(v[0] >= 0.0);
        REQUIRE(v[0] < 2.0);
        REQUIRE(v[1] >= -1.0);
        REQUIRE(v[1] < 5.0);
    }
}
