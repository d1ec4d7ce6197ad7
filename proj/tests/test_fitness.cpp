#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <random>

#include "oracles.hpp"
#include "pursuit/fitness.hpp"

using namespace pursuit;
using Catch::Matchers::WithinAbs;

namespace {

WorldState diamond_world() {
    // the four orthogonal neighbors of a centered prey
    WorldState world;
    world.width = 30;
    world.height = 30;
    world.prey = {10, 10};
    world.predators = {{9, 10}, {11, 10}, {10, 9}, {10, 11}};
    return world;
}

}  // namespace

TEST_CASE("convex hull shapes", "[fitness]") {
    SECTION("interior points are discarded") {
        const auto hull = convex_hull({{0, 0}, {4, 0}, {4, 4}, {0, 4}, {2, 2}});
        REQUIRE(hull.vertices.size() == 4);
        auto sorted = hull.vertices;
        std::sort(sorted.begin(), sorted.end());
        CHECK(sorted == std::vector<GridPos>{{0, 0}, {0, 4}, {4, 0}, {4, 4}});
    }
    SECTION("collinear input degenerates to its extreme segment") {
        const auto hull = convex_hull({{0, 0}, {1, 1}, {2, 2}});
        CHECK(hull.vertices == std::vector<GridPos>{{0, 0}, {2, 2}});
    }
    SECTION("single point, duplicates allowed") {
        const auto hull = convex_hull({{3, 3}, {3, 3}});
        CHECK(hull.vertices == std::vector<GridPos>{{3, 3}});
    }
}

TEST_CASE("containment score is ternary", "[fitness]") {
    const auto square = convex_hull({{0, 0}, {4, 0}, {4, 4}, {0, 4}});
    CHECK(containment_score({2, 2}, square) == 0.0);
    CHECK(containment_score({4, 2}, square) == 0.5);
    CHECK(containment_score({0, 0}, square) == 0.5);  // a vertex is on the boundary
    CHECK(containment_score({5, 5}, square) == 1.0);
    CHECK(containment_score({5, 0}, square) == 1.0);  // collinear with an edge, beyond it

    const auto segment = convex_hull({{0, 0}, {2, 2}});
    CHECK(containment_score({1, 1}, segment) == 0.5);
    CHECK(containment_score({3, 3}, segment) == 1.0);

    const auto point = convex_hull({{3, 3}});
    CHECK(containment_score({3, 3}, point) == 0.5);
    CHECK(containment_score({3, 4}, point) == 1.0);
}

TEST_CASE("containment matches the half-plane oracle", "[fitness]") {
    std::mt19937 rng(20240402);
    std::uniform_int_distribution<int> coord(0, 10);
    std::uniform_int_distribution<int> probe(-2, 12);
    std::uniform_int_distribution<int> count(1, 8);
    for (int trial = 0; trial < 1000; ++trial) {
        std::vector<GridPos> points(static_cast<std::size_t>(count(rng)));
        for (GridPos& p : points) p = {coord(rng), coord(rng)};
        GridPos q{probe(rng), probe(rng)};
        if (trial % 3 == 0) q = points[trial % points.size()];  // force boundary hits
        const double expected = oracles::containment_oracle(q, points);
        CAPTURE(q.x, q.y, points.size());
        REQUIRE(containment_score(q, convex_hull(points)) == expected);
    }
}

TEST_CASE("repel factor", "[fitness]") {
    const FitnessParams params;
    CHECK(repel_factor(1.0, params) == 1.0);
    CHECK(repel_factor(2.0, params) == 1.0);
    CHECK_THAT(repel_factor(0.0, params), WithinAbs(std::exp(2.0), 1e-9));
    CHECK_THAT(repel_factor(0.0, params), WithinAbs(7.38905609893065, 1e-9));
}

TEST_CASE("swarm expanse", "[fitness]") {
    const GridPos prey{10, 10};
    SECTION("uniform unit distances") {
        const std::vector<GridPos> ring = {{9, 10}, {11, 10}, {10, 9}, {10, 11}};
        CHECK_THAT(swarm_expanse(ring, prey), WithinAbs(1.0, 1e-12));
    }
    SECTION("hand-computed mean of distances 1, 2, 2, 5") {
        const std::vector<GridPos> robots = {{11, 10}, {12, 10}, {8, 10}, {15, 10}};
        CHECK_THAT(swarm_expanse(robots, prey), WithinAbs(2.5, 1e-12));
    }
    SECTION("single robot") {
        const std::vector<GridPos> one = {{13, 10}};
        CHECK_THAT(swarm_expanse(one, prey), WithinAbs(3.0, 1e-12));
    }
}

TEST_CASE("quadrant uniformity", "[fitness]") {
    const GridPos prey{10, 10};
    SECTION("one robot strictly inside each quadrant") {
        const std::vector<GridPos> robots = {{12, 12}, {8, 12}, {8, 8}, {12, 8}};
        CHECK(uniformity_quadrants(robots, prey) == 0.0);
    }
    SECTION("orthogonal neighbors sit on the split lines and spread evenly") {
        const std::vector<GridPos> robots = {{9, 10}, {11, 10}, {10, 9}, {10, 11}};
        const auto bins = quadrant_bins(robots, prey);
        CHECK(bins == std::array<double, 4>{1.0, 1.0, 1.0, 1.0});
        CHECK(uniformity_quadrants(robots, prey) == 0.0);
    }
    SECTION("all four robots in one quadrant") {
        const std::vector<GridPos> robots = {{12, 12}, {13, 12}, {12, 13}, {13, 13}};
        CHECK_THAT(uniformity_quadrants(robots, prey),
                   WithinAbs(std::sqrt(3.0), 1e-12));  // population std of [4,0,0,0]
    }
    SECTION("a robot on the prey cell spreads over all four bins") {
        const std::vector<GridPos> robots = {{10, 10}};
        CHECK(quadrant_bins(robots, prey) == std::array<double, 4>{0.25, 0.25, 0.25, 0.25});
    }
}

TEST_CASE("quadrant uniformity is invariant under the 8 grid symmetries", "[fitness]") {
    std::mt19937 rng(31337);
    const GridPos prey{0, 0};
    std::uniform_int_distribution<int> offset(-6, 6);
    using Transform = GridPos (*)(const GridPos&);
    const Transform transforms[8] = {
        [](const GridPos& p) { return GridPos{p.x, p.y}; },
        [](const GridPos& p) { return GridPos{-p.y, p.x}; },   // rot 90
        [](const GridPos& p) { return GridPos{-p.x, -p.y}; },  // rot 180
        [](const GridPos& p) { return GridPos{p.y, -p.x}; },   // rot 270
        [](const GridPos& p) { return GridPos{-p.x, p.y}; },   // mirror x
        [](const GridPos& p) { return GridPos{p.x, -p.y}; },   // mirror y
        [](const GridPos& p) { return GridPos{p.y, p.x}; },    // mirror diagonal
        [](const GridPos& p) { return GridPos{-p.y, -p.x}; },  // mirror anti-diagonal
    };
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<GridPos> robots(5);
        for (GridPos& r : robots) r = {offset(rng), offset(rng)};
        const double base = uniformity_quadrants(robots, prey);
        for (const auto& t : transforms) {
            std::vector<GridPos> moved;
            for (const GridPos& r : robots) moved.push_back(t(r));
            REQUIRE_THAT(uniformity_quadrants(moved, prey), WithinAbs(base, 1e-12));
        }
    }
}

TEST_CASE("bin mass is conserved", "[fitness]") {
    std::mt19937 rng(4242);
    const GridPos prey{0, 0};
    std::uniform_int_distribution<int> offset(-4, 4);
    for (int trial = 0; trial < 500; ++trial) {
        std::vector<GridPos> robots(7);
        for (GridPos& r : robots) r = {offset(rng), offset(rng)};

        const auto quad = quadrant_bins(robots, prey);
        const double quad_mass = quad[0] + quad[1] + quad[2] + quad[3];
        REQUIRE_THAT(quad_mass, WithinAbs(static_cast<double>(robots.size()), 1e-12));

        const auto grid = grid3x3_bins(robots, prey);
        double grid_mass = grid.center;
        for (double b : grid.axial) grid_mass += b;
        for (double b : grid.diagonal) grid_mass += b;
        REQUIRE_THAT(grid_mass, WithinAbs(static_cast<double>(robots.size()), 1e-12));
    }
}

TEST_CASE("axial/diagonal uniformity", "[fitness]") {
    const GridPos prey{10, 10};
    SECTION("one robot per axial bin") {
        const std::vector<GridPos> robots = {{12, 10}, {10, 13}, {7, 10}, {10, 9}};
        CHECK(uniformity_axial_diagonal(robots, prey) == 0.0);
    }
    SECTION("all four robots due north") {
        const std::vector<GridPos> robots = {{10, 11}, {10, 12}, {10, 13}, {10, 14}};
        CHECK_THAT(uniformity_axial_diagonal(robots, prey), WithinAbs(std::sqrt(3.0), 1e-12));
    }
    SECTION("one robot per strict quadrant") {
        const std::vector<GridPos> robots = {{12, 12}, {8, 12}, {8, 8}, {12, 8}};
        CHECK(uniformity_axial_diagonal(robots, prey) == 0.0);
    }
}

TEST_CASE("candidate evaluation composes the full solution", "[fitness]") {
    const FitnessParams params;
    const auto world = diamond_world();

    SECTION("the capture diamond evaluates to exactly 1") {
        const auto fb = evaluate_candidate(0, world.predators[0], world, params);
        CHECK(fb.repel == 1.0);
        CHECK(fb.closure == 0.0);
        CHECK_THAT(fb.expanse, WithinAbs(1.0, 1e-12));
        CHECK(fb.uniformity == 0.0);
        CHECK_THAT(fb.total, WithinAbs(1.0, 1e-9));
    }

    SECTION("stacking on another predator multiplies the total by e^2") {
        // candidate shares the cell of predator 2; components recomputed by
        // hand on the composed set {(10,9) x2, (11,10), (10,11)}
        const auto fb = evaluate_candidate(0, {10, 9}, world, params);
        CHECK_THAT(fb.repel, WithinAbs(std::exp(2.0), 1e-12));
        CHECK(fb.closure == 0.5);  // prey on the segment edge of the degenerate diamond
        CHECK_THAT(fb.expanse, WithinAbs(1.0, 1e-12));
        CHECK_THAT(fb.uniformity, WithinAbs(std::sqrt(0.125), 1e-12));
        CHECK_THAT(fb.total,
                   WithinAbs(std::exp(2.0) * (0.5 + 1.0 + std::sqrt(0.125)), 1e-9));
    }

    SECTION("a candidate that exposes the prey pays the closure unit") {
        WorldState southwest = world;
        southwest.predators = {{2, 2}, {3, 2}, {2, 3}, {9, 10}};
        // pulling the last predator into the cluster leaves the prey outside
        const auto fb = evaluate_candidate(3, {3, 3}, southwest, params);
        CHECK(fb.closure == 1.0);
        CHECK_THAT(fb.total, WithinAbs(fb.repel * (fb.closure + fb.expanse + fb.uniformity),
                                       1e-12));
    }

    SECTION("evaluation is pure") {
        const auto a = evaluate_candidate(2, {12, 12}, world, params);
        const auto b = evaluate_candidate(2, {12, 12}, world, params);
        CHECK(a.repel == b.repel);
        CHECK(a.closure == b.closure);
        CHECK(a.expanse == b.expanse);
        CHECK(a.uniformity == b.uniformity);
        CHECK(a.total == b.total);
    }

    SECTION("total stays nonnegative and factors per the composition rule") {
        std::mt19937 rng(99);
        std::uniform_int_distribution<int> coord(0, 29);
        for (int trial = 0; trial < 300; ++trial) {
            const GridPos candidate{coord(rng), coord(rng)};
            const std::size_t subpop = static_cast<std::size_t>(trial % 4);
            const auto fb = evaluate_candidate(subpop, candidate, world, params);
            REQUIRE(fb.total >= 0.0);
            REQUIRE(fb.repel >= 1.0);
            REQUIRE_THAT(fb.total,
                         WithinAbs(fb.repel * (fb.closure + fb.expanse + fb.uniformity),
                                   1e-12));
            double nnd = 1e9;
            for (std::size_t k = 0; k < world.predators.size(); ++k)
                if (k != subpop)
                    nnd = std::min(nnd, euclidean_distance(candidate, world.predators[k]));
            if (nnd >= params.d_min) {
                REQUIRE(fb.repel == 1.0);
                REQUIRE_THAT(fb.total,
                             WithinAbs(fb.closure + fb.expanse + fb.uniformity, 1e-12));
            }
        }
    }
}
