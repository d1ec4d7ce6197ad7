#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>
#include <set>

#include "oracles.hpp"
#include "pursuit/grid_world.hpp"

using namespace pursuit;

namespace {

WorldState make_world(int w, int h, GridPos prey, std::vector<GridPos> predators) {
    WorldState world;
    world.width = w;
    world.height = h;
    world.prey = prey;
    world.predators = std::move(predators);
    return world;
}

WorldState random_world(std::mt19937& rng) {
    std::uniform_int_distribution<int> dim(3, 12);
    WorldState world;
    world.width = dim(rng);
    world.height = dim(rng);
    std::uniform_int_distribution<int> px(0, world.width - 1);
    std::uniform_int_distribution<int> py(0, world.height - 1);
    world.prey = {px(rng), py(rng)};
    std::uniform_int_distribution<int> count(0, 6);
    const int n = count(rng);
    while (static_cast<int>(world.predators.size()) < n) {
        GridPos p{px(rng), py(rng)};
        // bias half the predators toward the prey's orthogonal ring so that
        // captures actually occur in the sample
        if (world.predators.size() % 2 == 0) {
            constexpr StepVector orth[4] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
            std::uniform_int_distribution<int> four(0, 3);
            p = world.prey + orth[four(rng)];
        }
        if (!world.in_bounds(p) || world.occupied(p)) continue;
        world.predators.push_back(p);
    }
    return world;
}

}  // namespace

TEST_CASE("euclidean distance", "[grid_world]") {
    CHECK(euclidean_distance({0, 0}, {3, 4}) == 5.0);
    CHECK(euclidean_distance({2, 2}, {2, 2}) == 0.0);
    CHECK_THAT(euclidean_distance({0, 0}, {1, 1}),
               Catch::Matchers::WithinAbs(1.41421356237, 1e-9));
}

TEST_CASE("legal step targets", "[grid_world]") {
    SECTION("corner of an empty world") {
        const auto world = make_world(30, 30, {20, 20}, {});
        auto targets = legal_step_targets(world, {0, 0});
        std::sort(targets.begin(), targets.end());
        CHECK(targets == std::vector<GridPos>{{0, 1}, {1, 0}, {1, 1}});
    }

    SECTION("diagonal blocked by an orthogonal obstacle") {
        const auto world = make_world(30, 30, {0, 0}, {{6, 5}, {5, 6}});
        const auto targets = legal_step_targets(world, {5, 5});
        CHECK(std::find(targets.begin(), targets.end(), GridPos{6, 6}) == targets.end());
        // one blocking orthogonal neighbor already forbids the diagonal
        const auto world_one = make_world(30, 30, {0, 0}, {{6, 5}});
        const auto targets_one = legal_step_targets(world_one, {5, 5});
        CHECK(std::find(targets_one.begin(), targets_one.end(), GridPos{6, 6}) ==
              targets_one.end());
        CHECK(std::find(targets_one.begin(), targets_one.end(), GridPos{4, 6}) !=
              targets_one.end());
    }

    SECTION("unobstructed interior cell has all 8 neighbors") {
        const auto world = make_world(30, 30, {0, 0}, {{25, 25}});
        CHECK(legal_step_targets(world, {10, 10}).size() == 8);
    }

    SECTION("the prey does not obstruct itself") {
        const auto world = make_world(30, 30, {10, 10}, {{12, 12}});
        const auto targets = legal_step_targets(world, world.prey);
        CHECK(targets.size() == 8);
    }
}

TEST_CASE("legal step targets: random-world properties", "[grid_world]") {
    std::mt19937 rng(20240811);
    for (int trial = 0; trial < 300; ++trial) {
        const auto world = random_world(rng);
        std::vector<GridPos> movers = world.predators;
        movers.push_back(world.prey);
        for (const GridPos& from : movers) {
            for (const GridPos& t : legal_step_targets(world, from)) {
                CAPTURE(world.width, world.height, from.x, from.y, t.x, t.y);
                REQUIRE(world.in_bounds(t));
                REQUIRE(chebyshev_distance(from, t) == 1);
                REQUIRE((!world.occupied(t) || t == from));
            }
        }
    }
}

TEST_CASE("capture predicate", "[grid_world]") {
    SECTION("interior capture needs all four orthogonal neighbors") {
        const auto full =
            make_world(30, 30, {10, 10}, {{9, 10}, {11, 10}, {10, 9}, {10, 11}});
        CHECK(is_captured(full));

        const auto missing = make_world(30, 30, {10, 10}, {{9, 10}, {11, 10}, {10, 9}});
        CHECK_FALSE(is_captured(missing));
    }

    SECTION("corner capture needs only the in-bounds neighbors") {
        const auto corner = make_world(30, 30, {0, 0}, {{1, 0}, {0, 1}});
        CHECK(is_captured(corner));
    }
}

TEST_CASE("capture agrees with neighbor enumeration on random worlds", "[grid_world]") {
    std::mt19937 rng(7);
    int captures_seen = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        const auto world = random_world(rng);
        const bool expected = oracles::capture_oracle(world);
        captures_seen += expected ? 1 : 0;
        CAPTURE(world.width, world.height, world.prey.x, world.prey.y);
        REQUIRE(is_captured(world) == expected);
    }
    CHECK(captures_seen > 0);  // the sample must exercise the positive branch
}

TEST_CASE("a captured prey has no legal orthogonal step", "[grid_world]") {
    std::mt19937 rng(99);
    int checked = 0;
    for (int trial = 0; trial < 2000 && checked < 50; ++trial) {
        const auto world = random_world(rng);
        if (!is_captured(world)) continue;
        ++checked;
        for (const GridPos& t : legal_step_targets(world, world.prey)) {
            const bool orthogonal = (t.x == world.prey.x) != (t.y == world.prey.y);
            REQUIRE_FALSE(orthogonal);
        }
    }
    CHECK(checked > 0);
}
