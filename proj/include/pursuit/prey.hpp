#pragma once

#include <array>
#include <optional>
#include <random>

#include "pursuit/grid_world.hpp"

namespace pursuit {

enum class PreyKind { still, random_walk, linear, linear_smart };

struct PreyState {
    PreyKind kind = PreyKind::still;
    std::optional<StepVector> heading;  // escape direction of the linear variants
    double move_probability = 0.9;
};

/// Real-predator counts per 45-degree sector around each unit direction,
/// sectors half-open toward counterclockwise, indexed like the neighborhood
/// order.
std::array<int, 8> octant_counts(const WorldState& world);

/// A direction whose sector holds the fewest predators, considering only
/// directions whose first step stays inside the world; ties fall to the
/// earliest entry of the neighborhood order.
StepVector select_escape_heading(const WorldState& world);

/// Advances the prey one world step (mutating world.prey and the heading).
/// One uniform draw is consumed every call regardless of kind so that the
/// random stream stays aligned; with probability 1 - move_probability the
/// prey stays put.
void step_prey(PreyState& state, WorldState& world, std::mt19937& rng);

}  // namespace pursuit
