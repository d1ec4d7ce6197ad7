#include "pursuit/grid_world.hpp"

#include <algorithm>

namespace pursuit {

bool WorldState::occupied(const GridPos& cell) const {
    if (cell == prey) return true;
    return std::find(predators.begin(), predators.end(), cell) != predators.end();
}

namespace {

// Occupancy as seen from `self`: a robot never obstructs itself.
bool occupied_excluding(const WorldState& world, const GridPos& cell, const GridPos& self) {
    return cell != self && world.occupied(cell);
}

}  // namespace

bool is_legal_step(const WorldState& world, const GridPos& from, const GridPos& to) {
    const int dx = to.x - from.x;
    const int dy = to.y - from.y;
    if (std::abs(dx) > 1 || std::abs(dy) > 1 || (dx == 0 && dy == 0)) return false;
    if (!world.in_bounds(to)) return false;
    if (occupied_excluding(world, to, from)) return false;
    if (dx != 0 && dy != 0) {
        // no corner cutting past an orthogonal obstacle
        if (occupied_excluding(world, {from.x + dx, from.y}, from)) return false;
        if (occupied_excluding(world, {from.x, from.y + dy}, from)) return false;
    }
    return true;
}

std::vector<GridPos> legal_step_targets(const WorldState& world, const GridPos& from) {
    std::vector<GridPos> targets;
    targets.reserve(8);
    for (const StepVector& s : kStepNeighborhood) {
        const GridPos to = from + s;
        if (is_legal_step(world, from, to)) targets.push_back(to);
    }
    return targets;
}

bool is_captured(const WorldState& world) {
    static constexpr StepVector kOrthogonal[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    for (const StepVector& s : kOrthogonal) {
        const GridPos n = world.prey + s;
        if (!world.in_bounds(n)) continue;
        if (std::find(world.predators.begin(), world.predators.end(), n) ==
            world.predators.end())
            return false;
    }
    return true;
}

}  // namespace pursuit
