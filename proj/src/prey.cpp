#include "pursuit/prey.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace pursuit {

namespace {

// Sector index of an offset: 0..7 in the neighborhood order, boundaries
// belonging to the counterclockwise-next sector's lower edge.
int octant_of(int dx, int dy) {
    double deg = std::atan2(static_cast<double>(dy), static_cast<double>(dx)) * 180.0 /
                 std::numbers::pi;
    if (deg < 0) deg += 360.0;
    return static_cast<int>(std::floor((deg + 22.5) / 45.0)) % 8;
}

int neighborhood_index(const StepVector& s) {
    for (int k = 0; k < 8; ++k)
        if (kStepNeighborhood[k] == s) return k;
    return -1;
}

// Angular distance between two unit directions in 45-degree units.
int octant_gap(int a, int b) {
    const int d = std::abs(a - b) % 8;
    return std::min(d, 8 - d);
}

GridPos random_rule(const WorldState& world, std::mt19937& rng) {
    const auto targets = legal_step_targets(world, world.prey);
    if (targets.empty()) return world.prey;
    std::uniform_int_distribution<std::size_t> pick(0, targets.size() - 1);
    return targets[pick(rng)];
}

int boundary_contact(const WorldState& world, const GridPos& p) {
    return (p.x == 0) + (p.x == world.width - 1) + (p.y == 0) + (p.y == world.height - 1);
}

// Legal neighbor angularly closest to the heading; ties fall to the earliest
// neighborhood entry.
std::optional<GridPos> detour_target(const WorldState& world, const StepVector& heading) {
    const int want = neighborhood_index(heading);
    std::optional<GridPos> best;
    int best_gap = 9;
    for (int k = 0; k < 8; ++k) {
        const GridPos target = world.prey + kStepNeighborhood[k];
        if (!is_legal_step(world, world.prey, target)) continue;
        const int gap = octant_gap(k, want);
        if (gap < best_gap) {
            best_gap = gap;
            best = target;
        }
    }
    return best;
}

}  // namespace

std::array<int, 8> octant_counts(const WorldState& world) {
    std::array<int, 8> counts{};
    for (const GridPos& p : world.predators)
        ++counts[octant_of(p.x - world.prey.x, p.y - world.prey.y)];
    return counts;
}

StepVector select_escape_heading(const WorldState& world) {
    const auto counts = octant_counts(world);
    const int contact = boundary_contact(world, world.prey);
    // an escape direction leads back into the open field, away from every
    // wall; settle for merely shedding contact, then for staying in bounds,
    // only when the world leaves no better choice
    int best = -1;
    const auto scan = [&](int max_step_contact) {
        for (int k = 0; k < 8; ++k) {
            const GridPos step = world.prey + kStepNeighborhood[k];
            if (!world.in_bounds(step)) continue;
            if (boundary_contact(world, step) > max_step_contact) continue;
            if (best < 0 || counts[k] < counts[best]) best = k;
        }
    };
    scan(0);
    if (best < 0) scan(std::max(contact - 1, 0));
    if (best < 0) scan(4);
    if (best < 0) best = 0;
    return kStepNeighborhood[best];
}

void step_prey(PreyState& state, WorldState& world, std::mt19937& rng) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const double roll = unit(rng);
    if (state.kind == PreyKind::still) return;
    if (roll >= state.move_probability) return;

    switch (state.kind) {
        case PreyKind::still:
            return;
        case PreyKind::random_walk:
            world.prey = random_rule(world, rng);
            return;
        case PreyKind::linear: {
            if (!state.heading) state.heading = select_escape_heading(world);
            const GridPos target = world.prey + *state.heading;
            // blocked, by robot or wall: wait for the pursuers
            if (is_legal_step(world, world.prey, target)) world.prey = target;
            return;
        }
        case PreyKind::linear_smart: {
            if (!state.heading) state.heading = select_escape_heading(world);
            GridPos target = world.prey + *state.heading;
            if (!world.in_bounds(target)) {
                // shares the linear prey's wall rule: fresh escape direction
                state.heading = select_escape_heading(world);
                target = world.prey + *state.heading;
            }
            if (is_legal_step(world, world.prey, target)) {
                world.prey = target;
                return;
            }
            // a predator is in the way: sidestep through the legal neighbor
            // closest in angle, keeping the heading to resume later
            const auto detour = detour_target(world, *state.heading);
            if (detour) world.prey = *detour;
            return;
        }
    }
}

}  // namespace pursuit
