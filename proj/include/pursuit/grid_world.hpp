#pragma once

#include <cmath>
#include <compare>
#include <cstdlib>
#include <vector>

namespace pursuit {

struct GridPos {
    int x = 0;
    int y = 0;

    auto operator<=>(const GridPos&) const = default;
};

// One-cell move: a member of the 8-neighborhood, or (0,0) for "stay".
struct StepVector {
    int dx = 0;
    int dy = 0;

    auto operator<=>(const StepVector&) const = default;
};

// The 8 unit steps in counterclockwise order starting due east. The listed
// order doubles as the tie-break order wherever directions compete.
inline constexpr StepVector kStepNeighborhood[8] = {
    {1, 0}, {1, 1}, {0, 1}, {-1, 1}, {-1, 0}, {-1, -1}, {0, -1}, {1, -1}};

inline GridPos operator+(const GridPos& p, const StepVector& s) {
    return {p.x + s.dx, p.y + s.dy};
}

inline double euclidean_distance(const GridPos& a, const GridPos& b) {
    const double dx = a.x - b.x;
    const double dy = a.y - b.y;
    return std::sqrt(dx * dx + dy * dy);
}

inline int chebyshev_distance(const GridPos& a, const GridPos& b) {
    return std::max(std::abs(a.x - b.x), std::abs(a.y - b.y));
}

/// Bounded grid occupancy. predators[i] is the real robot driven by
/// subpopulation i; virtual robots never appear here and never block anyone.
struct WorldState {
    int width = 0;
    int height = 0;
    GridPos prey;
    std::vector<GridPos> predators;

    bool in_bounds(const GridPos& p) const {
        return p.x >= 0 && p.x < width && p.y >= 0 && p.y < height;
    }

    bool occupied(const GridPos& cell) const;
};

// One-step legality for the robot standing at `from`. The mover is identified
// by its cell: real positions are pairwise distinct, so excluding `from` from
// the occupancy set excludes exactly the mover. A diagonal move is refused
// when either flanking orthogonal cell is occupied (no corner cutting), and
// the border is a hard wall.
bool is_legal_step(const WorldState& world, const GridPos& from, const GridPos& to);

std::vector<GridPos> legal_step_targets(const WorldState& world, const GridPos& from);

/// True when every in-bounds orthogonal neighbor of the prey is held by a
/// real predator.
bool is_captured(const WorldState& world);

}  // namespace pursuit
