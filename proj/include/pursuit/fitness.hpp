#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "pursuit/grid_world.hpp"

namespace pursuit {

/// Convex hull of planar grid points, vertices counterclockwise. Degenerate
/// inputs collapse to a single point or a two-vertex segment.
struct ConvexHull {
    std::vector<GridPos> vertices;
};

ConvexHull convex_hull(std::vector<GridPos> points);

/// Ternary containment: 0 strictly inside, 0.5 on the boundary (anywhere on a
/// degenerate segment, or coincident with a degenerate point), 1 outside.
/// Exact integer arithmetic throughout.
double containment_score(const GridPos& p, const ConvexHull& hull);

enum class UniformityMode { quadrants, axial_diagonal };

struct FitnessParams {
    double d_min = 1.0;  // collision radius of the repel factor
    UniformityMode uniformity = UniformityMode::quadrants;
};

// Lower is better; total = repel * (closure + expanse + uniformity).
struct FitnessBreakdown {
    double repel = 1.0;
    double closure = 0.0;
    double expanse = 0.0;
    double uniformity = 0.0;
    double total = 0.0;
};

/// exp(-2 (nnd - d_min)) below the collision radius, 1 otherwise.
double repel_factor(double nearest_neighbor_distance, const FitnessParams& params);

/// Mean Euclidean distance of the composed predator set to the prey.
double swarm_expanse(std::span<const GridPos> robots, const GridPos& prey);

// Robot mass per quadrant around the prey (order NE, NW, SW, SE), quadrants
// split by the horizontal and vertical lines through the prey. A robot on a
// split line contributes 0.5 to each adjacent bin; a robot on the prey's own
// cell contributes 0.25 to every bin.
std::array<double, 4> quadrant_bins(std::span<const GridPos> robots, const GridPos& prey);

// 3x3 split whose middle bands are exactly the prey's row and column.
struct GridBins3x3 {
    std::array<double, 4> axial;     // E, N, W, S of the prey
    std::array<double, 4> diagonal;  // NE, NW, SW, SE strict quadrants
    double center = 0.0;             // robots sharing the prey's cell
};
GridBins3x3 grid3x3_bins(std::span<const GridPos> robots, const GridPos& prey);

// Population standard deviation of the quadrant bins.
double uniformity_quadrants(std::span<const GridPos> robots, const GridPos& prey);

// std of the axial bins plus std of the diagonal bins; the center cell
// belongs to neither term.
double uniformity_axial_diagonal(std::span<const GridPos> robots, const GridPos& prey);

/// Fitness of placing `candidate` as predator `subpop` while every other real
/// predator stays where it is. Pure in (candidate, world, params).
FitnessBreakdown evaluate_candidate(std::size_t subpop, const GridPos& candidate,
                                    const WorldState& world, const FitnessParams& params);

}  // namespace pursuit
