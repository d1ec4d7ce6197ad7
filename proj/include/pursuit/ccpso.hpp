#pragma once

#include <cstddef>
#include <random>
#include <vector>

#include "pursuit/fitness.hpp"
#include "pursuit/grid_world.hpp"

namespace pursuit {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;
};

struct PSOParams {
    double inertia = 1.0;  // w
    double c1 = 2.0;
    double c2 = 2.0;
    int subpop_size = 20;             // real robot included
    int diversity_threshold = 5;      // redistribute below this many unique virtual cells
    int robot_stagnation_limit = 3;   // world steps a blocked, non-best robot may stand still
    int swarm_stagnation_limit = 10;  // world steps the whole swarm may stand still
    int vicinity_radius = 0;          // Chebyshev radius; 0 derives it from subpop_size

    int radius() const {
        return vicinity_radius > 0 ? vicinity_radius : default_vicinity_radius(subpop_size);
    }

    // Smallest radius whose square ring holds every virtual robot on a
    // distinct cell: (2r+1)^2 - 1 >= subpop_size - 1.
    static int default_vicinity_radius(int subpop_size);
};

struct Individual {
    GridPos position;
    StepVector velocity;  // always the quantized one-step form
    GridPos best_position;
    double best_fitness = 0.0;
    double fitness = 0.0;
};

struct Subpopulation {
    std::size_t index = 0;                // which predator this subpopulation drives
    std::vector<Individual> individuals;  // [0] is the real robot
    GridPos best_position;                // subpopulation global best
    double best_fitness = 0.0;
    int stagnant_steps = 0;  // consecutive world steps the real robot stood still

    Individual& real() { return individuals.front(); }
    const Individual& real() const { return individuals.front(); }
};

/// Quantizes a velocity to the unit step with the closest direction angle;
/// the zero vector stays zero. Ties fall to the earliest entry of the
/// neighborhood order.
StepVector nearest_unit_step(const Vec2& v);

/// Keeps a proposal inside the Chebyshev vicinity of the real robot: a
/// proposal outside the square is replaced by the ring cell angularly closest
/// to it (scanned counterclockwise from due east), and the result is clamped
/// into world bounds.
GridPos clamp_to_vicinity(const GridPos& proposal, const GridPos& real_pos, int radius,
                          const WorldState& world);

/// Recomputes every individual's fitness at its current position. With
/// reset_memory the personal bests are overwritten by the present state
/// (memory is not inherited across environment changes); otherwise they
/// update only on improvement. Refreshes the subpopulation best either way.
void evaluate_all(Subpopulation& sp, const WorldState& world, const FitnessParams& fp,
                  bool reset_memory);

/// Index of the first individual attaining the minimum fitness (0 = real
/// robot), copied into the stored subpopulation best.
std::size_t refresh_best(Subpopulation& sp);

/// Number of distinct virtual-robot positions.
int diversity(const Subpopulation& sp);

/// Scatters the virtual robots over distinct random cells of the real
/// robot's in-bounds vicinity (duplicates only when the clipped vicinity is
/// smaller than the population), zeroes velocities, resets memory and
/// re-evaluates.
void redistribute_virtual_robots(Subpopulation& sp, const WorldState& world,
                                 const PSOParams& pso, const FitnessParams& fp,
                                 std::mt19937& rng);

/// One PSO generation for virtual robot j: velocity update, quantization,
/// vicinity clamp, then a greedy move accepted only when not worse than the
/// parent.
void update_virtual_robot(Subpopulation& sp, std::size_t j, const WorldState& world,
                          const PSOParams& pso, const FitnessParams& fp, std::mt19937& rng);

/// Moves the real robot one quantized step toward the subpopulation best when
/// that step is legal, updating the world immediately; returns whether it
/// moved.
bool update_real_robot(Subpopulation& sp, WorldState& world, const FitnessParams& fp);

/// Forces one uniformly random legal step on a predator; false when it is
/// completely boxed in.
bool random_legal_step(WorldState& world, std::size_t predator, std::mt19937& rng);

/// Full per-step activation of one subpopulation: re-evaluation with memory
/// reset, virtual updates, diversity maintenance, real-robot move, and the
/// became-global-best / stagnation-noise branches. Returns whether the real
/// robot moved.
bool step_subpopulation(Subpopulation& sp, WorldState& world, const PSOParams& pso,
                        const FitnessParams& fp, std::mt19937& rng);

struct Swarm {
    std::vector<Subpopulation> subpops;
    FitnessParams fitness;   // uniformity mode may switch mid-episode
    int stagnant_steps = 0;  // consecutive world steps without progress
    double best_progress = 0.0;  // lowest summed subpopulation best seen so far
};

/// Summed subpopulation bests; the swarm-level progress measure.
double swarm_progress(const Swarm& swarm);

Swarm make_swarm(const WorldState& world, const PSOParams& pso, const FitnessParams& fp,
                 std::mt19937& rng);

/// Activates every subpopulation in ascending index order (the priority
/// schedule). When the swarm makes no progress for too many consecutive
/// steps while the prey is free, every real robot takes one random legal
/// step and the uniformity assessment switches to the axial/diagonal split
/// for the rest of the episode.
void step_swarm(Swarm& swarm, WorldState& world, const PSOParams& pso, std::mt19937& rng);

}  // namespace pursuit
