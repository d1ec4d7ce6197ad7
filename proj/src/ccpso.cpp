#include "pursuit/ccpso.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <limits>
#include <numbers>

namespace pursuit {

namespace {

double angle_distance(double a, double b) {
    double d = std::fmod(a - b, 2.0 * std::numbers::pi);
    if (d > std::numbers::pi) d -= 2.0 * std::numbers::pi;
    if (d < -std::numbers::pi) d += 2.0 * std::numbers::pi;
    return std::fabs(d);
}

double direction_angle(int dx, int dy) {
    return std::atan2(static_cast<double>(dy), static_cast<double>(dx));
}

}  // namespace

int PSOParams::default_vicinity_radius(int subpop_size) {
    int r = 1;
    while ((2 * r + 1) * (2 * r + 1) - 1 < subpop_size - 1) ++r;
    return r;
}

StepVector nearest_unit_step(const Vec2& v) {
    if (v.x == 0.0 && v.y == 0.0) return {0, 0};
    const double theta = std::atan2(v.y, v.x);
    StepVector best = kStepNeighborhood[0];
    double best_dist = angle_distance(direction_angle(best.dx, best.dy), theta);
    for (int k = 1; k < 8; ++k) {
        const StepVector& s = kStepNeighborhood[k];
        const double d = angle_distance(direction_angle(s.dx, s.dy), theta);
        if (d < best_dist) {
            best = s;
            best_dist = d;
        }
    }
    return best;
}

GridPos clamp_to_vicinity(const GridPos& proposal, const GridPos& real_pos, int radius,
                          const WorldState& world) {
    GridPos result = proposal;
    if (chebyshev_distance(proposal, real_pos) > radius) {
        const double theta =
            direction_angle(proposal.x - real_pos.x, proposal.y - real_pos.y);
        double best_dist = std::numeric_limits<double>::infinity();
        const int r = radius;
        const auto consider = [&](int ox, int oy) {
            const double d = angle_distance(direction_angle(ox, oy), theta);
            if (d < best_dist) {
                best_dist = d;
                result = {real_pos.x + ox, real_pos.y + oy};
            }
        };
        // ring cells counterclockwise from due east
        for (int y = 0; y <= r; ++y) consider(r, y);
        for (int x = r - 1; x >= -r; --x) consider(x, r);
        for (int y = r - 1; y >= -r; --y) consider(-r, y);
        for (int x = -r + 1; x <= r; ++x) consider(x, -r);
        for (int y = -r + 1; y <= -1; ++y) consider(r, y);
    }
    result.x = std::clamp(result.x, 0, world.width - 1);
    result.y = std::clamp(result.y, 0, world.height - 1);
    return result;
}

void evaluate_all(Subpopulation& sp, const WorldState& world, const FitnessParams& fp,
                  bool reset_memory) {
    for (Individual& ind : sp.individuals) {
        ind.fitness = evaluate_candidate(sp.index, ind.position, world, fp).total;
        if (reset_memory || ind.fitness < ind.best_fitness) {
            ind.best_position = ind.position;
            ind.best_fitness = ind.fitness;
        }
    }
    refresh_best(sp);
}

std::size_t refresh_best(Subpopulation& sp) {
    std::size_t best = 0;
    for (std::size_t j = 1; j < sp.individuals.size(); ++j)
        if (sp.individuals[j].fitness < sp.individuals[best].fitness) best = j;
    sp.best_position = sp.individuals[best].position;
    sp.best_fitness = sp.individuals[best].fitness;
    return best;
}

int diversity(const Subpopulation& sp) {
    std::vector<GridPos> cells;
    cells.reserve(sp.individuals.size() - 1);
    for (std::size_t j = 1; j < sp.individuals.size(); ++j)
        cells.push_back(sp.individuals[j].position);
    std::sort(cells.begin(), cells.end());
    cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
    return static_cast<int>(cells.size());
}

void redistribute_virtual_robots(Subpopulation& sp, const WorldState& world,
                                 const PSOParams& pso, const FitnessParams& fp,
                                 std::mt19937& rng) {
    const GridPos center = sp.real().position;
    const int r = pso.radius();
    std::vector<GridPos> cells;
    cells.reserve(static_cast<std::size_t>(2 * r + 1) * (2 * r + 1));
    for (int dy = -r; dy <= r; ++dy)
        for (int dx = -r; dx <= r; ++dx) {
            const GridPos c{center.x + dx, center.y + dy};
            if (c == center || !world.in_bounds(c)) continue;
            cells.push_back(c);
        }
    for (std::size_t t = cells.size(); t > 1; --t) {
        std::uniform_int_distribution<std::size_t> pick(0, t - 1);
        std::swap(cells[t - 1], cells[pick(rng)]);
    }
    for (std::size_t j = 1; j < sp.individuals.size(); ++j) {
        Individual& ind = sp.individuals[j];
        if (cells.empty()) {
            ind.position = center;
        } else if (j - 1 < cells.size()) {
            ind.position = cells[j - 1];
        } else {
            // clipped vicinity smaller than the population: fall back to
            // sampling with replacement
            std::uniform_int_distribution<std::size_t> pick(0, cells.size() - 1);
            ind.position = cells[pick(rng)];
        }
        ind.velocity = {0, 0};
        ind.fitness = evaluate_candidate(sp.index, ind.position, world, fp).total;
        ind.best_position = ind.position;
        ind.best_fitness = ind.fitness;
    }
    refresh_best(sp);
}

void update_virtual_robot(Subpopulation& sp, std::size_t j, const WorldState& world,
                          const PSOParams& pso, const FitnessParams& fp, std::mt19937& rng) {
    assert(j >= 1 && j < sp.individuals.size());
    Individual& ind = sp.individuals[j];
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const double r1 = unit(rng);
    const double r2 = unit(rng);
    const Vec2 raw{pso.inertia * ind.velocity.dx +
                       pso.c1 * r1 * (ind.best_position.x - ind.position.x) +
                       pso.c2 * r2 * (sp.best_position.x - ind.position.x),
                   pso.inertia * ind.velocity.dy +
                       pso.c1 * r1 * (ind.best_position.y - ind.position.y) +
                       pso.c2 * r2 * (sp.best_position.y - ind.position.y)};
    ind.velocity = nearest_unit_step(raw);
    const GridPos candidate = clamp_to_vicinity(ind.position + ind.velocity,
                                                sp.real().position, pso.radius(), world);
    const double candidate_fitness = evaluate_candidate(sp.index, candidate, world, fp).total;
    if (candidate_fitness <= ind.fitness) {  // greedy: never worse than the parent
        ind.position = candidate;
        ind.fitness = candidate_fitness;
        if (ind.fitness < ind.best_fitness) {
            ind.best_position = ind.position;
            ind.best_fitness = ind.fitness;
        }
        if (ind.fitness < sp.best_fitness) {
            sp.best_position = ind.position;
            sp.best_fitness = ind.fitness;
        }
    }
}

bool update_real_robot(Subpopulation& sp, WorldState& world, const FitnessParams& fp) {
    Individual& real = sp.real();
    const Vec2 toward{static_cast<double>(sp.best_position.x - real.position.x),
                      static_cast<double>(sp.best_position.y - real.position.y)};
    real.velocity = nearest_unit_step(toward);
    bool moved = false;
    if (real.velocity != StepVector{0, 0}) {
        GridPos target = real.position + real.velocity;
        if (!is_legal_step(world, real.position, target)) {
            // the wanted cell is taken or walled off: slide to the legal step
            // closest in angle, the same projection the virtual robots get,
            // but never more than a quarter turn off course
            const double wanted = std::atan2(static_cast<double>(real.velocity.dy),
                                             static_cast<double>(real.velocity.dx));
            double best_dist = std::numbers::pi / 2 + 1e-9;
            bool found = false;
            for (const StepVector& s : kStepNeighborhood) {
                const GridPos candidate = real.position + s;
                if (!is_legal_step(world, real.position, candidate)) continue;
                const double d = angle_distance(direction_angle(s.dx, s.dy), wanted);
                if (d < best_dist) {
                    best_dist = d;
                    target = candidate;
                    found = true;
                }
            }
            if (!found) target = real.position;  // stay rather than turn back
        }
        if (target != real.position) {
            world.predators[sp.index] = target;
            real.position = target;
            moved = true;
        }
    }
    real.fitness = evaluate_candidate(sp.index, real.position, world, fp).total;
    if (real.fitness < real.best_fitness) {
        real.best_position = real.position;
        real.best_fitness = real.fitness;
    }
    return moved;
}

bool random_legal_step(WorldState& world, std::size_t predator, std::mt19937& rng) {
    const auto targets = legal_step_targets(world, world.predators[predator]);
    if (targets.empty()) return false;
    std::uniform_int_distribution<std::size_t> pick(0, targets.size() - 1);
    world.predators[predator] = targets[pick(rng)];
    return true;
}

bool step_subpopulation(Subpopulation& sp, WorldState& world, const PSOParams& pso,
                        const FitnessParams& fp, std::mt19937& rng) {
    // the environment moved since the last activation; memory is not inherited
    evaluate_all(sp, world, fp, /*reset_memory=*/true);

    for (std::size_t j = 1; j < sp.individuals.size(); ++j)
        update_virtual_robot(sp, j, world, pso, fp, rng);

    if (diversity(sp) < pso.diversity_threshold)
        redistribute_virtual_robots(sp, world, pso, fp, rng);

    bool moved = update_real_robot(sp, world, fp);

    if (refresh_best(sp) == 0) {
        // the real robot caught up with the global best: scatter the scouts
        redistribute_virtual_robots(sp, world, pso, fp, rng);
    } else if (!moved && sp.stagnant_steps + 1 >= pso.robot_stagnation_limit) {
        moved = random_legal_step(world, sp.index, rng);
        sp.real().position = world.predators[sp.index];
        evaluate_all(sp, world, fp, /*reset_memory=*/true);
    }
    sp.stagnant_steps = moved ? 0 : sp.stagnant_steps + 1;
    return moved;
}

double swarm_progress(const Swarm& swarm) {
    double sum = 0.0;
    for (const Subpopulation& sp : swarm.subpops) sum += sp.best_fitness;
    return sum;
}

Swarm make_swarm(const WorldState& world, const PSOParams& pso, const FitnessParams& fp,
                 std::mt19937& rng) {
    Swarm swarm;
    swarm.fitness = fp;
    swarm.subpops.resize(world.predators.size());
    for (std::size_t i = 0; i < world.predators.size(); ++i) {
        Subpopulation& sp = swarm.subpops[i];
        sp.index = i;
        sp.individuals.assign(static_cast<std::size_t>(pso.subpop_size),
                              Individual{world.predators[i],
                                         {0, 0},
                                         world.predators[i],
                                         0.0,
                                         0.0});
        redistribute_virtual_robots(sp, world, pso, fp, rng);
        evaluate_all(sp, world, fp, /*reset_memory=*/true);
    }
    swarm.best_progress = swarm_progress(swarm);
    return swarm;
}

void step_swarm(Swarm& swarm, WorldState& world, const PSOParams& pso, std::mt19937& rng) {
    for (Subpopulation& sp : swarm.subpops)
        step_subpopulation(sp, world, pso, swarm.fitness, rng);

    if (is_captured(world)) {
        swarm.stagnant_steps = 0;
        return;
    }
    // Stagnation means no progress, not just no motion: robots trading cells
    // in a deadlock or trailing a runner at fixed distance never improve the
    // summed bests, and a plain no-movement test misses both.
    const double progress = swarm_progress(swarm);
    if (progress < swarm.best_progress - 1e-9) {
        swarm.best_progress = progress;
        swarm.stagnant_steps = 0;
        return;
    }
    if (++swarm.stagnant_steps >= pso.swarm_stagnation_limit) {
        for (Subpopulation& sp : swarm.subpops) {
            if (random_legal_step(world, sp.index, rng))
                sp.real().position = world.predators[sp.index];
        }
        // the quadrant deadlock: fall back to the axial/diagonal assessment
        // for the rest of the episode
        swarm.fitness.uniformity = UniformityMode::axial_diagonal;
        for (Subpopulation& sp : swarm.subpops)
            evaluate_all(sp, world, swarm.fitness, /*reset_memory=*/true);
        swarm.stagnant_steps = 0;
        swarm.best_progress = swarm_progress(swarm);
    }
}

}  // namespace pursuit
