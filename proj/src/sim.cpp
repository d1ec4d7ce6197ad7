#include "pursuit/sim.hpp"

#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>

namespace pursuit {

namespace {

[[noreturn]] void config_error(const std::string& what) {
    throw std::invalid_argument("invalid configuration: " + what);
}

void check_invariants(const WorldState& world, const Swarm& swarm, const SimConfig& config) {
    const auto fail = [](const std::string& what) {
        throw std::logic_error("invariant violated: " + what);
    };
    if (!world.in_bounds(world.prey)) fail("prey out of bounds");
    for (std::size_t i = 0; i < world.predators.size(); ++i) {
        if (!world.in_bounds(world.predators[i])) fail("predator out of bounds");
        if (world.predators[i] == world.prey) fail("predator on the prey cell");
        for (std::size_t k = i + 1; k < world.predators.size(); ++k)
            if (world.predators[i] == world.predators[k]) fail("predators share a cell");
    }
    const int r = config.pso.radius();
    for (const Subpopulation& sp : swarm.subpops) {
        if (sp.real().position != world.predators[sp.index])
            fail("real robot desynchronized from the world");
        double min_fitness = sp.individuals.front().fitness;
        for (const Individual& ind : sp.individuals) {
            if (!(ind.fitness >= 0.0) || !std::isfinite(ind.fitness))
                fail("fitness not a finite nonnegative value");
            min_fitness = std::min(min_fitness, ind.fitness);
        }
        if (sp.best_fitness != min_fitness) fail("stored best is not the minimum fitness");
        for (std::size_t j = 1; j < sp.individuals.size(); ++j) {
            const GridPos& p = sp.individuals[j].position;
            if (!world.in_bounds(p)) fail("virtual robot out of bounds");
            if (chebyshev_distance(p, sp.real().position) > r)
                fail("virtual robot outside the vicinity");
        }
    }
}

TraceSnapshot make_snapshot(int step, const WorldState& world, const Swarm& swarm) {
    TraceSnapshot snap;
    snap.step = step;
    snap.prey = world.prey;
    snap.predators = world.predators;
    snap.best_fitness.reserve(swarm.subpops.size());
    for (const Subpopulation& sp : swarm.subpops) snap.best_fitness.push_back(sp.best_fitness);
    return snap;
}

}  // namespace

void validate_config(const SimConfig& config) {
    if (config.width < 1 || config.height < 1) config_error("world dimensions must be positive");
    if (config.n_predators < 2) config_error("at least two predators are required");
    if (static_cast<long long>(config.width) * config.height < config.n_predators + 1)
        config_error("world too small to place all robots on distinct cells");
    if (config.max_steps < 1) config_error("max_steps must be positive");
    if (config.pso.subpop_size < 2) config_error("subpopulations need at least one virtual robot");
    if (config.pso.diversity_threshold < 2) config_error("diversity threshold must be >= 2");
    if (config.pso.robot_stagnation_limit < 1 || config.pso.swarm_stagnation_limit < 1)
        config_error("stagnation limits must be positive");
    if (!(config.prey_move_probability >= 0.0 && config.prey_move_probability <= 1.0))
        config_error("prey move probability must lie in [0, 1]");
    if (!(config.fitness.d_min > 0.0)) config_error("d_min must be positive");
}

RunRecord run_episode(const SimConfig& config) {
    validate_config(config);
    std::mt19937 rng(config.seed);

    WorldState world;
    world.width = config.width;
    world.height = config.height;
    world.prey = {config.width / 2, config.height / 2};
    world.predators.reserve(static_cast<std::size_t>(config.n_predators));
    std::uniform_int_distribution<int> px(0, config.width - 1);
    std::uniform_int_distribution<int> py(0, config.height - 1);
    while (world.predators.size() < static_cast<std::size_t>(config.n_predators)) {
        const GridPos p{px(rng), py(rng)};
        if (world.occupied(p)) continue;  // covers the prey cell and earlier predators
        world.predators.push_back(p);
    }

    Swarm swarm = make_swarm(world, config.pso, config.fitness, rng);
    PreyState prey_state{config.prey, std::nullopt, config.prey_move_probability};

    RunRecord record;
    record.seed = config.seed;
    if (config.record_trace) record.trace.push_back(make_snapshot(0, world, swarm));
    if (config.validate) check_invariants(world, swarm, config);

    while (true) {
        if (is_captured(world)) {
            record.captured = true;
            break;
        }
        if (record.moves >= config.max_steps) break;
        step_prey(prey_state, world, rng);
        step_swarm(swarm, world, config.pso, rng);
        ++record.moves;
        if (config.record_trace) record.trace.push_back(make_snapshot(record.moves, world, swarm));
        if (config.validate) check_invariants(world, swarm, config);
    }
    return record;
}

std::vector<RunRecord> run_batch(const SimConfig& config_template,
                                 const std::vector<std::uint32_t>& seeds, unsigned threads) {
    if (seeds.empty()) throw std::invalid_argument("run_batch: empty seed list");
    std::vector<RunRecord> out(seeds.size());
    unsigned workers = threads ? threads : std::thread::hardware_concurrency();
    if (workers < 1) workers = 1;
    workers = std::min<unsigned>(workers, seeds.size());

    if (workers == 1) {
        for (std::size_t i = 0; i < seeds.size(); ++i) {
            SimConfig config = config_template;
            config.seed = seeds[i];
            out[i] = run_episode(config);
        }
        return out;
    }

    std::atomic<std::size_t> next{0};
    std::mutex error_mutex;
    std::exception_ptr error;
    auto work = [&] {
        while (true) {
            const std::size_t i = next.fetch_add(1);
            if (i >= seeds.size()) return;
            SimConfig config = config_template;
            config.seed = seeds[i];
            try {
                out[i] = run_episode(config);
            } catch (...) {
                const std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) error = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned t = 0; t < workers; ++t) pool.emplace_back(work);
    for (std::thread& t : pool) t.join();
    if (error) std::rethrow_exception(error);
    return out;
}

AggregateStats aggregate_stats(const std::vector<RunRecord>& runs) {
    AggregateStats stats;
    if (runs.empty()) return stats;
    double sum = 0.0;
    for (const RunRecord& r : runs) {
        stats.captures += r.captured ? 1 : 0;
        sum += r.moves;
    }
    stats.avg_moves = sum / static_cast<double>(runs.size());
    if (runs.size() > 1) {
        double ss = 0.0;
        for (const RunRecord& r : runs) {
            const double d = r.moves - stats.avg_moves;
            ss += d * d;
        }
        stats.std_moves = std::sqrt(ss / static_cast<double>(runs.size() - 1));
    }
    return stats;
}

const char* to_string(PreyKind kind) {
    switch (kind) {
        case PreyKind::still: return "still";
        case PreyKind::random_walk: return "random";
        case PreyKind::linear: return "linear";
        case PreyKind::linear_smart: return "linear_smart";
    }
    return "unknown";
}

std::optional<PreyKind> prey_kind_from_string(std::string_view name) {
    if (name == "still") return PreyKind::still;
    if (name == "random") return PreyKind::random_walk;
    if (name == "linear") return PreyKind::linear;
    if (name == "linear_smart") return PreyKind::linear_smart;
    return std::nullopt;
}

}  // namespace pursuit
