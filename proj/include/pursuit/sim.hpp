#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pursuit/ccpso.hpp"
#include "pursuit/prey.hpp"

namespace pursuit {

struct SimConfig {
    int width = 30;
    int height = 30;
    int n_predators = 4;
    PreyKind prey = PreyKind::still;
    double prey_move_probability = 0.9;
    int max_steps = 1000;
    std::uint32_t seed = 1;
    PSOParams pso;
    FitnessParams fitness;
    bool record_trace = false;
    bool validate = false;  // check world/swarm invariants after every step
};

struct TraceSnapshot {
    int step = 0;
    GridPos prey;
    std::vector<GridPos> predators;
    std::vector<double> best_fitness;  // per-subpopulation best
};

struct RunRecord {
    std::uint32_t seed = 0;
    bool captured = false;
    int moves = 0;                     // world steps elapsed at capture, or max_steps
    std::vector<TraceSnapshot> trace;  // empty unless record_trace; includes step 0
};

struct AggregateStats {
    int captures = 0;
    double avg_moves = 0.0;
    double std_moves = 0.0;  // sample standard deviation, 0 for a single run
};

/// Throws std::invalid_argument when the configuration cannot produce a
/// well-formed episode (world too small, degenerate swarm sizes, ...).
void validate_config(const SimConfig& config);

/// One seeded episode: prey in the center, predators on distinct random
/// cells, then the capture-check / prey-turn / swarm-turn loop.
RunRecord run_episode(const SimConfig& config);

/// One episode per seed; episodes run concurrently on `threads` workers
/// (0 = hardware concurrency). Results come back in seed-list order.
std::vector<RunRecord> run_batch(const SimConfig& config_template,
                                 const std::vector<std::uint32_t>& seeds,
                                 unsigned threads = 0);

AggregateStats aggregate_stats(const std::vector<RunRecord>& runs);

const char* to_string(PreyKind kind);
std::optional<PreyKind> prey_kind_from_string(std::string_view name);

}  // namespace pursuit
