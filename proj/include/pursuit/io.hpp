#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pursuit/sim.hpp"

namespace pursuit {

struct CellStats {
    int predators = 0;
    PreyKind prey = PreyKind::still;
    AggregateStats stats;
};

struct RunRow {
    int predators = 0;
    PreyKind prey = PreyKind::still;
    std::uint32_t seed = 0;
    bool captured = false;
    int moves = 0;
};

// columns: predators,prey,captures,avg_moves,std_moves
void write_stats_csv(const std::string& path, const std::vector<CellStats>& rows);

// columns: predators,prey,seed,captured,moves
void write_runs_csv(const std::string& path, const std::vector<RunRow>& rows);

/// One JSON object per world step with keys step, prey, predators,
/// best_fitness; includes the step-0 snapshot.
std::string trace_to_jsonl(const std::vector<TraceSnapshot>& trace);
void write_trace_jsonl(const std::string& path, const std::vector<TraceSnapshot>& trace);
std::vector<TraceSnapshot> read_trace_jsonl(const std::string& path);

/// One SVG still per snapshot (frame_00000.svg, ...) drawing the grid, the
/// prey marker and the predator markers.
void render_svg(const std::vector<TraceSnapshot>& trace, const std::string& out_dir,
                int width, int height);

}  // namespace pursuit
