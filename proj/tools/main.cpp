#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pursuit/io.hpp"
#include "pursuit/sim.hpp"

namespace {

using pursuit::PreyKind;

std::vector<int> parse_int_list(const std::string& spec) {
    std::vector<int> out;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        out.push_back(std::stoi(item));
    }
    if (out.empty()) throw CLI::ValidationError("empty integer list: '" + spec + "'");
    return out;
}

// "1..100" or "3,5,9"
std::vector<std::uint32_t> parse_seed_spec(const std::string& spec) {
    const auto dots = spec.find("..");
    std::vector<std::uint32_t> seeds;
    if (dots != std::string::npos) {
        const long lo = std::stol(spec.substr(0, dots));
        const long hi = std::stol(spec.substr(dots + 2));
        if (lo > hi) throw CLI::ValidationError("bad seed range: '" + spec + "'");
        for (long s = lo; s <= hi; ++s) seeds.push_back(static_cast<std::uint32_t>(s));
    } else {
        for (int v : parse_int_list(spec)) seeds.push_back(static_cast<std::uint32_t>(v));
    }
    return seeds;
}

std::vector<PreyKind> parse_prey_list(const std::string& spec) {
    if (spec == "all")
        return {PreyKind::still, PreyKind::random_walk, PreyKind::linear,
                PreyKind::linear_smart};
    std::vector<PreyKind> out;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto kind = pursuit::prey_kind_from_string(item);
        if (!kind) throw CLI::ValidationError("unknown prey kind: '" + item + "'");
        out.push_back(*kind);
    }
    if (out.empty()) throw CLI::ValidationError("empty prey list: '" + spec + "'");
    return out;
}

void add_sim_options(CLI::App& cmd, pursuit::SimConfig& config, std::string& prey_name) {
    cmd.add_option("--width", config.width, "world width in cells")->capture_default_str();
    cmd.add_option("--height", config.height, "world height in cells")->capture_default_str();
    cmd.add_option("--prey", prey_name, "prey kind: still|random|linear|linear_smart")
        ->capture_default_str();
    cmd.add_option("--move-prob", config.prey_move_probability,
                   "probability the prey moves each step")
        ->capture_default_str();
    cmd.add_option("--max-steps", config.max_steps, "world-step cap per episode")
        ->capture_default_str();
    cmd.add_option("--np", config.pso.subpop_size, "subpopulation size (real robot included)")
        ->capture_default_str();
    cmd.add_option("--tv", config.pso.diversity_threshold,
                   "redistribute virtual robots below this many unique cells")
        ->capture_default_str();
    cmd.add_option("--si", config.pso.robot_stagnation_limit,
                   "per-robot stagnation limit in world steps")
        ->capture_default_str();
    cmd.add_option("--sg", config.pso.swarm_stagnation_limit,
                   "swarm stagnation limit in world steps")
        ->capture_default_str();
    cmd.add_option("--radius", config.pso.vicinity_radius,
                   "vicinity radius override (0 = derive from --np)")
        ->capture_default_str();
    cmd.add_option("--dmin", config.fitness.d_min, "repel-factor collision radius")
        ->capture_default_str();
    cmd.add_flag("--validate", config.validate, "check invariants after every world step");
    cmd.set_config("--config", "", "read options from a key=value file");
}

PreyKind resolve_prey(const std::string& name) {
    const auto kind = pursuit::prey_kind_from_string(name);
    if (!kind) throw CLI::ValidationError("unknown prey kind: '" + name + "'");
    return *kind;
}

int cmd_run(pursuit::SimConfig config, const std::string& trace_path) {
    config.record_trace = !trace_path.empty();
    const pursuit::RunRecord record = pursuit::run_episode(config);
    if (!trace_path.empty()) pursuit::write_trace_jsonl(trace_path, record.trace);
    std::cout << "seed=" << record.seed << " captured=" << (record.captured ? "true" : "false")
              << " moves=" << record.moves << '\n';
    return 0;
}

int cmd_batch(pursuit::SimConfig config, const std::vector<int>& predator_counts,
              const std::vector<PreyKind>& preys, const std::vector<std::uint32_t>& seeds,
              const std::string& out_path, const std::string& runs_path, unsigned threads) {
    std::vector<pursuit::CellStats> cells;
    std::vector<pursuit::RunRow> run_rows;
    for (int predators : predator_counts) {
        for (PreyKind prey : preys) {
            pursuit::SimConfig cell_config = config;
            cell_config.n_predators = predators;
            cell_config.prey = prey;
            const auto runs = pursuit::run_batch(cell_config, seeds, threads);
            const auto stats = pursuit::aggregate_stats(runs);
            cells.push_back({predators, prey, stats});
            for (const auto& r : runs)
                run_rows.push_back({predators, prey, r.seed, r.captured, r.moves});
            std::cout << "predators=" << predators << " prey=" << pursuit::to_string(prey)
                      << " captures=" << stats.captures << "/" << runs.size()
                      << " avg_moves=" << stats.avg_moves << " std_moves=" << stats.std_moves
                      << std::endl;
        }
    }
    if (!out_path.empty()) pursuit::write_stats_csv(out_path, cells);
    if (!runs_path.empty()) pursuit::write_runs_csv(runs_path, run_rows);
    return 0;
}

int cmd_render(const std::string& trace_path, const std::string& out_dir, int width,
               int height) {
    const auto trace = pursuit::read_trace_jsonl(trace_path);
    pursuit::render_svg(trace, out_dir, width, height);
    std::cout << "wrote " << trace.size() << " frame(s) to " << out_dir << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"grid-world pursuit simulator driven by cooperatively coevolving "
                 "predator subpopulations"};
    app.require_subcommand(1);

    // run
    pursuit::SimConfig run_config;
    std::string run_prey = "still";
    std::string run_trace;
    auto* run = app.add_subcommand("run", "run a single episode");
    add_sim_options(*run, run_config, run_prey);
    run->add_option("--predators", run_config.n_predators, "number of predator robots")
        ->capture_default_str();
    run->add_option("--seed", run_config.seed, "episode seed")->capture_default_str();
    run->add_option("--trace", run_trace, "write a JSONL trace to this file");

    // batch
    pursuit::SimConfig batch_config;
    std::string batch_prey_default = "still";
    std::string batch_predators = "4,8,12,16,24";
    std::string batch_preys = "all";
    std::string batch_seeds = "1..100";
    std::string batch_out = "stats.csv";
    std::string batch_runs_out;
    unsigned batch_threads = 0;
    auto* batch = app.add_subcommand("batch", "run an experiment grid and aggregate statistics");
    add_sim_options(*batch, batch_config, batch_prey_default);
    batch->add_option("--predators", batch_predators, "comma list of swarm sizes")
        ->capture_default_str();
    batch->add_option("--preys", batch_preys, "comma list of prey kinds, or 'all'")
        ->capture_default_str();
    batch->add_option("--seeds", batch_seeds, "seed list: 'a..b' range or comma list")
        ->capture_default_str();
    batch->add_option("--out", batch_out, "statistics CSV path")->capture_default_str();
    batch->add_option("--runs-out", batch_runs_out, "optional per-run CSV path");
    batch->add_option("--threads", batch_threads, "worker threads (0 = hardware)")
        ->capture_default_str();

    // render
    std::string render_trace;
    std::string render_out = "frames";
    int render_width = 30;
    int render_height = 30;
    auto* render = app.add_subcommand("render", "render a JSONL trace to SVG frames");
    render->add_option("--trace", render_trace, "JSONL trace file")->required();
    render->add_option("--out", render_out, "output directory")->capture_default_str();
    render->add_option("--width", render_width, "world width in cells")->capture_default_str();
    render->add_option("--height", render_height, "world height in cells")
        ->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    try {
        if (run->parsed()) {
            run_config.prey = resolve_prey(run_prey);
            return cmd_run(run_config, run_trace);
        }
        if (batch->parsed()) {
            batch_config.prey = resolve_prey(batch_prey_default);
            return cmd_batch(batch_config, parse_int_list(batch_predators),
                             parse_prey_list(batch_preys), parse_seed_spec(batch_seeds),
                             batch_out, batch_runs_out, batch_threads);
        }
        if (render->parsed())
            return cmd_render(render_trace, render_out, render_width, render_height);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
