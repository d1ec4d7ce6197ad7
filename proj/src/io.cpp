#include "pursuit/io.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace pursuit {

namespace {

std::ofstream open_for_write(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    return out;
}

std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

}  // namespace

void write_stats_csv(const std::string& path, const std::vector<CellStats>& rows) {
    auto out = open_for_write(path);
    out << "predators,prey,captures,avg_moves,std_moves\n";
    for (const CellStats& row : rows) {
        out << row.predators << ',' << to_string(row.prey) << ',' << row.stats.captures << ','
            << format_double(row.stats.avg_moves) << ',' << format_double(row.stats.std_moves)
            << '\n';
    }
    if (!out) throw std::runtime_error("write failed: " + path);
}

void write_runs_csv(const std::string& path, const std::vector<RunRow>& rows) {
    auto out = open_for_write(path);
    out << "predators,prey,seed,captured,moves\n";
    for (const RunRow& row : rows) {
        out << row.predators << ',' << to_string(row.prey) << ',' << row.seed << ','
            << (row.captured ? 1 : 0) << ',' << row.moves << '\n';
    }
    if (!out) throw std::runtime_error("write failed: " + path);
}

std::string trace_to_jsonl(const std::vector<TraceSnapshot>& trace) {
    std::string out;
    for (const TraceSnapshot& snap : trace) {
        nlohmann::json j;
        j["step"] = snap.step;
        j["prey"] = {snap.prey.x, snap.prey.y};
        auto& predators = j["predators"] = nlohmann::json::array();
        for (const GridPos& p : snap.predators) predators.push_back({p.x, p.y});
        j["best_fitness"] = snap.best_fitness;
        out += j.dump();
        out += '\n';
    }
    return out;
}

void write_trace_jsonl(const std::string& path, const std::vector<TraceSnapshot>& trace) {
    auto out = open_for_write(path);
    out << trace_to_jsonl(trace);
    if (!out) throw std::runtime_error("write failed: " + path);
}

std::vector<TraceSnapshot> read_trace_jsonl(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open for reading: " + path);
    std::vector<TraceSnapshot> trace;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(line);
        } catch (const nlohmann::json::exception& e) {
            throw std::runtime_error(path + ":" + std::to_string(lineno) + ": " + e.what());
        }
        TraceSnapshot snap;
        snap.step = j.at("step").get<int>();
        snap.prey = {j.at("prey").at(0).get<int>(), j.at("prey").at(1).get<int>()};
        for (const auto& p : j.at("predators"))
            snap.predators.push_back({p.at(0).get<int>(), p.at(1).get<int>()});
        snap.best_fitness = j.at("best_fitness").get<std::vector<double>>();
        trace.push_back(std::move(snap));
    }
    return trace;
}

void render_svg(const std::vector<TraceSnapshot>& trace, const std::string& out_dir,
                int width, int height) {
    namespace fs = std::filesystem;
    std::error_code ec;
    fs::create_directories(out_dir, ec);
    if (ec) throw std::runtime_error("cannot create directory: " + out_dir);

    constexpr int cell = 20;
    constexpr int margin = 12;
    const int w_px = width * cell + 2 * margin;
    const int h_px = height * cell + 2 * margin;
    // grid row 0 is drawn at the bottom
    const auto cx = [&](int x) { return margin + x * cell + cell / 2; };
    const auto cy = [&](int y) { return margin + (height - 1 - y) * cell + cell / 2; };

    for (const TraceSnapshot& snap : trace) {
        char name[32];
        std::snprintf(name, sizeof name, "frame_%05d.svg", snap.step);
        const std::string path = (fs::path(out_dir) / name).string();
        auto out = open_for_write(path);
        out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w_px << "\" height=\""
            << h_px << "\" viewBox=\"0 0 " << w_px << ' ' << h_px << "\">\n";
        out << "<rect x=\"0\" y=\"0\" width=\"" << w_px << "\" height=\"" << h_px
            << "\" fill=\"white\"/>\n";
        out << "<g stroke=\"#d0d0d0\" stroke-width=\"1\">\n";
        for (int x = 0; x <= width; ++x)
            out << "<line x1=\"" << margin + x * cell << "\" y1=\"" << margin << "\" x2=\""
                << margin + x * cell << "\" y2=\"" << margin + height * cell << "\"/>\n";
        for (int y = 0; y <= height; ++y)
            out << "<line x1=\"" << margin << "\" y1=\"" << margin + y * cell << "\" x2=\""
                << margin + width * cell << "\" y2=\"" << margin + y * cell << "\"/>\n";
        out << "</g>\n";
        for (const GridPos& p : snap.predators)
            out << "<rect x=\"" << cx(p.x) - 7 << "\" y=\"" << cy(p.y) - 7
                << "\" width=\"14\" height=\"14\" fill=\"#1f4e9c\"/>\n";
        out << "<circle cx=\"" << cx(snap.prey.x) << "\" cy=\"" << cy(snap.prey.y)
            << "\" r=\"8\" fill=\"#c0182a\"/>\n";
        out << "<text x=\"" << margin << "\" y=\"" << h_px - 2
            << "\" font-family=\"monospace\" font-size=\"10\" fill=\"#404040\">step "
            << snap.step << "</text>\n";
        out << "</svg>\n";
        if (!out) throw std::runtime_error("write failed: " + path);
    }
}

}  // namespace pursuit
