#include "pursuit/fitness.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <limits>

namespace pursuit {

namespace {

long long cross(const GridPos& o, const GridPos& a, const GridPos& b) {
    return static_cast<long long>(a.x - o.x) * (b.y - o.y) -
           static_cast<long long>(a.y - o.y) * (b.x - o.x);
}

bool within_box(const GridPos& p, const GridPos& a, const GridPos& b) {
    return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
           std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

double population_std(const std::array<double, 4>& bins) {
    const double mean = (bins[0] + bins[1] + bins[2] + bins[3]) / 4.0;
    double ss = 0.0;
    for (double b : bins) ss += (b - mean) * (b - mean);
    return std::sqrt(ss / 4.0);
}

}  // namespace

ConvexHull convex_hull(std::vector<GridPos> points) {
    assert(!points.empty());
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    const std::size_t n = points.size();
    if (n <= 2) return {std::move(points)};

    // Andrew's monotone chain; strict turns only, so collinear interior
    // points never become vertices.
    std::vector<GridPos> hull(2 * n);
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i) {
        while (k >= 2 && cross(hull[k - 2], hull[k - 1], points[i]) <= 0) --k;
        hull[k++] = points[i];
    }
    const std::size_t lower = k + 1;
    for (std::size_t i = n - 1; i-- > 0;) {
        while (k >= lower && cross(hull[k - 2], hull[k - 1], points[i]) <= 0) --k;
        hull[k++] = points[i];
    }
    hull.resize(k - 1);
    return {std::move(hull)};
}

double containment_score(const GridPos& p, const ConvexHull& hull) {
    const auto& v = hull.vertices;
    assert(!v.empty());
    if (v.size() == 1) return p == v[0] ? 0.5 : 1.0;
    if (v.size() == 2)
        return cross(v[0], v[1], p) == 0 && within_box(p, v[0], v[1]) ? 0.5 : 1.0;

    bool on_edge = false;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const GridPos& a = v[i];
        const GridPos& b = v[(i + 1) % v.size()];
        const long long c = cross(a, b, p);
        if (c < 0) return 1.0;  // right of some CCW edge
        if (c == 0 && within_box(p, a, b)) on_edge = true;
    }
    return on_edge ? 0.5 : 0.0;
}

double repel_factor(double nearest_neighbor_distance, const FitnessParams& params) {
    if (nearest_neighbor_distance < params.d_min)
        return std::exp(-2.0 * (nearest_neighbor_distance - params.d_min));
    return 1.0;
}

double swarm_expanse(std::span<const GridPos> robots, const GridPos& prey) {
    assert(!robots.empty());
    double sum = 0.0;
    for (const GridPos& r : robots) sum += euclidean_distance(r, prey);
    return sum / static_cast<double>(robots.size());
}

std::array<double, 4> quadrant_bins(std::span<const GridPos> robots, const GridPos& prey) {
    std::array<double, 4> bins{};  // NE, NW, SW, SE around the prey
    for (const GridPos& r : robots) {
        const int dx = r.x - prey.x;
        const int dy = r.y - prey.y;
        if (dx == 0 && dy == 0) {
            for (double& b : bins) b += 0.25;
        } else if (dx == 0) {  // on the vertical split line
            if (dy > 0) {
                bins[0] += 0.5;
                bins[1] += 0.5;
            } else {
                bins[2] += 0.5;
                bins[3] += 0.5;
            }
        } else if (dy == 0) {  // on the horizontal split line
            if (dx > 0) {
                bins[0] += 0.5;
                bins[3] += 0.5;
            } else {
                bins[1] += 0.5;
                bins[2] += 0.5;
            }
        } else {
            const int idx = dy > 0 ? (dx > 0 ? 0 : 1) : (dx > 0 ? 3 : 2);
            bins[idx] += 1.0;
        }
    }
    return bins;
}

GridBins3x3 grid3x3_bins(std::span<const GridPos> robots, const GridPos& prey) {
    GridBins3x3 bins;
    for (const GridPos& r : robots) {
        const int dx = r.x - prey.x;
        const int dy = r.y - prey.y;
        if (dx == 0 && dy == 0) {
            bins.center += 1.0;
        } else if (dy == 0) {
            bins.axial[dx > 0 ? 0 : 2] += 1.0;
        } else if (dx == 0) {
            bins.axial[dy > 0 ? 1 : 3] += 1.0;
        } else {
            const int idx = dy > 0 ? (dx > 0 ? 0 : 1) : (dx > 0 ? 3 : 2);
            bins.diagonal[idx] += 1.0;
        }
    }
    return bins;
}

double uniformity_quadrants(std::span<const GridPos> robots, const GridPos& prey) {
    return population_std(quadrant_bins(robots, prey));
}

double uniformity_axial_diagonal(std::span<const GridPos> robots, const GridPos& prey) {
    const GridBins3x3 bins = grid3x3_bins(robots, prey);
    return population_std(bins.axial) + population_std(bins.diagonal);
}

FitnessBreakdown evaluate_candidate(std::size_t subpop, const GridPos& candidate,
                                    const WorldState& world, const FitnessParams& params) {
    const auto& predators = world.predators;
    assert(subpop < predators.size());

    thread_local std::vector<GridPos> composed;
    composed.assign(predators.begin(), predators.end());
    composed[subpop] = candidate;

    double nnd = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < predators.size(); ++k)
        if (k != subpop) nnd = std::min(nnd, euclidean_distance(candidate, predators[k]));

    FitnessBreakdown out;
    out.repel = repel_factor(nnd, params);
    out.closure = containment_score(world.prey, convex_hull(composed));
    out.expanse = swarm_expanse(composed, world.prey);
    out.uniformity = params.uniformity == UniformityMode::quadrants
                         ? uniformity_quadrants(composed, world.prey)
                         : uniformity_axial_diagonal(composed, world.prey);
    out.total = out.repel * (out.closure + out.expanse + out.uniformity);
    return out;
}

}  // namespace pursuit
