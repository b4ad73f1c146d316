#pragma once

// Test-only reference for fixed-order touch points. Each disk boundary is
// discretized into angles and the best cyclic choice (one angle per disk) is
// found by dynamic programming over the layered graph, then the grid is
// re-centered on the incumbent with a shrinking window. It never calls the
// coordinate-descent code it is used to check.
//
// Restricting touch points to boundaries loses nothing for disjoint disks: an
// interior optimal touch point is always on a straight pass and can slide to
// the chord end without changing the length.

#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "tspn/geometry.hpp"
#include "tspn/oracle.hpp"

namespace tspn::testing {

struct GridResult {
    std::vector<double> angles;  // per position in the order
    double length = 0.0;
};

namespace grid_detail {

// Best cycle choosing one candidate per layer. cand[j][k] is candidate k of layer j.
inline GridResult solve_layers(const std::vector<std::vector<Point>>& cand,
                               const std::vector<std::vector<double>>& ang) {
    const std::size_t n = cand.size();
    constexpr double inf = std::numeric_limits<double>::infinity();
    GridResult best;
    best.length = inf;
    std::vector<double> cur, nxt;
    std::vector<std::vector<std::size_t>> parent(n);
    for (std::size_t s = 0; s < cand[0].size(); ++s) {
        cur.assign(1, 0.0);
        std::vector<Point> prev_pts{cand[0][s]};
        for (std::size_t j = 1; j < n; ++j) {
            const auto& layer = cand[j];
            nxt.assign(layer.size(), inf);
            parent[j].assign(layer.size(), 0);
            for (std::size_t k = 0; k < layer.size(); ++k) {
                for (std::size_t q = 0; q < prev_pts.size(); ++q) {
                    const double c = cur[q] + dist(prev_pts[q], layer[k]);
                    if (c < nxt[k]) {
                        nxt[k] = c;
                        parent[j][k] = q;
                    }
                }
            }
            cur.swap(nxt);
            prev_pts = layer;
        }
        std::size_t last = 0;
        double total = inf;
        for (std::size_t k = 0; k < prev_pts.size(); ++k) {
            const double c = cur[k] + dist(prev_pts[k], cand[0][s]);
            if (c < total) {
                total = c;
                last = k;
            }
        }
        if (total < best.length) {
            best.length = total;
            best.angles.assign(n, 0.0);
            best.angles[0] = ang[0][s];
            std::size_t k = last;
            for (std::size_t j = n - 1; j >= 1; --j) {
                best.angles[j] = ang[j][k];
                k = parent[j][k];
            }
        }
    }
    return best;
}

}  // namespace grid_detail

/// Angular-grid brute force for a fixed order: a global pass at resolution
/// 2*pi/coarse, a windowed pass at 2*pi/4096, then shrinking windows.
inline GridResult grid_fixed_order(const Instance& inst, const OrderPermutation& order,
                                   std::size_t coarse = 128, int refine_levels = 8) {
    const std::size_t n = order.size();
    constexpr double two_pi = 2.0 * std::numbers::pi;
    std::vector<std::vector<Point>> cand(n);
    std::vector<std::vector<double>> ang(n);
    auto fill = [&](std::size_t j, double lo, double step, std::size_t count) {
        cand[j].clear();
        ang[j].clear();
        const Point c = inst.centers[order[j]];
        for (std::size_t k = 0; k < count; ++k) {
            const double a = lo + step * static_cast<double>(k);
            ang[j].push_back(a);
            cand[j].push_back(c + polar(inst.radius, a));
        }
    };

    for (std::size_t j = 0; j < n; ++j) fill(j, 0.0, two_pi / static_cast<double>(coarse), coarse);
    GridResult res = grid_detail::solve_layers(cand, ang);

    // Window of +-2 coarse cells sampled at 2*pi/4096.
    double step = two_pi / 4096.0;
    double half = 2.0 * two_pi / static_cast<double>(coarse);
    for (int level = 0; level <= refine_levels; ++level) {
        const auto count = static_cast<std::size_t>(std::ceil(2.0 * half / step)) + 1;
        for (std::size_t j = 0; j < n; ++j) fill(j, res.angles[j] - half, step, count);
        GridResult next = grid_detail::solve_layers(cand, ang);
        if (next.length <= res.length) res = next;
        half = 3.0 * step;
        step = half / 12.0;
    }
    return res;
}

}  // namespace tspn::testing
