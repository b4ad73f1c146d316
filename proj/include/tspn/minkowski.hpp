#pragma once

// Area of the x-neighborhood of a tour, by Monte Carlo, against 2x|G| + pi x^2,
// and the packing lower bound on tour length that follows from it.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <span>
#include <vector>

#include "tspn/generate.hpp"
#include "tspn/geometry.hpp"

namespace tspn {

struct MinkowskiReport {
    double x = 0.0;
    double curve_length = 0.0;  // |G|
    double estimate = 0.0;
    double std_error = 0.0;
    double bound = 0.0;  // 2x|G| + pi x^2
    std::size_t samples = 0;
    bool holds = false;  // estimate <= bound + 3 sigma
};

/// Distance from p to the polyline (closed adds the last-to-first edge). A
/// single vertex is a point.
[[nodiscard]] inline double polyline_distance(Point p, std::span<const Point> pts, bool closed) {
    if (pts.empty()) throw InvalidInput("polyline_distance: empty polyline");
    if (pts.size() == 1) return dist(p, pts[0]);
    double best = std::numeric_limits<double>::infinity();
    const std::size_t edges = closed ? pts.size() : pts.size() - 1;
    for (std::size_t i = 0; i < edges; ++i) {
        best = std::min(best, point_segment_distance(p, pts[i], pts[(i + 1) % pts.size()]));
    }
    return best;
}

/// Samples uniformly from the bounding box grown by x; the hit fraction times
/// the box area estimates the neighborhood area.
[[nodiscard]] inline MinkowskiReport verify_minkowski_lemma(std::span<const Point> polyline, bool closed, double x,
                                                            std::size_t samples = 1000000, std::uint64_t seed = 1) {
    if (!(x > 0.0) || !std::isfinite(x)) throw InvalidInput("verify_minkowski_lemma: x must be positive");
    if (polyline.empty()) throw InvalidInput("verify_minkowski_lemma: empty polyline");
    if (samples == 0) throw InvalidInput("verify_minkowski_lemma: need at least one sample");
    MinkowskiReport rep;
    rep.x = x;
    rep.samples = samples;
    rep.curve_length = polyline.size() < 2 ? 0.0 : closed ? cycle_length(polyline) : path_length(polyline);
    rep.bound = 2.0 * x * rep.curve_length + std::numbers::pi * x * x;

    double lo_x = polyline[0].x, hi_x = lo_x, lo_y = polyline[0].y, hi_y = lo_y;
    for (const Point& p : polyline) {
        lo_x = std::min(lo_x, p.x);
        hi_x = std::max(hi_x, p.x);
        lo_y = std::min(lo_y, p.y);
        hi_y = std::max(hi_y, p.y);
    }
    lo_x -= x;
    lo_y -= x;
    hi_x += x;
    hi_y += x;
    const double box = (hi_x - lo_x) * (hi_y - lo_y);

    Rng rng(seed);
    std::size_t hits = 0;
    for (std::size_t s = 0; s < samples; ++s) {
        const Point p{rng.uniform(lo_x, hi_x), rng.uniform(lo_y, hi_y)};
        if (polyline_distance(p, polyline, closed) <= x) ++hits;
    }
    const double frac = static_cast<double>(hits) / static_cast<double>(samples);
    rep.estimate = frac * box;
    rep.std_error = box * std::sqrt(frac * (1.0 - frac) / static_cast<double>(samples));
    rep.holds = rep.estimate <= rep.bound + 3.0 * rep.std_error;
    return rep;
}

/// Lower bound pi R n / 4 - pi R on any tour touching n disjoint disks of
/// radius R.
[[nodiscard]] inline double packing_lower_bound(std::size_t n, double radius) {
    return std::numbers::pi * radius * (static_cast<double>(n) / 4.0 - 1.0);
}

}  // namespace tspn
