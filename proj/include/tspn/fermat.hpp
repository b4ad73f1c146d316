#pragma once

// Translated view of a tour: every disk moved onto a common center, touch
// points becoming points Q_i on one circle. Geometric median, the chord
// detour bound, and the three-disk theorem.

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "tspn/geometry.hpp"
#include "tspn/oracle.hpp"
#include "tspn/structure.hpp"

namespace tspn {

struct CircleProjection {
    double radius = 0.0;
    /// Q_i = P_i - O_i scaled onto the circle, one per tour position.
    std::vector<Point> points;
    /// Raw offsets P_i - O_i, before scaling.
    std::vector<Point> offsets;
    /// Positions whose touch point sat on the center; Q_i there follows the
    /// incoming edge direction.
    std::vector<std::size_t> flagged;
};

[[nodiscard]] inline CircleProjection project_to_circle(const Instance& inst, const Tour& tour) {
    const std::size_t n = tour.size();
    if (n != inst.size()) throw InvalidInput("tour does not match instance");
    const double r = inst.radius;
    CircleProjection out;
    out.radius = r;
    for (std::size_t i = 0; i < n; ++i) {
        const Point off = tour.point(i) - inst.centers[tour.disk(i)];
        out.offsets.push_back(off);
        const double len = norm(off);
        if (len > 1e-12 * r) {
            out.points.push_back(off * (r / len));
            continue;
        }
        out.flagged.push_back(i);
        Point dir = unit(tour.point(i) - tour.point(i + n - 1));
        if (dir == Point{}) dir = {1.0, 0.0};
        out.points.push_back(dir * r);
    }
    return out;
}

struct FermatWeberResult {
    Point point;
    double objective = 0.0;
    std::size_t iterations = 0;
    bool converged = false;
};

[[nodiscard]] inline double sum_of_distances(std::span<const Point> pts, Point b) {
    double s = 0.0;
    for (const Point& p : pts) s += dist(p, b);
    return s;
}

/// Geometric median by Weiszfeld's iteration. When an iterate lands on a data
/// point the Vardi-Zhang step is used: stop if that point is optimal,
/// otherwise move off it along the descent direction.
[[nodiscard]] inline FermatWeberResult fermat_weber(std::span<const Point> pts, double step_tol = 1e-10,
                                                    std::size_t max_iter = 200000) {
    if (pts.empty()) throw InvalidInput("fermat_weber: no points");
    FermatWeberResult res;
    double scale = 0.0;
    Point y{};
    for (const Point& p : pts) y = y + p;
    y = y / static_cast<double>(pts.size());
    for (const Point& p : pts) scale = std::max(scale, dist(p, y));
    if (scale == 0.0) {
        res.point = y;
        res.converged = true;
        return res;
    }
    const double tol = step_tol * scale;
    const double coincide = 1e-12 * scale;

    for (res.iterations = 1; res.iterations <= max_iter; ++res.iterations) {
        Point num{};
        double den = 0.0;
        Point pull{};  // sum of unit vectors toward non-coincident points
        double eta = 0.0;
        for (const Point& p : pts) {
            const double d = dist(p, y);
            if (d <= coincide) {
                eta += 1.0;
                continue;
            }
            num = num + p / d;
            den += 1.0 / d;
            pull = pull + (p - y) / d;
        }
        if (den == 0.0) {
            res.converged = true;
            break;
        }
        const Point t = num / den;
        Point next = t;
        if (eta > 0.0) {
            const double rr = norm(pull);
            if (rr <= eta) {
                res.converged = true;
                break;
            }
            const double w = std::min(1.0, eta / rr);
            next = t * (1.0 - w) + y * w;
        }
        const double step = dist(next, y);
        y = next;
        if (step < tol) {
            res.converged = true;
            break;
        }
    }
    res.point = y;
    res.objective = sum_of_distances(pts, y);
    return res;
}

struct ChordBound {
    /// Sum of |Q_i - Q_i+1| over the raw offsets Q_i = P_i - O_i; bounds
    /// |TSP(sigma)| - |TSPN(sigma)| edge by edge.
    double bound = 0.0;
    /// The same sum over the points scaled onto the circle.
    double circle_bound = 0.0;
    /// |O_i O_i+1| <= |P_i P_i+1| + |Q_i Q_i+1| for every edge.
    CheckReport per_edge;
};

[[nodiscard]] inline ChordBound chord_detour_bound(const Instance& inst, const Tour& tour,
                                                   const Tolerance& tol = {}) {
    const CircleProjection proj = project_to_circle(inst, tour);
    const std::size_t n = tour.size();
    ChordBound out;
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t j = (i + 1) % n;
        const double chord = dist(proj.offsets[i], proj.offsets[j]);
        out.bound += chord;
        out.circle_bound += dist(proj.points[i], proj.points[j]);
        const double centers = dist(inst.centers[tour.disk(i)], inst.centers[tour.disk(j)]);
        const double limit = dist(tour.point(i), tour.point(j)) + chord;
        ++out.per_edge.checked;
        if (centers > limit + tol.len(inst.radius)) {
            out.per_edge.violations.push_back({"chord_bound", i, centers, limit});
        }
    }
    return out;
}

/// Longest cycle through the points over all orders (n <= 9).
[[nodiscard]] inline double max_tsp_length(std::span<const Point> pts) {
    const std::size_t n = pts.size();
    if (n < 2) return 0.0;
    if (n > 9) throw InvalidInput("max_tsp_length supports n <= 9");
    if (n == 2) return 2.0 * dist(pts[0], pts[1]);
    double best = 0.0;
    for_each_canonical_order(n, [&](const std::vector<std::size_t>& order) {
        best = std::max(best, order_length(pts, OrderPermutation(order)));
    });
    return best;
}

/// 3 sqrt(3) R minus the perimeter of triangle abc, all three on the circle
/// of radius R about the origin.
[[nodiscard]] inline double triangle_bound_check(Point a, Point b, Point c, double radius, double rel_tol = 1e-9) {
    if (!(radius > 0.0)) throw InvalidInput("radius must be positive");
    for (Point p : {a, b, c}) {
        if (std::abs(norm(p) - radius) > rel_tol * radius) throw InvalidInput("point is not on the circle");
    }
    return 3.0 * std::numbers::sqrt3 * radius - (dist(a, b) + dist(b, c) + dist(c, a));
}

struct N3Report {
    double tsp_centers = 0.0;
    double tspn = 0.0;
    double detour = 0.0;
    double bound = 0.0;  // 3 sqrt(3) R
    double slack = 0.0;
};

/// Three disks: the triangle on the centers exceeds the shortest tour by at
/// most 3 sqrt(3) R.
[[nodiscard]] inline N3Report verify_n3_theorem(const Instance& inst, const FixedOrderOptions& opt = {}) {
    if (inst.size() != 3) throw InvalidInput("verify_n3_theorem needs exactly three disks");
    inst.validate(opt.tol);
    N3Report rep;
    const OrderPermutation order = OrderPermutation::identity(3);
    rep.tsp_centers = order_length(inst.centers, order);
    rep.tspn = tspn_fixed_order(inst, order, opt).length;
    rep.detour = rep.tsp_centers - rep.tspn;
    rep.bound = 3.0 * std::numbers::sqrt3 * inst.radius;
    rep.slack = rep.bound - rep.detour;
    return rep;
}

}  // namespace tspn
