#pragma once

// Approximation algorithms: TSP on centers for disjoint disks, the
// maximal-disjoint-subset pipeline for overlapping disks, and the two
// line-transversal constructions.

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numeric>
#include <numbers>
#include <optional>
#include <vector>

#include "tspn/geometry.hpp"
#include "tspn/oracle.hpp"

namespace tspn {

enum class TspMethod { exact, two_opt };

struct TspSubroutineResult {
    OrderPermutation order;
    double length = 0.0;
    TspMethod method = TspMethod::exact;
    /// Worst-case factor of the subroutine: 1 for exact runs; for the heuristic,
    /// the nearest-neighbor guarantee (ceil(log2 n) + 1) / 2, which 2-opt
    /// started from that tour cannot exceed.
    double approx_factor_a = 1.0;
};

struct TspOptions {
    std::size_t exact_limit = 15;
    std::size_t restarts = 8;
};

namespace detail {

inline std::vector<std::size_t> nearest_neighbor_tour(std::span<const Point> pts, std::size_t start) {
    const std::size_t n = pts.size();
    std::vector<bool> used(n, false);
    std::vector<std::size_t> tour{start};
    used[start] = true;
    for (std::size_t step = 1; step < n; ++step) {
        const Point here = pts[tour.back()];
        std::size_t best = n;
        double best_d = std::numeric_limits<double>::infinity();
        for (std::size_t j = 0; j < n; ++j) {
            if (used[j]) continue;
            const double d = dist(here, pts[j]);
            if (d < best_d) {
                best_d = d;
                best = j;
            }
        }
        used[best] = true;
        tour.push_back(best);
    }
    return tour;
}

/// First-improvement 2-opt until no improving move remains.
inline void two_opt(std::span<const Point> pts, std::vector<std::size_t>& tour) {
    const std::size_t n = tour.size();
    if (n < 4) return;
    bool improved = true;
    while (improved) {
        improved = false;
        for (std::size_t i = 0; i + 2 < n && !improved; ++i) {
            for (std::size_t j = i + 2; j < n && !improved; ++j) {
                if (i == 0 && j == n - 1) continue;
                const Point a = pts[tour[i]], b = pts[tour[i + 1]];
                const Point c = pts[tour[j]], d = pts[tour[(j + 1) % n]];
                const double delta = dist(a, c) + dist(b, d) - dist(a, b) - dist(c, d);
                if (delta < -1e-12 * (dist(a, b) + dist(c, d))) {
                    std::reverse(tour.begin() + static_cast<std::ptrdiff_t>(i + 1),
                                 tour.begin() + static_cast<std::ptrdiff_t>(j + 1));
                    improved = true;
                }
            }
        }
    }
}

}  // namespace detail

/// TSP on points: Held-Karp up to `exact_limit` points, otherwise
/// nearest-neighbor starts improved by 2-opt, best of `restarts`.
[[nodiscard]] inline TspSubroutineResult tsp_subroutine(std::span<const Point> pts, const TspOptions& opt = {}) {
    const std::size_t n = pts.size();
    if (n == 0) throw InvalidInput("tsp_subroutine: no points");
    if (n == 1) return {OrderPermutation::identity(1), 0.0, TspMethod::exact, 1.0};
    if (n <= opt.exact_limit && n <= 15) {
        PointTour t = tsp_exact_points(pts);
        return {std::move(t.order), t.length, TspMethod::exact, 1.0};
    }
    std::vector<std::size_t> best;
    double best_len = std::numeric_limits<double>::infinity();
    const std::size_t restarts = std::max<std::size_t>(1, opt.restarts);
    for (std::size_t r = 0; r < restarts; ++r) {
        auto tour = detail::nearest_neighbor_tour(pts, (r * n) / restarts);
        detail::two_opt(pts, tour);
        OrderPermutation order(tour);
        const double len = order_length(pts, order);
        if (len < best_len) {
            best_len = len;
            best = std::move(tour);
        }
    }
    const double a = (std::ceil(std::log2(static_cast<double>(n))) + 1.0) / 2.0;
    return {OrderPermutation(std::move(best)).canonical(), best_len, TspMethod::two_opt, a};
}

/// Tour through the disk centers (each center lies in its own disk).
[[nodiscard]] inline Tour approx_disjoint(const Instance& inst, const TspOptions& opt = {},
                                          const Tolerance& tol = {}) {
    inst.validate(tol);
    if (!pairwise_disjoint(inst, tol)) throw InvalidInput("approx_disjoint requires pairwise disjoint disks");
    TspSubroutineResult sub = tsp_subroutine(inst.centers, opt);
    Tour tour;
    tour.order = sub.order;
    for (std::size_t i : sub.order) tour.touch_points.push_back(inst.centers[i]);
    tour.length = cycle_length(tour.touch_points);
    return tour;
}

/// Two closed disks of the instance meet (tangency counts).
[[nodiscard]] inline bool disks_intersect(const Instance& inst, std::size_t i, std::size_t j,
                                          const Tolerance& tol = {}) {
    return dist(inst.centers[i], inst.centers[j]) < 2.0 * inst.radius - tol.len(inst.radius);
}

/// Greedy left-to-right maximal set of pairwise disjoint disks: take the
/// leftmost remaining disk (ties: lower y, then lower index), drop every disk
/// meeting it, repeat. Returned in selection order.
[[nodiscard]] inline std::vector<std::size_t> greedy_maximal_disjoint(const Instance& inst,
                                                                      const Tolerance& tol = {}) {
    std::vector<std::size_t> by_x(inst.size());
    std::iota(by_x.begin(), by_x.end(), std::size_t{0});
    std::stable_sort(by_x.begin(), by_x.end(), [&](std::size_t a, std::size_t b) {
        const Point pa = inst.centers[a], pb = inst.centers[b];
        if (pa.x != pb.x) return pa.x < pb.x;
        if (pa.y != pb.y) return pa.y < pb.y;
        return a < b;
    });
    std::vector<bool> removed(inst.size(), false);
    std::vector<std::size_t> chosen;
    for (std::size_t i : by_x) {
        if (removed[i]) continue;
        chosen.push_back(i);
        for (std::size_t j : by_x) {
            if (!removed[j] && (j == i || disks_intersect(inst, i, j, tol))) removed[j] = true;
        }
    }
    return chosen;
}

/// Full circle of radius R about `center`, traversed once from `start`.
struct DetourArc {
    Point center;
    double radius = 0.0;
    double start_angle = 0.0;
    double sweep = 2.0 * std::numbers::pi;

    [[nodiscard]] double length() const { return radius * std::abs(sweep); }
};

/// Base tour on the subset plus one spliced detour circle per subset disk.
struct AugmentedTour {
    Tour base;
    /// Where the tour leaves for the detour: one point per base position, on
    /// the detour circle of that disk.
    std::vector<Point> splice_points;
    std::vector<DetourArc> detours;
    double connector_length = 0.0;
    double total_length = 0.0;
};

/// Common direction used to place splice points. Translating every center by
/// the same vector keeps the polygon length of the centers.
inline constexpr Point kSpliceDirection{0.0, 1.0};

/// Splices a radius-R circle about each subset disk center into `base`.
///
/// Any disk meeting subset disk i has center distance d <= 2R, so it meets
/// the circle of radius R about O_i (distances from O_j to that circle cover
/// [|d - R|, d + R]). Splice points are O_i + R * kSpliceDirection, so the
/// connectors have the length of the base order's center polygon, which is
/// base.length when the base tour sits on the centers.
[[nodiscard]] inline AugmentedTour augment_tour_overlapping(const Instance& inst,
                                                            std::span<const std::size_t> subset,
                                                            const Tour& base, const Tolerance& tol = {}) {
    std::vector<bool> in_subset(inst.size(), false);
    for (std::size_t i : subset) {
        if (i >= inst.size()) throw InvalidInput("subset index out of range");
        in_subset[i] = true;
    }
    if (base.size() != subset.size()) throw InvalidInput("base tour must visit exactly the subset");
    for (std::size_t k = 0; k < base.size(); ++k) {
        const std::size_t disk = subset[base.disk(k)];
        if (!inst.disk(disk).contains(base.touch_points[k], tol.len(inst.radius))) {
            throw InvalidInput("base tour does not touch its subset disk");
        }
    }
    for (std::size_t j = 0; j < inst.size(); ++j) {
        const bool covered = std::any_of(subset.begin(), subset.end(), [&](std::size_t i) {
            return dist(inst.centers[i], inst.centers[j]) <= 2.0 * inst.radius + tol.len(inst.radius);
        });
        if (!covered) throw InvalidInput("disk meets no subset disk: subset is not maximal");
    }

    AugmentedTour out;
    out.base = base;
    const double start_angle = std::atan2(kSpliceDirection.y, kSpliceDirection.x);
    for (std::size_t k = 0; k < base.size(); ++k) {
        const Point c = inst.centers[subset[base.disk(k)]];
        out.splice_points.push_back(c + kSpliceDirection * inst.radius);
        out.detours.push_back({c, inst.radius, start_angle, 2.0 * std::numbers::pi});
    }
    out.connector_length = cycle_length(out.splice_points);
    out.total_length = out.connector_length;
    for (const DetourArc& arc : out.detours) out.total_length += arc.length();
    return out;
}

/// True when every disk of the instance meets the augmented tour (a connector
/// segment or a detour circle). Independent geometric audit.
[[nodiscard]] inline std::vector<std::size_t> uncovered_disks(const Instance& inst, const AugmentedTour& tour,
                                                              const Tolerance& tol = {}) {
    std::vector<std::size_t> missing;
    const double slack = tol.len(inst.radius);
    const std::size_t m = tour.splice_points.size();
    for (std::size_t j = 0; j < inst.size(); ++j) {
        const Point c = inst.centers[j];
        bool hit = false;
        for (const DetourArc& arc : tour.detours) {
            const double d = dist(c, arc.center);
            if (std::abs(d - arc.radius) <= inst.radius + slack) hit = true;
        }
        for (std::size_t k = 0; k < m && !hit; ++k) {
            const Point a = tour.splice_points[k], b = tour.splice_points[(k + 1) % m];
            if (point_segment_distance(c, a, b) <= inst.radius + slack) hit = true;
        }
        if (!hit) missing.push_back(j);
    }
    return missing;
}

/// Detour constants of the augmentation step, |T| <= |T_I| + (A k + B) R.
struct DetourConstants {
    double a_coeff = 0.0;
    double b_coeff = 0.0;
};

/// Constants of the cited curve-based detour.
[[nodiscard]] inline DetourConstants cited_detour_constants() {
    return {2.0 * (std::numbers::pi / 6.0 + std::numbers::sqrt3 - 1.0), 4.0 - std::numbers::sqrt3};
}

/// Constants of the full-circle detour built here.
[[nodiscard]] inline DetourConstants circle_detour_constants() { return {2.0 * std::numbers::pi, 0.0}; }

/// Upper bound |T| <= ((1 + 8/pi) a + 4A/pi) |TSPN*| + (8a + 4A + B) R, the
/// chain through the packing bound and the 2Rk detour bound.
struct OverlapChain {
    double multiplicative = 0.0;
    double additive_per_radius = 0.0;

    [[nodiscard]] double bound(double tspn_opt, double radius) const {
        return multiplicative * tspn_opt + additive_per_radius * radius;
    }
};

[[nodiscard]] inline OverlapChain overlap_chain(double a, DetourConstants k) {
    return {(1.0 + 8.0 / std::numbers::pi) * a + 4.0 * k.a_coeff / std::numbers::pi,
            8.0 * a + 4.0 * k.a_coeff + k.b_coeff};
}

struct OverlapBoundReport {
    double subroutine_factor_a = 1.0;
    std::size_t subset_size = 0;
    OverlapChain built;  // with the full-circle detour that is actually output
    OverlapChain cited;  // with the cited curve constants, for comparison
};

struct OverlapSolution {
    std::vector<std::size_t> subset;
    TspSubroutineResult subroutine;
    AugmentedTour tour;
    OverlapBoundReport report;
};

/// Maximal disjoint subset, TSP on its centers, then circle detours.
[[nodiscard]] inline OverlapSolution solve_overlapping(const Instance& inst, const TspOptions& opt = {},
                                                       const Tolerance& tol = {}) {
    inst.validate(tol);
    OverlapSolution sol;
    sol.subset = greedy_maximal_disjoint(inst, tol);
    std::vector<Point> sub_centers;
    for (std::size_t i : sol.subset) sub_centers.push_back(inst.centers[i]);
    sol.subroutine = tsp_subroutine(sub_centers, opt);

    Tour base;
    base.order = sol.subroutine.order;
    for (std::size_t k : base.order) base.touch_points.push_back(sub_centers[k]);
    base.length = cycle_length(base.touch_points);

    sol.tour = augment_tour_overlapping(inst, sol.subset, base, tol);
    sol.report.subroutine_factor_a = sol.subroutine.approx_factor_a;
    sol.report.subset_size = sol.subset.size();
    sol.report.built = overlap_chain(sol.subroutine.approx_factor_a, circle_detour_constants());
    sol.report.cited = overlap_chain(sol.subroutine.approx_factor_a, cited_detour_constants());
    return sol;
}

// ---------------------------------------------------------------------------
// Line-transversal case
// ---------------------------------------------------------------------------

/// Frame with `axis` along the farthest pair of centers; coordinates (s, t)
/// are projections onto axis and its normal, measured from `origin`.
struct TransversalFrame {
    Point origin;
    Point axis{1.0, 0.0};
    Point normal{0.0, 1.0};

    [[nodiscard]] Point local(Point p) const { return {dot(p - origin, axis), dot(p - origin, normal)}; }
    [[nodiscard]] Point world(Point st) const { return origin + axis * st.x + normal * st.y; }
};

[[nodiscard]] inline TransversalFrame farthest_pair_frame(const Instance& inst) {
    TransversalFrame f;
    f.origin = inst.centers.front();
    double best = -1.0;
    for (std::size_t i = 0; i < inst.size(); ++i) {
        for (std::size_t j = i + 1; j < inst.size(); ++j) {
            const double d = dist(inst.centers[i], inst.centers[j]);
            if (d > best) {
                best = d;
                f.origin = inst.centers[i];
                f.axis = unit(inst.centers[j] - inst.centers[i]);
            }
        }
    }
    if (best <= 0.0) f.axis = {1.0, 0.0};
    f.normal = perp(f.axis);
    return f;
}

struct StabbingSolution {
    Point start;
    Point end;
    OrderPermutation induced_order;
    /// Where the segment crosses each induced segment, aligned with induced_order.
    std::vector<Point> touch_points;
    double tour_length = 0.0;  // out and back: 2 |segment|

    [[nodiscard]] Tour as_tour() const {
        Tour t;
        t.order = induced_order;
        t.touch_points = touch_points;
        t.length = cycle_length(touch_points);
        return t;
    }
};

/// Shortest segment stabbing the per-disk segments of length 2R through each
/// center, orthogonal to the farthest pair of centers. Returns nullopt when no
/// line in that family stabs them all.
///
/// In the frame of the farthest pair every induced segment is vertical, at
/// abscissa s_i spanning [t_i - R, t_i + R]; a stabbing line t = m s + q must
/// cross all of them, so the segment spans [s_min, s_max] and has length
/// (s_max - s_min) sqrt(1 + m^2). The feasible slopes form an interval whose
/// ends are slopes through pairs of segment endpoints, so the minimum-|m|
/// slope is 0 or one of those candidates.
[[nodiscard]] inline std::optional<StabbingSolution> stabbing_segment(const Instance& inst,
                                                                      const Tolerance& tol = {}) {
    inst.validate(tol);
    const std::size_t n = inst.size();
    const double r = inst.radius;
    const TransversalFrame frame = farthest_pair_frame(inst);
    std::vector<Point> st(n);
    for (std::size_t i = 0; i < n; ++i) st[i] = frame.local(inst.centers[i]);

    const double slack = tol.len(r);
    auto intercept_range = [&](double m) {
        double lo = -std::numeric_limits<double>::infinity();
        double hi = std::numeric_limits<double>::infinity();
        for (const Point& p : st) {
            lo = std::max(lo, p.y - r - m * p.x);
            hi = std::min(hi, p.y + r - m * p.x);
        }
        return std::pair{lo, hi};
    };
    auto feasible = [&](double m) {
        auto [lo, hi] = intercept_range(m);
        return lo <= hi + slack;
    };

    std::optional<double> slope;
    if (feasible(0.0)) {
        slope = 0.0;
    } else {
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                const double ds = st[i].x - st[j].x;
                if (std::abs(ds) <= slack) continue;
                for (double ti : {st[i].y - r, st[i].y + r}) {
                    for (double tj : {st[j].y - r, st[j].y + r}) {
                        const double m = (ti - tj) / ds;
                        if ((!slope || std::abs(m) < std::abs(*slope)) && feasible(m)) slope = m;
                    }
                }
            }
        }
    }
    if (!slope) return std::nullopt;

    const double m = *slope;
    auto [lo, hi] = intercept_range(m);
    const double q = 0.5 * (lo + hi);

    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return st[a].x < st[b].x; });

    StabbingSolution sol;
    const double s0 = st[idx.front()].x, s1 = st[idx.back()].x;
    sol.start = frame.world({s0, m * s0 + q});
    sol.end = frame.world({s1, m * s1 + q});
    sol.induced_order = OrderPermutation(idx);
    for (std::size_t i : idx) sol.touch_points.push_back(frame.world({st[i].x, m * st[i].x + q}));
    sol.tour_length = 2.0 * dist(sol.start, sol.end);
    return sol;
}

struct RectangleSolution {
    TransversalFrame frame;
    /// Corners in the transversal frame: [s0, s1] x [t0, t1].
    double s0 = 0.0, s1 = 0.0, t0 = 0.0, t1 = 0.0;
    double perimeter = 0.0;
    /// Tour along the rectangle boundary, touching each disk at the boundary
    /// point nearest its center; never longer than the perimeter.
    Tour tour;
    /// True when the tightest rectangle left a disk off its boundary and the
    /// rectangle spanned by the induced segments was used instead.
    bool fell_back = false;

    [[nodiscard]] std::array<Point, 4> corners() const {
        return {frame.world({s0, t0}), frame.world({s1, t0}), frame.world({s1, t1}), frame.world({s0, t1})};
    }
};

namespace detail {

/// Distance from local point p to the boundary of rectangle [s0,s1]x[t0,t1],
/// plus the nearest boundary point and its perimeter parameter.
struct RectBoundaryHit {
    double distance = 0.0;
    Point nearest;
    double param = 0.0;
};

inline RectBoundaryHit rect_boundary_nearest(Point p, double s0, double s1, double t0, double t1) {
    const std::array<Point, 4> c{Point{s0, t0}, Point{s1, t0}, Point{s1, t1}, Point{s0, t1}};
    RectBoundaryHit best{std::numeric_limits<double>::infinity(), {}, 0.0};
    double offset = 0.0;
    for (std::size_t k = 0; k < 4; ++k) {
        const Point a = c[k], b = c[(k + 1) % 4];
        const Point ab = b - a;
        const double len2 = dot(ab, ab);
        const double t = len2 > 0.0 ? std::clamp(dot(p - a, ab) / len2, 0.0, 1.0) : 0.0;
        const Point q = a + ab * t;
        const double d = dist(p, q);
        if (d < best.distance) best = {d, q, offset + t * std::sqrt(len2)};
        offset += std::sqrt(len2);
    }
    return best;
}

/// Minimum-perimeter [s0,s1] for a fixed vertical range [t0,t1] such that the
/// rectangle region meets every disk: disk i forces s0 <= s_i + w_i and
/// s1 >= s_i - w_i with w_i = sqrt(R^2 - dy_i^2).
inline std::optional<std::pair<double, double>> horizontal_range(std::span<const Point> st, double r, double t0,
                                                                 double t1) {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    for (const Point& p : st) {
        const double dy = std::max({0.0, t0 - p.y, p.y - t1});
        if (dy > r) return std::nullopt;
        const double w = std::sqrt(r * r - dy * dy);
        lo = std::min(lo, p.x + w);
        hi = std::max(hi, p.x - w);
    }
    return std::pair{lo, hi};
}

inline double rect_half_perimeter(std::span<const Point> st, double r, double t0, double t1) {
    auto range = horizontal_range(st, r, t0, t1);
    if (!range) return std::numeric_limits<double>::infinity();
    return std::max(0.0, range->second - range->first) + (t1 - t0);
}

}  // namespace detail

/// Smallest-perimeter rectangle, aligned with the farthest-pair frame, whose
/// region meets every disk; its boundary is the tour. Requires the induced
/// segments to admit a line transversal, otherwise nullopt.
///
/// Any tour's bounding box in this frame meets every disk and the tour has
/// length >= 2 sqrt(w^2 + h^2) >= sqrt(2) (w + h), so the perimeter is at most
/// sqrt(2) times the optimal tour. The rectangle is found by minimizing the
/// half perimeter over the vertical range (a convex function of t0, t1).
[[nodiscard]] inline std::optional<RectangleSolution> rectangle_transversal(const Instance& inst,
                                                                            const Tolerance& tol = {}) {
    const auto stab = stabbing_segment(inst, tol);
    if (!stab) return std::nullopt;

    const std::size_t n = inst.size();
    const double r = inst.radius;
    RectangleSolution sol;
    sol.frame = farthest_pair_frame(inst);
    std::vector<Point> st(n);
    for (std::size_t i = 0; i < n; ++i) st[i] = sol.frame.local(inst.centers[i]);

    // Every disk meets the region only if t0 <= min(t_i + R) and t1 >= max(t_i - R).
    double lo_t = std::numeric_limits<double>::infinity(), hi_t = -lo_t;
    double t0_cap = lo_t, t1_floor = hi_t;
    for (const Point& p : st) {
        lo_t = std::min(lo_t, p.y - r);
        hi_t = std::max(hi_t, p.y + r);
        t0_cap = std::min(t0_cap, p.y + r);
        t1_floor = std::max(t1_floor, p.y - r);
    }
    const double xtol = 1e-12 * r;

    // Nested minimization; the inner minimum over t1 is convex in t0.
    auto inner = [&](double t0, double* best_t1) {
        const double a = std::max(t0, t1_floor);
        auto f = [&](double t1) { return detail::rect_half_perimeter(st, r, t0, t1); };
        double t1 = detail::brent_minimize(f, a, hi_t, xtol, 200);
        if (f(a) <= f(t1)) t1 = a;
        if (best_t1) *best_t1 = t1;
        return f(t1);
    };
    const double t0 = detail::brent_minimize([&](double t) { return inner(t, nullptr); }, lo_t, t0_cap, xtol, 200);
    double t1 = t0;
    inner(t0, &t1);

    auto assign = [&](double s0, double s1, double a, double b) {
        sol.s0 = s0;
        sol.s1 = s1;
        sol.t0 = a;
        sol.t1 = b;
        sol.perimeter = 2.0 * ((s1 - s0) + (b - a));
    };
    if (auto range = detail::horizontal_range(st, r, t0, t1)) {
        double s0 = range->first, s1 = range->second;
        if (s1 < s0) s0 = s1 = 0.5 * (s0 + s1);
        assign(s0, s1, t0, t1);
    } else {
        assign(0.0, 0.0, 0.0, 0.0);
    }

    const double slack = tol.len(r);
    auto boundary_touches_all = [&]() {
        return std::all_of(st.begin(), st.end(), [&](const Point& p) {
            return detail::rect_boundary_nearest(p, sol.s0, sol.s1, sol.t0, sol.t1).distance <= r + slack;
        });
    };
    if (!boundary_touches_all()) {
        // Centers span s in [s_min, s_max] and t within 2R of the stabbing
        // line, which stays within R of the axis; so the band between
        // max(t_i - R) and min(t_i + R) is at most 2R tall and every induced
        // segment reaches one of its two edges.
        double s0 = std::numeric_limits<double>::infinity(), s1 = -s0;
        for (const Point& p : st) {
            s0 = std::min(s0, p.x);
            s1 = std::max(s1, p.x);
        }
        const double a = std::min(t0_cap, t1_floor), b = std::max(t0_cap, t1_floor);
        if (t1_floor <= t0_cap) {
            const double mid = 0.5 * (a + b);
            assign(s0, s1, mid, mid);
        } else {
            assign(s0, s1, a, b);
        }
        sol.fell_back = true;
    }

    std::vector<std::pair<double, std::size_t>> along;
    std::vector<Point> touch(n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto hit = detail::rect_boundary_nearest(st[i], sol.s0, sol.s1, sol.t0, sol.t1);
        touch[i] = sol.frame.world(hit.nearest);
        along.emplace_back(hit.param, i);
    }
    std::stable_sort(along.begin(), along.end());
    std::vector<std::size_t> order;
    for (const auto& [param, i] : along) {
        order.push_back(i);
        sol.tour.touch_points.push_back(touch[i]);
    }
    sol.tour.order = OrderPermutation(order);
    sol.tour.length = cycle_length(sol.tour.touch_points);
    return sol;
}

}  // namespace tspn
