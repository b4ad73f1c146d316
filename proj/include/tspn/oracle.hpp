#pragma once

// Brute-force ground truth: exact TSP on points, optimal touch points for a
// fixed visiting order, and exact TSPN over all orders for small instances.

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <numeric>
#include <utility>
#include <vector>

#include "tspn/geometry.hpp"

namespace tspn {

/// Cyclic visiting order over disk (or point) indices.
class OrderPermutation {
public:
    OrderPermutation() = default;
    explicit OrderPermutation(std::vector<std::size_t> order) : order_(std::move(order)) { validate(); }

    static OrderPermutation identity(std::size_t n) {
        std::vector<std::size_t> v(n);
        std::iota(v.begin(), v.end(), std::size_t{0});
        return OrderPermutation(std::move(v));
    }

    [[nodiscard]] std::size_t size() const { return order_.size(); }
    [[nodiscard]] std::size_t operator[](std::size_t i) const { return order_[i]; }
    [[nodiscard]] std::size_t at_cyclic(std::size_t i) const { return order_[i % order_.size()]; }
    [[nodiscard]] const std::vector<std::size_t>& indices() const { return order_; }
    [[nodiscard]] auto begin() const { return order_.begin(); }
    [[nodiscard]] auto end() const { return order_.end(); }
    bool operator==(const OrderPermutation&) const = default;

    /// Rotation that starts at the smallest index, oriented so the second entry
    /// is smaller than the last one. Two orders describe the same cycle iff
    /// their canonical forms are equal.
    [[nodiscard]] OrderPermutation canonical() const {
        auto [rotation, reversed] = canonical_map();
        return OrderPermutation(remap(order_, rotation, reversed));
    }

    /// Position shift and direction flip that produce the canonical form.
    [[nodiscard]] std::pair<std::size_t, bool> canonical_map() const {
        const std::size_t n = order_.size();
        if (n == 0) return {0, false};
        const std::size_t start = static_cast<std::size_t>(
            std::min_element(order_.begin(), order_.end()) - order_.begin());
        const bool reversed = n > 2 && order_[(start + 1) % n] > order_[(start + n - 1) % n];
        return {start, reversed};
    }

    template <typename T>
    static std::vector<T> remap(const std::vector<T>& items, std::size_t start, bool reversed) {
        const std::size_t n = items.size();
        std::vector<T> out;
        out.reserve(n);
        for (std::size_t k = 0; k < n; ++k) {
            const std::size_t i = reversed ? (start + n - k) % n : (start + k) % n;
            out.push_back(items[i]);
        }
        return out;
    }

private:
    void validate() const {
        std::vector<bool> seen(order_.size(), false);
        for (std::size_t v : order_) {
            if (v >= order_.size() || seen[v]) throw InvalidInput("order is not a permutation of 0..n-1");
            seen[v] = true;
        }
    }

    std::vector<std::size_t> order_;
};

/// A closed tour visiting disks in `order`, touching disk order[i] at touch_points[i].
struct Tour {
    OrderPermutation order;
    std::vector<Point> touch_points;
    double length = 0.0;
    bool converged = true;
    std::size_t sweeps = 0;

    [[nodiscard]] std::size_t size() const { return touch_points.size(); }
    [[nodiscard]] Point point(std::size_t i) const { return touch_points[i % touch_points.size()]; }
    [[nodiscard]] std::size_t disk(std::size_t i) const { return order.at_cyclic(i); }
};

/// Same tour, rotated and oriented so its order is canonical.
[[nodiscard]] inline Tour canonical_tour(Tour tour) {
    auto [start, reversed] = tour.order.canonical_map();
    tour.order = OrderPermutation(OrderPermutation::remap(tour.order.indices(), start, reversed));
    tour.touch_points = OrderPermutation::remap(tour.touch_points, start, reversed);
    return tour;
}

/// Closed polygon length of the centers visited in `order`.
[[nodiscard]] inline double order_length(std::span<const Point> points, const OrderPermutation& order) {
    const std::size_t n = order.size();
    if (n < 2) return 0.0;
    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i) total += dist(points[order[i]], points[order.at_cyclic(i + 1)]);
    return total;
}

struct PointTour {
    OrderPermutation order;
    double length = 0.0;
};

/// Held-Karp over subsets; exact for 2 <= n <= 15.
[[nodiscard]] inline PointTour tsp_exact_points(std::span<const Point> points) {
    const std::size_t n = points.size();
    if (n < 2 || n > 15) throw InvalidInput("tsp_exact_points supports 2 <= n <= 15");

    const std::size_t m = n - 1;  // node k+1 <-> bit k
    const std::size_t full = (std::size_t{1} << m) - 1;
    constexpr double inf = std::numeric_limits<double>::infinity();
    std::vector<double> cost((full + 1) * m, inf);
    std::vector<std::uint8_t> parent((full + 1) * m, 0);
    auto at = [m](std::size_t mask, std::size_t k) { return mask * m + k; };

    for (std::size_t k = 0; k < m; ++k) cost[at(std::size_t{1} << k, k)] = dist(points[0], points[k + 1]);

    for (std::size_t mask = 1; mask <= full; ++mask) {
        for (std::size_t k = 0; k < m; ++k) {
            if (!(mask & (std::size_t{1} << k))) continue;
            const double base = cost[at(mask, k)];
            if (base == inf) continue;
            for (std::size_t j = 0; j < m; ++j) {
                if (mask & (std::size_t{1} << j)) continue;
                const std::size_t next = mask | (std::size_t{1} << j);
                const double c = base + dist(points[k + 1], points[j + 1]);
                if (c < cost[at(next, j)]) {
                    cost[at(next, j)] = c;
                    parent[at(next, j)] = static_cast<std::uint8_t>(k);
                }
            }
        }
    }

    double best = inf;
    std::size_t last = 0;
    for (std::size_t k = 0; k < m; ++k) {
        const double c = cost[at(full, k)] + dist(points[k + 1], points[0]);
        if (c < best) {
            best = c;
            last = k;
        }
    }

    std::vector<std::size_t> rev;
    std::size_t mask = full;
    std::size_t k = last;
    while (true) {
        rev.push_back(k + 1);
        const std::size_t prev_mask = mask & ~(std::size_t{1} << k);
        if (prev_mask == 0) break;
        k = parent[at(mask, k)];
        mask = prev_mask;
    }
    std::vector<std::size_t> order{0};
    order.insert(order.end(), rev.rbegin(), rev.rend());
    return {OrderPermutation(std::move(order)).canonical(), best};
}

/// Calls `visit` once per distinct undirected cycle on n >= 3 nodes: every
/// permutation starting at 0 whose second entry is smaller than its last.
template <typename Visit>
void for_each_canonical_order(std::size_t n, Visit&& visit) {
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    do {
        if (n > 2 && order[1] > order[n - 1]) continue;
        visit(std::as_const(order));
    } while (std::next_permutation(order.begin() + 1, order.end()));
}

/// Exhaustive enumeration of all (n-1)!/2 cycles; 2 <= n <= 9. Cross-check for
/// `tsp_exact_points`.
[[nodiscard]] inline PointTour tsp_enumerate_points(std::span<const Point> points) {
    const std::size_t n = points.size();
    if (n < 2 || n > 9) throw InvalidInput("tsp_enumerate_points supports 2 <= n <= 9");
    PointTour best{OrderPermutation::identity(n), std::numeric_limits<double>::infinity()};
    for_each_canonical_order(n, [&](const std::vector<std::size_t>& order) {
        double len = 0.0;
        for (std::size_t i = 0; i < n; ++i) len += dist(points[order[i]], points[order[(i + 1) % n]]);
        if (len < best.length) best = {OrderPermutation(order), len};
    });
    return best;
}

namespace detail {

/// Brent's parabolic/golden-section minimizer on [a, b].
template <typename F>
double brent_minimize(F&& f, double a, double b, double xtol, int max_iter = 100) {
    constexpr double golden = 0.3819660112501051;
    double x = a + golden * (b - a);
    double w = x, v = x;
    double fx = f(x), fw = fx, fv = fx;
    double d = 0.0, e = 0.0;
    for (int iter = 0; iter < max_iter; ++iter) {
        const double mid = 0.5 * (a + b);
        const double tol1 = xtol + 1e-14 * std::abs(x);
        const double tol2 = 2.0 * tol1;
        if (std::abs(x - mid) <= tol2 - 0.5 * (b - a)) break;
        bool parabolic = false;
        if (std::abs(e) > tol1) {
            double r = (x - w) * (fx - fv);
            double q = (x - v) * (fx - fw);
            double p = (x - v) * q - (x - w) * r;
            q = 2.0 * (q - r);
            if (q > 0.0) p = -p;
            q = std::abs(q);
            const double e_prev = e;
            e = d;
            if (std::abs(p) < std::abs(0.5 * q * e_prev) && p > q * (a - x) && p < q * (b - x)) {
                d = p / q;
                const double u = x + d;
                if (u - a < tol2 || b - u < tol2) d = x < mid ? tol1 : -tol1;
                parabolic = true;
            }
        }
        if (!parabolic) {
            e = (x < mid) ? b - x : a - x;
            d = golden * e;
        }
        const double u = std::abs(d) >= tol1 ? x + d : x + (d > 0.0 ? tol1 : -tol1);
        const double fu = f(u);
        if (fu <= fx) {
            if (u < x) b = x; else a = x;
            v = w; fv = fw;
            w = x; fw = fx;
            x = u; fx = fu;
        } else {
            if (u < x) a = u; else b = u;
            if (fu <= fw || w == x) {
                v = w; fv = fw;
                w = u; fw = fu;
            } else if (fu <= fv || v == x || v == w) {
                v = u; fv = fu;
            }
        }
    }
    return x;
}

inline double wrap_angle(double a) {
    constexpr double two_pi = 2.0 * std::numbers::pi;
    a = std::fmod(a + std::numbers::pi, two_pi);
    if (a < 0.0) a += two_pi;
    return a - std::numbers::pi;
}

}  // namespace detail

struct TouchOptions {
    /// Coarse samples along the arc between the directions to prev and next.
    std::size_t coarse_samples = 64;
    /// Angular tolerance of the refinement, radians.
    double angle_tol = 1e-11;
};

struct TouchUpdate {
    Point point;
    double objective = 0.0;  // |prev - point| + |point - next|
};

/// The point of the closed disk minimizing |prev - p| + |p - next|.
///
/// If the segment prev-next meets the disk every point of the chord is optimal;
/// the one nearest the segment midpoint is returned, which keeps coordinate
/// descent from stalling when consecutive touch points coincide (overlapping
/// disks). Otherwise the minimizer lies on the boundary arc between the
/// directions to prev and next; it is bracketed by coarse sampling of that arc
/// and refined with Brent's method.
[[nodiscard]] inline TouchUpdate touch_point_update(Point prev, Point next, const Disk& disk,
                                                    const TouchOptions& opt = {}) {
    if (!prev.finite() || !next.finite()) throw InvalidInput("touch_point_update: non-finite input");
    const Point c = disk.center;
    const double r = disk.radius;
    const Point seg = next - prev;
    const double len2 = dot(seg, seg);

    if (len2 == 0.0) {
        const double d = dist(prev, c);
        if (d <= r) return {prev, 0.0};
        return {c + (prev - c) * (r / d), 2.0 * (d - r)};
    }

    // Chord of the infinite line, clipped to the segment.
    const Point pc = prev - c;
    const double half_b = dot(pc, seg) / len2;
    const double cc = (dot(pc, pc) - r * r) / len2;
    const double disc = half_b * half_b - cc;
    if (disc >= 0.0) {
        const double root = std::sqrt(disc);
        const double t0 = std::max(0.0, -half_b - root);
        const double t1 = std::min(1.0, -half_b + root);
        if (t0 <= t1) {
            const double t = std::clamp(0.5, t0, t1);
            return {prev + seg * t, std::sqrt(len2)};
        }
    }

    const Point pn = next - c;
    const double phi_a = std::atan2(pc.y, pc.x);
    const double delta = detail::wrap_angle(std::atan2(pn.y, pn.x) - phi_a);
    auto objective = [&](double s) {
        const Point p = c + polar(r, phi_a + s * delta);
        return dist(prev, p) + dist(p, next);
    };

    const std::size_t samples = std::max<std::size_t>(opt.coarse_samples, 2);
    std::size_t best_k = 0;
    double best_val = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k <= samples; ++k) {
        const double val = objective(static_cast<double>(k) / static_cast<double>(samples));
        if (val < best_val) {
            best_val = val;
            best_k = k;
        }
    }
    const double step = 1.0 / static_cast<double>(samples);
    const double lo = std::max(0.0, (static_cast<double>(best_k) - 1.0) * step);
    const double hi = std::min(1.0, (static_cast<double>(best_k) + 1.0) * step);
    const double s_tol = std::abs(delta) > 0.0 ? opt.angle_tol / std::abs(delta) : 1.0;
    double s = detail::brent_minimize(objective, lo, hi, s_tol);
    double val = objective(s);
    if (best_val < val) {
        s = static_cast<double>(best_k) * step;
        val = best_val;
    }
    return {c + polar(r, phi_a + s * delta), val};
}

struct FixedOrderOptions {
    std::size_t max_sweeps = 10000;
    Tolerance tol;
    TouchOptions touch;
    /// Called after every sweep with (sweep, tour length).
    std::function<void(std::size_t, double)> on_sweep;
};

namespace detail {

/// Cyclic coordinate descent over `disks` (in visiting order) from `pts`.
/// Returns true if a sweep improved by less than eps_len * length before
/// max_sweeps ran out.
inline bool descend(std::span<const Disk> disks, std::vector<Point>& pts, const FixedOrderOptions& opt,
                    std::size_t& sweeps, bool report) {
    const std::size_t n = disks.size();
    double length = cycle_length(pts);
    for (std::size_t sweep = 1; sweep <= opt.max_sweeps; ++sweep) {
        for (std::size_t i = 0; i < n; ++i) {
            const Point prev = pts[(i + n - 1) % n];
            const Point next = pts[(i + 1) % n];
            pts[i] = touch_point_update(prev, next, disks[i], opt.touch).point;
        }
        const double len = cycle_length(pts);
        const double improvement = length - len;
        length = std::min(length, len);
        ++sweeps;
        if (report && opt.on_sweep) opt.on_sweep(sweep, len);
        if (improvement <= opt.tol.eps_len * len) return true;
    }
    return false;
}

/// Places the skipped disks of one gap on segment a-b, in order and with
/// non-decreasing parameter. Returns the index (into `gap`) of the first disk
/// the segment cannot serve, or gap.size() on success.
inline std::size_t place_on_segment(Point a, Point b, std::span<const std::size_t> gap, std::span<const Disk> disks,
                                    std::vector<Point>& pts, const Tolerance& tol) {
    double t = 0.0;
    for (std::size_t k = 0; k < gap.size(); ++k) {
        const Disk& d = disks[gap[k]];
        if (a == b) {
            if (!d.contains(a, tol.len(d.radius))) return k;
            pts[gap[k]] = a;
            continue;
        }
        const SegmentDiskHit hit = segment_disk_intersect(a, b, d, tol);
        if (!hit.hit()) return k;
        t = std::max(t, hit.t_enter);
        if (t > hit.t_exit) return k;
        pts[gap[k]] = a + (b - a) * t;
    }
    return gap.size();
}

/// Active-set refinement. Disks the tour crosses in a straight line are
/// dropped, the rest re-optimized, and the dropped ones placed back on the
/// new segments. Dropping constraints can only shorten the tour, so when all
/// of them fit the result is optimal; disks that do not fit are kept for good.
inline void polish_pass_throughs(std::span<const Disk> disks, std::vector<Point>& pts, const FixedOrderOptions& opt,
                                 std::size_t& sweeps) {
    const std::size_t n = disks.size();
    if (n < 3) return;
    std::vector<bool> skipped(n, false), pinned(n, false);
    std::vector<Point> best = pts;
    double best_len = cycle_length(pts);

    for (std::size_t round = 0; round < 2 * n + 2; ++round) {
        std::vector<std::size_t> kept;
        for (std::size_t i = 0; i < n; ++i) {
            if (!skipped[i]) kept.push_back(i);
        }
        std::vector<Disk> sub_disks;
        std::vector<Point> sub_pts;
        for (std::size_t i : kept) {
            sub_disks.push_back(disks[i]);
            sub_pts.push_back(pts[i]);
        }
        descend(sub_disks, sub_pts, opt, sweeps, false);
        for (std::size_t k = 0; k < kept.size(); ++k) pts[kept[k]] = sub_pts[k];

        bool placed_all = true;
        for (std::size_t k = 0; k < kept.size(); ++k) {
            const std::size_t from = kept[k], to = kept[(k + 1) % kept.size()];
            std::vector<std::size_t> gap;
            for (std::size_t i = (from + 1) % n; i != to; i = (i + 1) % n) gap.push_back(i);
            if (gap.empty()) continue;
            const std::size_t bad = place_on_segment(pts[from], pts[to], gap, disks, pts, opt.tol);
            if (bad < gap.size()) {
                skipped[gap[bad]] = false;
                pinned[gap[bad]] = true;
                placed_all = false;
            }
        }
        if (!placed_all) continue;

        const double len = cycle_length(pts);
        if (len <= best_len) {
            best_len = len;
            best = pts;
        }

        // Newly crossed disks among those kept; never two neighbours at once.
        std::vector<std::size_t> drop;
        const std::size_t m = kept.size();
        if (m <= 2) break;
        for (std::size_t k = 0; k < m; ++k) {
            const std::size_t i = kept[k];
            if (pinned[i]) continue;
            if (!drop.empty() && drop.back() == kept[(k + m - 1) % m]) continue;
            if (k == m - 1 && !drop.empty() && drop.front() == kept[0]) continue;
            const Point a = pts[kept[(k + m - 1) % m]], b = pts[kept[(k + 1) % m]];
            if (a == b) continue;
            if (segment_disk_intersect(a, b, disks[i], opt.tol).kind == Contact::secant) drop.push_back(i);
        }
        if (drop.empty() || m - drop.size() < 2) break;
        for (std::size_t i : drop) skipped[i] = true;
    }
    pts = std::move(best);
}

}  // namespace detail

/// Optimal touch points for a fixed visiting order, by cyclic coordinate
/// descent followed by the pass-through refinement above. Stops when a full
/// sweep shortens the tour by less than eps_len * length; `converged` is false
/// if max_sweeps ran out first.
[[nodiscard]] inline Tour tspn_fixed_order(const Instance& inst, const OrderPermutation& order,
                                           const FixedOrderOptions& opt = {}) {
    const std::size_t n = inst.size();
    if (n < 2) throw InvalidInput("tspn_fixed_order needs at least two disks");
    if (order.size() != n) throw InvalidInput("order size does not match instance");

    Tour tour;
    tour.order = order;
    std::vector<Disk> disks;
    for (std::size_t i = 0; i < n; ++i) {
        disks.push_back(inst.disk(order[i]));
        tour.touch_points.push_back(inst.centers[order[i]]);
    }
    tour.converged = detail::descend(disks, tour.touch_points, opt, tour.sweeps, true);
    detail::polish_pass_throughs(disks, tour.touch_points, opt, tour.sweeps);
    tour.length = cycle_length(tour.touch_points);
    return tour;
}

/// Moves interior touch points onto their disk boundary without lengthening
/// the tour. A point the tour passes straight through, inside the disk or at
/// either chord end, is slid along the chord of prev-next to the end nearer
/// `next`; any other interior point is re-optimized onto the boundary.
[[nodiscard]] inline Tour snap_to_boundary(const Instance& inst, Tour tour, const Tolerance& tol = {}) {
    const std::size_t n = tour.size();
    if (n < 2) return tour;
    auto& pts = tour.touch_points;
    for (int pass = 0; pass < 3; ++pass) {
        for (std::size_t i = 0; i < n; ++i) {
            const Disk d = inst.disk(tour.disk(i));
            const Point prev = pts[(i + n - 1) % n];
            const Point next = pts[(i + 1) % n];
            const bool interior = dist(pts[i], d.center) < d.radius * (1.0 - 1e-12);
            const bool on_chord = point_segment_distance(pts[i], prev, next) <= tol.len(d.radius);
            if (!interior && !on_chord) continue;
            if (prev == next || d.contains(prev) || d.contains(next)) continue;
            const SegmentDiskHit hit = segment_disk_intersect(prev, next, d, tol);
            if (hit.kind == Contact::secant) {
                pts[i] = hit.exit;
            } else if (interior) {
                const Point candidate = touch_point_update(prev, next, d).point;
                if (dist(prev, candidate) + dist(candidate, next) <=
                    dist(prev, pts[i]) + dist(pts[i], next) + tol.len(d.radius)) {
                    pts[i] = candidate;
                }
            }
        }
    }
    tour.length = cycle_length(pts);
    return tour;
}

struct ExactOptions {
    FixedOrderOptions fixed;
};

/// Lower bound on any tour in `order`: each leg must bridge the gap between
/// consecutive disks.
[[nodiscard]] inline double order_gap_bound(const Instance& inst, const std::vector<std::size_t>& order) {
    double lb = 0.0;
    const std::size_t n = order.size();
    for (std::size_t i = 0; i < n; ++i) {
        lb += std::max(0.0, dist(inst.centers[order[i]], inst.centers[order[(i + 1) % n]]) - 2.0 * inst.radius);
    }
    return lb;
}

/// Exact TSPN for 3 <= n <= 8: the best fixed-order tour over every distinct
/// cycle. Orders are visited by increasing gap bound and skipped once the bound
/// reaches the incumbent, which never discards the optimum.
[[nodiscard]] inline Tour tspn_exact_small(const Instance& inst, const ExactOptions& opt = {}) {
    const std::size_t n = inst.size();
    if (n < 3 || n > 8) throw InvalidInput("tspn_exact_small supports 3 <= n <= 8");

    std::vector<std::pair<double, std::vector<std::size_t>>> candidates;
    for_each_canonical_order(n, [&](const std::vector<std::size_t>& order) {
        candidates.emplace_back(order_gap_bound(inst, order), order);
    });
    std::stable_sort(candidates.begin(), candidates.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });

    Tour best;
    best.length = std::numeric_limits<double>::infinity();
    for (const auto& [bound, order] : candidates) {
        if (bound >= best.length) break;
        Tour t = tspn_fixed_order(inst, OrderPermutation(order), opt.fixed);
        if (t.length < best.length) best = std::move(t);
    }
    return canonical_tour(std::move(best));
}

}  // namespace tspn
