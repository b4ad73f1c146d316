#pragma once

// Good/bad edge analysis of a tour, beta-triads, the swapped order sigma',
// and the K/N/M accounting behind the two-case approximation bound.

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "tspn/geometry.hpp"
#include "tspn/oracle.hpp"

namespace tspn {

/// beta = asin(1/6) / 2, where the two bound cases balance at alpha = 2.
[[nodiscard]] inline double default_beta() { return 0.5 * std::asin(1.0 / 6.0); }

struct AnalysisParams {
    double beta = default_beta();
    double alpha = 2.0;
    Tolerance tol;

    void validate() const {
        if (!(beta >= 0.0) || beta > std::numbers::pi / 12.0 + 1e-15) {
            throw InvalidInput("beta must lie in [0, pi/12]");
        }
        if (!(alpha > 1.0) || !std::isfinite(alpha)) throw InvalidInput("alpha must be > 1");
        tol.validate();
    }

    /// R / sin(2 beta); infinite at beta = 0.
    [[nodiscard]] double center_cap(double radius) const {
        const double s = std::sin(2.0 * beta);
        return s > 0.0 ? radius / s : std::numeric_limits<double>::infinity();
    }
};

/// Edge i joins tour positions i and i+1 (cyclic).
struct EdgeClass {
    std::size_t index = 0;
    std::size_t from_disk = 0;
    std::size_t to_disk = 0;
    bool bad = false;
    double edge_length = 0.0;
    double center_distance = 0.0;
    double threshold = 0.0;  // f(|O_i O_i+1|, beta) - R
};

[[nodiscard]] inline std::vector<EdgeClass> classify_edges(const Instance& inst, const Tour& tour,
                                                           const AnalysisParams& params) {
    params.validate();
    const std::size_t n = tour.size();
    if (n != inst.size() || tour.order.size() != n) throw InvalidInput("tour does not match instance");
    const double r = inst.radius;
    std::vector<EdgeClass> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        EdgeClass e;
        e.index = i;
        e.from_disk = tour.disk(i);
        e.to_disk = tour.disk(i + 1);
        e.edge_length = dist(tour.point(i), tour.point(i + 1));
        e.center_distance = dist(inst.centers[e.from_disk], inst.centers[e.to_disk]);
        e.threshold = f_beta(e.center_distance, params.beta, r) - r;
        e.bad = e.edge_length <= e.threshold + params.tol.len(r);
        out.push_back(e);
    }
    return out;
}

struct Violation {
    std::string check;
    std::size_t edge = 0;  // first edge involved
    double value = 0.0;
    double limit = 0.0;
};

/// Outcome of a property check: how many cases met the hypothesis, how many
/// were skipped as degenerate, and every failure.
struct CheckReport {
    std::size_t checked = 0;
    std::size_t skipped = 0;
    std::vector<Violation> violations;

    [[nodiscard]] bool ok() const { return violations.empty(); }

    void merge(const CheckReport& o) {
        checked += o.checked;
        skipped += o.skipped;
        violations.insert(violations.end(), o.violations.begin(), o.violations.end());
    }
};

/// Bad edge P1P2: angles O2-O1-P1 and O1-O2-P2 are at most beta. Consecutive
/// bad edges P1P2, P2P3: angle O1-O2-O3 is at most 2 beta.
[[nodiscard]] inline CheckReport check_angle_lemma(const Instance& inst, const Tour& tour,
                                                   const AnalysisParams& params) {
    const auto edges = classify_edges(inst, tour, params);
    const std::size_t n = edges.size();
    const double eps = params.tol.eps_ang;
    CheckReport rep;
    for (std::size_t i = 0; i < n; ++i) {
        const EdgeClass& e = edges[i];
        if (!e.bad) continue;
        const Point o1 = inst.centers[e.from_disk], o2 = inst.centers[e.to_disk];
        try {
            const double a1 = angle(o1, o2, tour.point(i));
            const double a2 = angle(o2, o1, tour.point(i + 1));
            ++rep.checked;
            if (a1 > params.beta + eps) rep.violations.push_back({"angle_at_start", i, a1, params.beta});
            if (a2 > params.beta + eps) rep.violations.push_back({"angle_at_end", i, a2, params.beta});
        } catch (const DegenerateGeometry&) {
            ++rep.skipped;
        }
        const EdgeClass& next = edges[(i + 1) % n];
        if (!next.bad || n < 3) continue;
        try {
            const double turn = angle(o2, o1, inst.centers[next.to_disk]);
            ++rep.checked;
            if (turn > 2.0 * params.beta + eps) rep.violations.push_back({"center_turn", i, turn, 2.0 * params.beta});
        } catch (const DegenerateGeometry&) {
            ++rep.skipped;
        }
    }
    return rep;
}

/// Consecutive bad edges P1P2, P2P3 with |O1O2| <= R / sin(2 beta): the
/// segment P2P3 meets disk 1.
[[nodiscard]] inline CheckReport check_intersection_theorem(const Instance& inst, const Tour& tour,
                                                            const AnalysisParams& params) {
    const auto edges = classify_edges(inst, tour, params);
    const std::size_t n = edges.size();
    CheckReport rep;
    if (n < 3) return rep;
    const double cap = params.center_cap(inst.radius) + params.tol.len(inst.radius);
    for (std::size_t i = 0; i < n; ++i) {
        const EdgeClass& e1 = edges[i];
        const EdgeClass& e2 = edges[(i + 1) % n];
        if (!e1.bad || !e2.bad || e1.center_distance > cap) continue;
        ++rep.checked;
        const Disk d1 = inst.disk(e1.from_disk);
        const Point p2 = tour.point(i + 1), p3 = tour.point(i + 2);
        bool meets;
        if (p2 == p3) {
            meets = d1.contains(p2, params.tol.len(inst.radius));
        } else {
            meets = segment_disk_intersect(p2, p3, d1, params.tol).hit();
        }
        if (!meets) {
            rep.violations.push_back({"segment_misses_disk", i, point_segment_distance(d1.center, p2, p3), d1.radius});
        }
    }
    return rep;
}

/// Good edges: |O_i O_i+1| <= |P_i P_i+1| + (1 + cos beta) R.
[[nodiscard]] inline CheckReport check_good_edge_detour(const Instance& inst, const Tour& tour,
                                                        const AnalysisParams& params) {
    CheckReport rep;
    const double r = inst.radius;
    for (const EdgeClass& e : classify_edges(inst, tour, params)) {
        if (e.bad) continue;
        ++rep.checked;
        const double limit = e.edge_length + (1.0 + std::cos(params.beta)) * r;
        if (e.center_distance > limit + params.tol.len(r)) {
            rep.violations.push_back({"good_edge_detour", e.index, e.center_distance, limit});
        }
    }
    return rep;
}

/// No point strictly between its collinear neighbours with both incident
/// edges bad.
[[nodiscard]] inline CheckReport check_collinear_bad_pairs(const Instance& inst, const Tour& tour,
                                                           const AnalysisParams& params) {
    const auto edges = classify_edges(inst, tour, params);
    const std::size_t n = edges.size();
    CheckReport rep;
    if (n < 3) return rep;
    const double gap = params.tol.len(inst.radius);
    for (std::size_t i = 0; i < n; ++i) {
        if (!edges[i].bad || !edges[(i + 1) % n].bad) continue;
        const Point a = tour.point(i), b = tour.point(i + 1), c = tour.point(i + 2);
        ++rep.checked;
        const Collinearity col = collinear(a, b, c, params.tol);
        const bool strict = dist(a, b) > gap && dist(b, c) > gap;
        if (col.collinear && col.between && strict) {
            rep.violations.push_back({"collinear_bad_pair", i, dist(a, c), 0.0});
        }
    }
    return rep;
}

/// A four-point window P_n - P_1 - P_2 - P_3 (hatted indices in the tour).
/// positions[k] / disks[k] hold n̂, 1̂, 2̂, 3̂ in that order; `reversed` means
/// the window runs against the tour direction.
struct BetaTriad {
    std::array<std::size_t, 4> positions{};
    std::array<std::size_t, 4> disks{};
    std::array<std::size_t, 3> edges{};
    bool reversed = false;
    /// Representative of the straight pass through disk 1̂.
    Point p1;
    /// Where P2P3 enters disk 1̂.
    Point q1;
    /// |P_n P_1| + |P_1 P_2| + |P_2 P_3|.
    double span_length = 0.0;
};

struct TriadDetection {
    std::vector<BetaTriad> triads;
    /// Windows that satisfied the definition but broke a theorem: shared
    /// edges between triads, or P2P3 missing disk 1̂.
    std::vector<std::string> issues;
};

[[nodiscard]] inline TriadDetection detect_beta_triads(const Instance& inst, const Tour& tour,
                                                       const AnalysisParams& params) {
    const auto edges = classify_edges(inst, tour, params);
    const std::size_t n = edges.size();
    if (n < 4) throw InvalidInput("detect_beta_triads needs n >= 4");
    const double cap = params.center_cap(inst.radius) + params.tol.len(inst.radius);

    TriadDetection out;
    for (std::size_t j = 0; j < n; ++j) {
        for (bool reversed : {false, true}) {
            const std::array<std::size_t, 4> w{j, (j + 1) % n, (j + 2) % n, (j + 3) % n};
            BetaTriad t;
            t.reversed = reversed;
            t.positions = reversed ? std::array{w[3], w[2], w[1], w[0]} : w;
            t.edges = {j, (j + 1) % n, (j + 2) % n};
            const std::size_t e12 = (j + 1) % n;
            const std::size_t e23 = reversed ? j : (j + 2) % n;
            if (!edges[e23].bad) continue;

            for (std::size_t k = 0; k < 4; ++k) t.disks[k] = tour.disk(t.positions[k]);
            const Point o1 = inst.centers[t.disks[1]], o2 = inst.centers[t.disks[2]];
            if (dist(o1, o2) > cap) continue;

            const Point pn = tour.point(t.positions[0]);
            const Point p2 = tour.point(t.positions[2]), p3 = tour.point(t.positions[3]);
            Point p1 = tour.point(t.positions[1]);
            const Collinearity lead = collinear(pn, p1, p2, params.tol);
            if (!lead.collinear || !lead.between) continue;

            // A straight pass may sit anywhere on its chord; the chord end
            // nearest P2 represents it.
            const Disk d1 = inst.disk(t.disks[1]);
            if (pn != p2) {
                const SegmentDiskHit pass = segment_disk_intersect(pn, p2, d1, params.tol);
                if (pass.kind == Contact::secant) p1 = pass.exit;
            }
            const bool bad12 = edges[e12].bad ||
                               dist(p1, p2) <= edges[e12].threshold + params.tol.len(inst.radius);
            if (!bad12) continue;
            if (collinear(p1, p2, p3, params.tol).collinear) continue;

            t.p1 = p1;
            t.span_length = dist(pn, p1) + dist(p1, p2) + dist(p2, p3);
            const SegmentDiskHit hit = segment_disk_intersect(p2, p3, d1, params.tol);
            if (hit.hit()) {
                t.q1 = hit.enter;
            } else {
                t.q1 = p2;
                out.issues.push_back("window at position " + std::to_string(j) +
                                     ": segment P2P3 misses disk 1");
            }
            out.triads.push_back(t);
        }
    }

    for (std::size_t a = 0; a < out.triads.size(); ++a) {
        for (std::size_t b = a + 1; b < out.triads.size(); ++b) {
            for (std::size_t ea : out.triads[a].edges) {
                const auto& eb = out.triads[b].edges;
                if (std::find(eb.begin(), eb.end(), ea) != eb.end()) {
                    out.issues.push_back("triads at positions " + std::to_string(out.triads[a].edges[0]) + " and " +
                                         std::to_string(out.triads[b].edges[0]) + " share edge " +
                                         std::to_string(ea));
                    break;
                }
            }
        }
    }
    return out;
}

namespace detail {

inline void require_edge_disjoint(std::span<const BetaTriad> triads, std::size_t n) {
    std::vector<bool> used(n, false);
    for (const BetaTriad& t : triads) {
        for (std::size_t e : t.edges) {
            if (e >= n) throw InvalidInput("triad edge out of range");
            if (used[e]) throw InvalidInput("beta-triads share an edge");
            used[e] = true;
        }
    }
}

}  // namespace detail

/// sigma with the visits of disks 1̂ and 2̂ exchanged inside every triad.
[[nodiscard]] inline OrderPermutation build_sigma_prime(const Tour& tour, std::span<const BetaTriad> triads) {
    detail::require_edge_disjoint(triads, tour.order.size());
    std::vector<std::size_t> order = tour.order.indices();
    for (const BetaTriad& t : triads) std::swap(order[t.positions[1]], order[t.positions[2]]);
    return OrderPermutation(std::move(order));
}

/// The same polyline read in the order sigma': P_n - P_2 - Q_1 - P_3 inside
/// each triad. Its length equals the tour's.
[[nodiscard]] inline Tour sigma_prime_tour(const Tour& tour, std::span<const BetaTriad> triads) {
    Tour out = tour;
    out.order = build_sigma_prime(tour, triads);
    for (const BetaTriad& t : triads) {
        out.touch_points[t.positions[1]] = tour.touch_points[t.positions[2]];
        out.touch_points[t.positions[2]] = t.q1;
    }
    out.length = cycle_length(out.touch_points);
    return out;
}

struct AveragingReport {
    std::size_t triads = 0;
    double tsp_sigma = 0.0;
    double tsp_sigma_prime = 0.0;
    double tsp_common = 0.0;  // center edges outside every triad
    double triad_length = 0.0;
    double lhs = 0.0;  // (|TSP(sigma)| + |TSP(sigma')|) / 2
    double rhs = 0.0;  // |TSP(common)| + L_T + 3 sqrt(3) R k
    double slack = 0.0;
};

[[nodiscard]] inline AveragingReport averaging_bound(const Instance& inst, const Tour& tour,
                                                     std::span<const BetaTriad> triads) {
    const std::size_t n = tour.order.size();
    detail::require_edge_disjoint(triads, n);
    AveragingReport rep;
    rep.triads = triads.size();
    rep.tsp_sigma = order_length(inst.centers, tour.order);
    rep.tsp_sigma_prime = order_length(inst.centers, build_sigma_prime(tour, triads));
    std::vector<bool> in_triad(n, false);
    for (const BetaTriad& t : triads) {
        for (std::size_t e : t.edges) in_triad[e] = true;
        rep.triad_length += t.span_length;
    }
    for (std::size_t e = 0; e < n; ++e) {
        if (!in_triad[e]) rep.tsp_common += dist(inst.centers[tour.disk(e)], inst.centers[tour.disk(e + 1)]);
    }
    rep.lhs = 0.5 * (rep.tsp_sigma + rep.tsp_sigma_prime);
    rep.rhs = rep.tsp_common + rep.triad_length +
              3.0 * std::numbers::sqrt3 * inst.radius * static_cast<double>(rep.triads);
    rep.slack = rep.rhs - rep.lhs;
    return rep;
}

struct TriadReport {
    TriadDetection detection;
    std::optional<OrderPermutation> sigma_prime;  // absent when triads overlap
    std::optional<AveragingReport> averaging;
};

[[nodiscard]] inline TriadReport check_averaging_bound(const Instance& inst, const Tour& tour,
                                                       const AnalysisParams& params) {
    TriadReport rep;
    rep.detection = detect_beta_triads(inst, tour, params);
    try {
        rep.sigma_prime = build_sigma_prime(tour, rep.detection.triads);
        rep.averaging = averaging_bound(inst, tour, rep.detection.triads);
    } catch (const InvalidInput&) {
    }
    return rep;
}

enum class BoundCase { one, two };

/// Case-1 per-disk detour coefficient (1 + cos beta + 2 (alpha - 1)) / alpha.
[[nodiscard]] inline double case_one_coefficient(double beta, double alpha) {
    return (1.0 + std::cos(beta) + 2.0 * (alpha - 1.0)) / alpha;
}

/// Case-2 factor 1 + alpha / (alpha - 1) * 2 / (1 / sin(2 beta) - 2);
/// infinite when the denominator vanishes.
[[nodiscard]] inline double case_two_factor(double beta, double alpha) {
    const double s = std::sin(2.0 * beta);
    if (s <= 0.0) return 1.0;
    const double denom = 1.0 / s - 2.0;
    if (denom <= 0.0) return std::numeric_limits<double>::infinity();
    return 1.0 + alpha / (alpha - 1.0) * 2.0 / denom;
}

struct DetourLedger {
    std::size_t n = 0;
    std::size_t k1 = 0;
    double triad_length = 0.0;  // L_T
    std::size_t good_outside = 0;  // N
    std::size_t bad_outside = 0;   // M
    std::size_t K = 0;
    BoundCase active = BoundCase::one;
    double tspn_length = 0.0;
    double case_one_coefficient = 0.0;
    double case_two_factor = 0.0;
    /// Bound on the optimal tour through the centers for the active case.
    double bound_value = 0.0;
    /// |TSPN| + (1 + cos beta) R K + 2 R (n - K), before the case split.
    double combined_bound = 0.0;
    OrderPermutation sigma_prime;
    /// Bad edges outside triads whose centers are within R / sin(2 beta); the
    /// case-2 lower bound assumes there are none.
    std::size_t short_bad_outside = 0;
    std::vector<std::string> issues;
};

[[nodiscard]] inline DetourLedger build_detour_ledger(const Instance& inst, const Tour& tour,
                                                      const AnalysisParams& params) {
    const auto edges = classify_edges(inst, tour, params);
    const std::size_t n = edges.size();
    if (n < 4) throw InvalidInput("build_detour_ledger needs n >= 4");
    const double r = inst.radius;

    DetourLedger led;
    led.n = n;
    TriadDetection det = detect_beta_triads(inst, tour, params);
    led.issues = det.issues;
    std::vector<BetaTriad> kept;
    std::vector<bool> in_triad(n, false);
    for (const BetaTriad& t : det.triads) {
        const bool clash = std::any_of(t.edges.begin(), t.edges.end(), [&](std::size_t e) { return in_triad[e]; });
        if (clash) continue;
        for (std::size_t e : t.edges) in_triad[e] = true;
        kept.push_back(t);
        led.triad_length += t.span_length;
    }
    led.k1 = kept.size();
    const double cap = params.center_cap(r);
    for (const EdgeClass& e : edges) {
        if (in_triad[e.index]) continue;
        if (e.bad) {
            ++led.bad_outside;
            if (e.center_distance <= cap) ++led.short_bad_outside;
        } else {
            ++led.good_outside;
        }
    }
    led.K = 3 * led.k1 + led.good_outside;
    led.tspn_length = tour.length;
    led.case_one_coefficient = case_one_coefficient(params.beta, params.alpha);
    led.case_two_factor = case_two_factor(params.beta, params.alpha);
    const auto nd = static_cast<double>(n);
    led.active = static_cast<double>(led.K) >= nd / params.alpha ? BoundCase::one : BoundCase::two;
    led.bound_value = led.active == BoundCase::one ? tour.length + led.case_one_coefficient * r * nd
                                                   : led.case_two_factor * tour.length;
    led.combined_bound = tour.length + (1.0 + std::cos(params.beta)) * r * static_cast<double>(led.K) +
                         2.0 * r * static_cast<double>(n - led.K);
    led.sigma_prime = build_sigma_prime(tour, kept);
    return led;
}

// ---------------------------------------------------------------------------
// Closed-form constants
// ---------------------------------------------------------------------------

/// Detour constants of the cited overlapping-disk construction.
[[nodiscard]] inline double overlap_constant_a() { return 2.0 * (std::numbers::pi / 6.0 + std::numbers::sqrt3 - 1.0); }
[[nodiscard]] inline double overlap_constant_b() { return 4.0 - std::numbers::sqrt3; }

/// Factor of the overlapping chain ((1 + 8/pi) a + 4 A / pi).
[[nodiscard]] inline double overlap_chain_factor(double a, double big_a) {
    return (1.0 + 8.0 / std::numbers::pi) * a + 4.0 * big_a / std::numbers::pi;
}

struct FrameworkFactors {
    double case_one = 0.0;
    double case_two = 0.0;
    [[nodiscard]] double worst() const { return std::max(case_one, case_two); }
};

/// Overlapping chain with the case split applied to the subset tour:
/// case 1 uses X = 2 - (1 - cos beta) / alpha in place of 2, case 2 uses the
/// lower bound |TSPN_I| >= Y R k with Y = (alpha - 1) / alpha (1 / (2 sin 2 beta) - 1).
[[nodiscard]] inline FrameworkFactors framework_overlap_factors(double beta, double alpha, double a = 1.0,
                                                                double big_a = overlap_constant_a()) {
    const double x = 2.0 - (1.0 - std::cos(beta)) / alpha;
    const double y = (alpha - 1.0) / alpha * (1.0 / (2.0 * std::sin(2.0 * beta)) - 1.0);
    FrameworkFactors f;
    f.case_one = (1.0 + 4.0 * x / std::numbers::pi) * a + 4.0 * big_a / std::numbers::pi;
    f.case_two = y > 0.0 ? a + (2.0 * a + big_a) / y : std::numeric_limits<double>::infinity();
    return f;
}

struct FrameworkOptimum {
    double beta = 0.0;
    double alpha = 0.0;
    FrameworkFactors factors;
};

/// Minimizes the worse of the two framework factors over beta in (0, pi/12]
/// and alpha in (1, alpha_max]: grid search then coordinate refinement.
[[nodiscard]] inline FrameworkOptimum optimize_framework_overlap(double a = 1.0, double alpha_max = 64.0) {
    FrameworkOptimum best;
    double best_val = std::numeric_limits<double>::infinity();
    const double beta_max = std::numbers::pi / 12.0;
    auto consider = [&](double beta, double alpha) {
        if (beta <= 0.0 || beta > beta_max || alpha <= 1.0 || alpha > alpha_max) return;
        const FrameworkFactors f = framework_overlap_factors(beta, alpha, a);
        if (f.worst() < best_val) {
            best_val = f.worst();
            best = {beta, alpha, f};
        }
    };
    for (int i = 1; i <= 400; ++i) {
        for (int j = 1; j <= 400; ++j) {
            consider(beta_max * i / 400.0, 1.0 + (alpha_max - 1.0) * j / 400.0);
        }
    }
    double db = beta_max / 400.0, da = (alpha_max - 1.0) / 400.0;
    for (int level = 0; level < 60; ++level) {
        const FrameworkOptimum c = best;
        for (int i = -4; i <= 4; ++i) {
            for (int j = -4; j <= 4; ++j) consider(c.beta + db * i / 4.0, c.alpha + da * j / 4.0);
        }
        db *= 0.6;
        da *= 0.6;
    }
    return best;
}

/// alpha = 1 + 2 / (c / sin(2 beta) - 2c - 2).
[[nodiscard]] inline double alpha_for_target(double c, double beta) {
    return 1.0 + 2.0 / (c / std::sin(2.0 * beta) - 2.0 * c - 2.0);
}

enum class ClaimKind {
    approx_equal,  // |value - claimed| <= tolerance
    at_most,       // value <= claimed
    reported,      // printed next to the stated figure, not judged
};

struct ConstantEntry {
    std::string name;
    double value = 0.0;
    double claimed = 0.0;
    ClaimKind kind = ClaimKind::reported;
    double tolerance = 1e-3;

    [[nodiscard]] bool holds() const {
        switch (kind) {
            case ClaimKind::approx_equal: return std::abs(value - claimed) <= tolerance;
            case ClaimKind::at_most: return value <= claimed;
            case ClaimKind::reported: return true;
        }
        return false;
    }
};

/// Closed-form constants of the bound analysis next to their stated values.
[[nodiscard]] inline std::vector<ConstantEntry> evaluate_paper_constants(const AnalysisParams& params = {}) {
    params.validate();
    constexpr double pi = std::numbers::pi;
    const double bs = default_beta();
    const double big_a = overlap_constant_a();
    const double big_b = overlap_constant_b();
    std::vector<ConstantEntry> t;

    t.push_back({"case1_factor_beta_pi_12", 1.0 + (2.0 / pi) * (3.0 + std::cos(pi / 12.0)), 3.525, ClaimKind::at_most});
    t.push_back({"case1_detour_default_beta", (3.0 + std::cos(bs)) / 2.0, 1.998, ClaimKind::approx_equal});
    t.push_back({"case2_factor_default_beta", 1.0 + 2.0 / (1.0 / (2.0 * std::sin(2.0 * bs)) - 1.0), 2.0,
                 ClaimKind::approx_equal});
    t.push_back({"case2_factor_alpha_form", case_two_factor(bs, 2.0), 2.0, ClaimKind::approx_equal});
    t.push_back({"case1_detour_alpha_form", case_one_coefficient(params.beta, params.alpha),
                 case_one_coefficient(params.beta, params.alpha), ClaimKind::reported});
    t.push_back({"overlap_A", big_a, 2.511, ClaimKind::approx_equal});
    t.push_back({"overlap_B", big_b, 2.268, ClaimKind::approx_equal});
    t.push_back({"overlap_chain_cited_constants", overlap_chain_factor(1.0, big_a), 6.75, ClaimKind::at_most});
    t.push_back({"overlap_chain_closed_form", 7.0 / 3.0 + 8.0 * std::numbers::sqrt3 / pi, 6.75, ClaimKind::at_most});
    t.push_back({"overlap_chain_full_circle_detour", overlap_chain_factor(1.0, 2.0 * pi), 6.75, ClaimKind::reported});

    const FrameworkFactors fw = framework_overlap_factors(params.beta, params.alpha);
    t.push_back({"framework_case1_at_params", fw.case_one, 6.728, ClaimKind::reported});
    t.push_back({"framework_case2_at_params", fw.case_two, 6.728, ClaimKind::reported});
    t.push_back({"framework_worst_at_params", fw.worst(), 6.728, ClaimKind::at_most});
    const FrameworkOptimum opt = optimize_framework_overlap();
    t.push_back({"framework_worst_optimized", opt.factors.worst(), 6.728, ClaimKind::at_most});
    t.push_back({"framework_optimized_beta", opt.beta, 0.0, ClaimKind::reported});
    t.push_back({"framework_optimized_alpha", opt.alpha, 0.0, ClaimKind::reported});

    const double c = 2.53, beta_c = 0.1831;
    const double alpha_c = alpha_for_target(c, beta_c);
    t.push_back({"alpha_variant_alpha", alpha_c, 0.0, ClaimKind::reported});
    t.push_back({"alpha_variant_case1_factor", 1.0 + 4.0 / pi * case_one_coefficient(beta_c, alpha_c), 2.53,
                 ClaimKind::reported});
    t.push_back({"alpha_variant_case2_factor", case_two_factor(beta_c, alpha_c), 2.53, ClaimKind::reported});
    t.push_back({"headline_factor", 3.53, 3.53, ClaimKind::reported});
    return t;
}

}  // namespace tspn
