#pragma once

// Property suites run by `tspn verify`. Each draws its own instances from a
// seed and counts checks and violations.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include "tspn/fermat.hpp"
#include "tspn/generate.hpp"
#include "tspn/minkowski.hpp"
#include "tspn/oracle.hpp"
#include "tspn/parallel.hpp"
#include "tspn/structure.hpp"
#include "tspn/sweeps.hpp"

namespace tspn {

struct SuiteResult {
    std::string name;
    std::size_t cases = 0;
    std::size_t checked = 0;
    std::size_t violations = 0;
    /// Extra pass conditions beyond zero violations (coverage, equality cases).
    bool extra_ok = true;
    std::vector<std::pair<std::string, double>> metrics;
    std::vector<std::string> notes;

    [[nodiscard]] bool passed() const { return violations == 0 && extra_ok; }
    void metric(std::string key, double v) { metrics.emplace_back(std::move(key), v); }
};

namespace detail {

/// Random disjoint instance: n in [lo, hi], radius in [0.5, 2], density in
/// [fill_lo, fill_hi].
inline Instance random_disjoint(Rng& rng, std::size_t lo, std::size_t hi, double fill_lo, double fill_hi) {
    const std::size_t n = lo + rng.below(hi - lo + 1);
    const double r = rng.uniform(0.5, 2.0);
    const double fill = rng.uniform(fill_lo, fill_hi);
    return gen_disjoint(n, r, box_for_density(n, r, fill), rng.next());
}

/// Single- or double-turn triad instance at the given beta.
inline SharpTurnInstance random_triad_instance(Rng& rng, double beta, bool double_turn, bool control) {
    SharpTurnParams p;
    p.beta = beta;
    p.double_turn = double_turn;
    p.negative_control = control;
    return gen_sharp_turn_triad(p, rng.next());
}

}  // namespace detail

/// Per-order detour of the optimal tour against 2 R n, n = 3..8.
[[nodiscard]] inline SuiteResult suite_eq1(std::size_t trials, std::uint64_t seed) {
    SuiteResult res;
    res.name = "eq1";
    const auto rows = parallel_map(trials, [&](std::size_t i) {
        Rng rng(trial_seed(seed, i));
        const std::size_t n = 3 + i % 6;
        const Instance inst = detail::random_disjoint(rng, n, n, 0.03, 0.25);
        const DetourSample s = order_detour(inst);
        return std::make_pair(s.detour / inst.radius, s.limit / inst.radius);
    });
    double worst = 0.0;
    for (const auto& [d, lim] : rows) {
        ++res.cases;
        ++res.checked;
        if (d > lim + 1e-6) ++res.violations;
        worst = std::max(worst, d / (lim / 2.0));
    }
    res.metric("max_detour_per_disk_over_R", worst);
    return res;
}

/// Three disks: random triples, near-tangent triples, and the equilateral
/// family where the detour is largest.
[[nodiscard]] inline SuiteResult suite_n3(std::size_t trials, std::uint64_t seed) {
    SuiteResult res;
    res.name = "n3";
    const double cap = 3.0 * std::numbers::sqrt3;
    const N3Sweep random = n3_sweep(trials, seed, false);
    const N3Sweep tangent = n3_sweep(std::max<std::size_t>(trials / 4, 1), seed + 1, true);
    res.cases = random.trials + tangent.trials;
    res.checked = res.cases;
    res.violations = random.violations + tangent.violations;
    double family = 0.0;
    for (double side : {2.0, 2.5, 3.0, 5.0, 10.0, 40.0}) {
        const N3Report rep = verify_n3_theorem(equilateral_triple(1.0, side));
        ++res.cases;
        ++res.checked;
        if (rep.slack < -1e-6) ++res.violations;
        family = std::max(family, rep.detour);
    }
    res.extra_ok = family >= 0.99 * cap;
    res.metric("max_detour_random_over_R", random.max_detour);
    res.metric("max_detour_near_tangent_over_R", tangent.max_detour);
    res.metric("max_detour_equilateral_over_R", family);
    res.metric("bound_over_R", cap);
    return res;
}

/// Snapped tours of three kinds: optimal tours of random instances, fixed-order
/// tours in random orders, and triad constructions.
[[nodiscard]] inline Tour sample_tour(std::size_t i, std::uint64_t seed, Instance& inst) {
    Rng rng(trial_seed(seed, i));
    switch (i % 3) {
        case 0:
            inst = detail::random_disjoint(rng, 4, 6, 0.15, 0.25);
            return snap_to_boundary(inst, tspn_exact_small(inst));
        case 1: {
            inst = detail::random_disjoint(rng, 5, 8, 0.15, 0.25);
            std::vector<std::size_t> order(inst.size());
            std::iota(order.begin(), order.end(), std::size_t{0});
            rng.shuffle(order);
            return snap_to_boundary(inst, tspn_fixed_order(inst, OrderPermutation(order)));
        }
        default: {
            const double beta = rng.uniform(0.02, 0.25);
            const SharpTurnInstance s = detail::random_triad_instance(rng, beta, rng.below(2) == 1, false);
            inst = s.instance;
            return snap_to_boundary(inst, tspn_fixed_order(inst, s.intended_order));
        }
    }
}

/// End angles of bad edges at most beta, center turn at most 2 beta.
[[nodiscard]] inline SuiteResult suite_angle(std::size_t trials, std::uint64_t seed) {
    SuiteResult res;
    res.name = "angle";
    const AnalysisParams params;
    const auto reps = parallel_map(trials, [&](std::size_t i) {
        Instance inst;
        const Tour t = sample_tour(i, seed, inst);
        return check_angle_lemma(inst, t, params);
    });
    for (const CheckReport& r : reps) {
        ++res.cases;
        res.checked += r.checked;
        res.violations += r.violations.size();
    }
    res.extra_ok = res.checked > 0;
    res.metric("bad_edge_checks", static_cast<double>(res.checked));
    return res;
}

/// Consecutive bad edges with close centers: P2P3 meets disk 1. Windows come
/// from triad constructions and from optimal tours of dense random instances.
[[nodiscard]] inline SuiteResult suite_intersect(std::size_t trials, std::uint64_t seed) {
    SuiteResult res;
    res.name = "intersect";
    const auto reps = parallel_map(trials, [&](std::size_t i) {
        Rng rng(trial_seed(seed, i));
        AnalysisParams params;
        if (i % 2 == 0) {
            params.beta = rng.uniform(0.02, 0.25);
            const SharpTurnInstance s = detail::random_triad_instance(rng, params.beta, i % 4 == 2, false);
            const Tour t = snap_to_boundary(s.instance, tspn_fixed_order(s.instance, s.intended_order));
            return check_intersection_theorem(s.instance, t, params);
        }
        const Instance inst = detail::random_disjoint(rng, 4, 6, 0.2, 0.25);
        return check_intersection_theorem(inst, snap_to_boundary(inst, tspn_exact_small(inst)), params);
    });
    for (const CheckReport& r : reps) {
        ++res.cases;
        res.checked += r.checked;
        res.violations += r.violations.size();
    }
    res.extra_ok = res.checked > 0;
    res.metric("hypothesis_windows", static_cast<double>(res.checked));
    return res;
}

struct TriadCase {
    std::size_t expected = 0;
    std::size_t found = 0;
    std::size_t issues = 0;
    bool disjoint = true;
    double polyline_gap = 0.0;  // | |sigma' polyline| - |tour| | / R
    double averaging_slack = 0.0;  // in units of R
};

/// Triad constructions: detection count, edge-disjointness, sigma' polyline
/// length, and the averaging inequality.
[[nodiscard]] inline SuiteResult suite_triad(std::size_t trials, std::uint64_t seed, bool averaging_only = false) {
    SuiteResult res;
    res.name = averaging_only ? "averaging" : "triad";
    const auto cases = parallel_map(trials, [&](std::size_t i) {
        Rng rng(trial_seed(seed, i));
        const bool control = i % 5 == 4;
        SharpTurnParams p;
        p.beta = rng.uniform(0.02, 0.25);
        const SharpTurnInstance s = detail::random_triad_instance(rng, p.beta, i % 2 == 1, control);
        const SharpTurnCheck chk = check_sharp_turn(s, p.beta);
        AnalysisParams params;
        params.beta = p.beta;
        TriadCase c;
        c.expected = s.expected_triads;
        const TriadReport rep = check_averaging_bound(s.instance, chk.tour, params);
        c.found = rep.detection.triads.size();
        c.issues = rep.detection.issues.size();
        c.disjoint = rep.sigma_prime.has_value();
        if (rep.averaging) c.averaging_slack = rep.averaging->slack / s.instance.radius;
        if (c.disjoint) {
            const Tour alt = sigma_prime_tour(chk.tour, rep.detection.triads);
            c.polyline_gap = std::abs(alt.length - chk.tour.length) / s.instance.radius;
        }
        return c;
    });
    double min_slack = std::numeric_limits<double>::infinity(), max_gap = 0.0;
    double min_slack_triads = std::numeric_limits<double>::infinity();
    for (const TriadCase& c : cases) {
        if (c.found > 0) min_slack_triads = std::min(min_slack_triads, c.averaging_slack);
        ++res.cases;
        ++res.checked;
        bool bad = !c.disjoint || c.averaging_slack < -1e-6;
        if (!averaging_only) bad = bad || c.found != c.expected || c.issues != 0 || c.polyline_gap > 1e-9;
        if (bad) ++res.violations;
        min_slack = std::min(min_slack, c.averaging_slack);
        max_gap = std::max(max_gap, c.polyline_gap);
    }
    res.metric("min_averaging_slack_over_R", min_slack);
    res.metric("min_averaging_slack_with_triads_over_R", min_slack_triads);
    if (!averaging_only) res.metric("max_sigma_prime_polyline_gap_over_R", max_gap);
    return res;
}

/// Neighborhood area of random closed tours against 2x|G| + pi x^2, plus the
/// stadium and single-point equality cases.
[[nodiscard]] inline SuiteResult suite_minkowski(std::size_t trials, std::uint64_t seed,
                                                 std::size_t samples = 100000) {
    SuiteResult res;
    res.name = "minkowski";
    const auto reps = parallel_map(trials, [&](std::size_t i) {
        Rng rng(trial_seed(seed, i));
        const std::size_t n = 3 + rng.below(8);
        std::vector<Point> poly;
        for (std::size_t k = 0; k < n; ++k) poly.push_back({rng.uniform(0.0, 10.0), rng.uniform(0.0, 10.0)});
        return verify_minkowski_lemma(poly, true, rng.uniform(0.1, 3.0), samples, rng.next());
    });
    for (const MinkowskiReport& r : reps) {
        ++res.cases;
        ++res.checked;
        if (!r.holds) ++res.violations;
    }
    const std::vector<Point> seg{{0.0, 0.0}, {10.0, 0.0}};
    const MinkowskiReport stadium = verify_minkowski_lemma(seg, false, 1.0, 1000000, seed);
    const double rel = std::abs(stadium.estimate - stadium.bound) / stadium.bound;
    const std::vector<Point> dot{{1.0, 2.0}};
    const MinkowskiReport point = verify_minkowski_lemma(dot, false, 1.0, 1000000, seed + 1);
    const double rel_point = std::abs(point.estimate - point.bound) / point.bound;
    res.extra_ok = rel <= 0.005 && rel_point <= 0.005;
    res.metric("stadium_relative_error", rel);
    res.metric("point_relative_error", rel_point);
    return res;
}

/// Optimal tour length of disjoint instances against pi R n / 4 - pi R, on
/// random instances and tight hexagonal clusters.
[[nodiscard]] inline SuiteResult suite_packing(std::size_t trials, std::uint64_t seed) {
    SuiteResult res;
    res.name = "packing";
    const auto rows = parallel_map(trials, [&](std::size_t i) {
        Rng rng(trial_seed(seed, i));
        Instance inst;
        if (i % 4 == 3) {
            // Hexagonal lattice patch of touching disks.
            const std::size_t n = 3 + rng.below(5);
            inst.radius = rng.uniform(0.5, 2.0);
            inst.disjoint = true;
            const double d = 2.0 * inst.radius;
            for (int row = 0; inst.centers.size() < n; ++row) {
                for (int col = 0; col < 3 && inst.centers.size() < n; ++col) {
                    inst.centers.push_back({d * (col + 0.5 * (row % 2)), d * row * std::numbers::sqrt3 / 2.0});
                }
            }
        } else {
            inst = detail::random_disjoint(rng, 3, 8, 0.05, 0.25);
        }
        const double len = tspn_exact_small(inst).length;
        return std::make_pair(len / inst.radius, packing_lower_bound(inst.size(), 1.0));
    });
    double min_margin = std::numeric_limits<double>::infinity();
    for (const auto& [len, lb] : rows) {
        ++res.cases;
        ++res.checked;
        if (len < lb - 1e-9) ++res.violations;
        min_margin = std::min(min_margin, len - lb);
    }
    res.metric("min_margin_over_R", min_margin);
    return res;
}

/// Running maximum of the optimal detour per disk, n = 3..6; must stay below
/// 2, and below sqrt(3) at n = 3.
[[nodiscard]] inline SuiteResult suite_conjecture(std::size_t trials, std::uint64_t seed) {
    SuiteResult res;
    res.name = "conjecture";
    for (std::size_t n = 3; n <= 6; ++n) {
        const ConjectureReport rep = conjecture_sweep(n, trials, seed + n);
        res.cases += rep.trials;
        res.checked += rep.trials;
        if (!rep.within_two || !rep.within_sqrt3) ++res.violations;
        res.metric("max_per_disk_n" + std::to_string(n), rep.max_per_disk);
    }
    res.metric("sqrt3", std::numbers::sqrt3);
    return res;
}

inline const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"eq1",      "n3",     "angle",     "intersect", "triad",
                                                "averaging", "minkowski", "packing", "conjecture"};
    return names;
}

[[nodiscard]] inline SuiteResult run_suite(const std::string& name, std::size_t trials, std::uint64_t seed) {
    if (name == "eq1") return suite_eq1(trials, seed);
    if (name == "n3") return suite_n3(trials, seed);
    if (name == "angle") return suite_angle(trials, seed);
    if (name == "intersect") return suite_intersect(trials, seed);
    if (name == "triad") return suite_triad(trials, seed);
    if (name == "averaging") return suite_triad(trials, seed, true);
    if (name == "minkowski") return suite_minkowski(trials, seed);
    if (name == "packing") return suite_packing(trials, seed);
    if (name == "conjecture") return suite_conjecture(trials, seed);
    throw InvalidInput("unknown suite: " + name);
}

}  // namespace tspn
