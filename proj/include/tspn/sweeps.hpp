#pragma once

// Randomized sweeps over small instances, solved exactly: the per-order detour
// against 2Rn, the three-disk detour against 3 sqrt(3) R, and the running
// maximum of the optimal-vs-optimal detour per disk.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <optional>
#include <vector>

#include "tspn/fermat.hpp"
#include "tspn/generate.hpp"
#include "tspn/oracle.hpp"
#include "tspn/parallel.hpp"

namespace tspn {

struct DetourSample {
    Instance instance;
    Tour tspn;           // oracle-optimal
    double tsp_sigma = 0.0;  // centers in the same order
    double detour = 0.0;     // tsp_sigma - tspn.length
    double limit = 0.0;      // 2 R n
};

/// Per-order detour of the optimal tour.
[[nodiscard]] inline DetourSample order_detour(const Instance& inst) {
    DetourSample s;
    s.instance = inst;
    s.tspn = tspn_exact_small(inst);
    s.tsp_sigma = order_length(inst.centers, s.tspn.order);
    s.detour = s.tsp_sigma - s.tspn.length;
    s.limit = 2.0 * inst.radius * static_cast<double>(inst.size());
    return s;
}

/// Box side giving disk density `fill` (total disk area over box area).
[[nodiscard]] inline double box_for_density(std::size_t n, double radius, double fill) {
    return std::sqrt(static_cast<double>(n) * std::numbers::pi * radius * radius / fill);
}

/// Three disks with every center distance in [2R, 2R (1 + spread)].
[[nodiscard]] inline Instance gen_near_tangent_triple(double radius, double spread, std::uint64_t seed) {
    if (!(radius > 0.0) || !(spread >= 0.0)) throw InvalidInput("gen_near_tangent_triple: bad parameters");
    Rng rng(seed);
    const double lo = 2.0 * radius, hi = 2.0 * radius * (1.0 + spread);
    for (int attempt = 0; attempt < 10000; ++attempt) {
        const double ab = rng.uniform(lo, hi), ac = rng.uniform(lo, hi), bc = rng.uniform(lo, hi);
        const double cx = (ab * ab + ac * ac - bc * bc) / (2.0 * ab);
        const double cy2 = ac * ac - cx * cx;
        if (cy2 <= 0.0) continue;
        Instance inst;
        inst.radius = radius;
        inst.disjoint = true;
        inst.id = "near-tangent-s" + std::to_string(seed);
        const double th = rng.uniform(0.0, 2.0 * std::numbers::pi);
        for (Point p : {Point{0.0, 0.0}, Point{ab, 0.0}, Point{cx, std::sqrt(cy2)}}) {
            inst.centers.push_back({p.x * std::cos(th) - p.y * std::sin(th), p.x * std::sin(th) + p.y * std::cos(th)});
        }
        return inst;
    }
    throw GenerationFailed("gen_near_tangent_triple: no valid triangle");
}

/// Three disks at the corners of an equilateral triangle of side `side`.
[[nodiscard]] inline Instance equilateral_triple(double radius, double side) {
    if (!(side >= 2.0 * radius)) throw InvalidInput("equilateral_triple: side must be at least 2R");
    Instance inst;
    inst.radius = radius;
    inst.disjoint = true;
    inst.id = "equilateral";
    const double c = side / std::numbers::sqrt3;
    for (int k = 0; k < 3; ++k) inst.centers.push_back(polar(c, 2.0 * std::numbers::pi * k / 3.0));
    return inst;
}

struct N3Sweep {
    std::size_t trials = 0;
    double max_detour = 0.0;  // in units of R
    std::optional<Instance> argmax;
    std::size_t violations = 0;  // detour > 3 sqrt(3) R + tol
};

/// Detour of random disjoint triples (and near-tangent ones when
/// `near_tangent`) against 3 sqrt(3) R.
[[nodiscard]] inline N3Sweep n3_sweep(std::size_t trials, std::uint64_t seed, bool near_tangent,
                                      double tol_r = 1e-6) {
    const auto reps = parallel_map(trials, [&](std::size_t i) {
        const std::uint64_t s = trial_seed(seed, i);
        Instance inst = near_tangent ? gen_near_tangent_triple(1.0, 0.25, s) : gen_disjoint(3, 1.0, 12.0, s);
        return std::make_pair(verify_n3_theorem(inst), inst);
    });
    N3Sweep out;
    out.trials = trials;
    for (const auto& [rep, inst] : reps) {
        const double d = rep.detour / inst.radius;
        if (!out.argmax || d > out.max_detour) {
            out.max_detour = d;
            out.argmax = inst;
        }
        if (rep.slack < -tol_r * inst.radius) ++out.violations;
    }
    return out;
}

struct ConjectureReport {
    std::size_t n = 0;
    std::size_t trials = 0;
    /// max (|TSP*| - |TSPN*|) / (R n)
    double max_per_disk = 0.0;
    std::optional<Instance> argmax;
    /// Counts over [0, 2) in bins of `bin_width`; the last bin also takes >= 2.
    std::vector<std::size_t> histogram;
    double bin_width = 0.1;
    bool within_two = true;    // every value <= 2 + tol
    bool within_sqrt3 = true;  // n = 3 only: every value <= sqrt(3) + tol
};

/// Optimal-tour detour per disk on random disjoint instances at disk density
/// `fill`.
[[nodiscard]] inline ConjectureReport conjecture_sweep(std::size_t n, std::size_t trials, std::uint64_t seed,
                                                       double fill = 0.15, double tol = 1e-6) {
    if (n < 3 || n > 8) throw InvalidInput("conjecture_sweep supports 3 <= n <= 8");
    const double box = box_for_density(n, 1.0, fill);
    const auto vals = parallel_map(trials, [&](std::size_t i) {
        Instance inst = gen_disjoint(n, 1.0, box, trial_seed(seed, i));
        const double tsp = tsp_exact_points(inst.centers).length;
        const double tspn = tspn_exact_small(inst).length;
        return std::make_pair((tsp - tspn) / (inst.radius * static_cast<double>(n)), inst);
    });
    ConjectureReport rep;
    rep.n = n;
    rep.trials = trials;
    rep.histogram.assign(20, 0);
    for (const auto& [v, inst] : vals) {
        if (!rep.argmax || v > rep.max_per_disk) {
            rep.max_per_disk = v;
            rep.argmax = inst;
        }
        const auto bin = static_cast<std::size_t>(std::max(0.0, v) / rep.bin_width);
        ++rep.histogram[std::min(bin, rep.histogram.size() - 1)];
        if (v > 2.0 + tol) rep.within_two = false;
        if (n == 3 && v > std::numbers::sqrt3 + tol) rep.within_sqrt3 = false;
    }
    return rep;
}

}  // namespace tspn
