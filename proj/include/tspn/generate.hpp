#pragma once

// Seeded instance generators.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "tspn/geometry.hpp"
#include "tspn/oracle.hpp"
#include "tspn/structure.hpp"

namespace tspn {

class GenerationFailed : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// mt19937_64 with an explicit bits-to-double map, so streams are identical
/// across standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
    std::size_t below(std::size_t n) { return static_cast<std::size_t>(uniform() * static_cast<double>(n)) % n; }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
    }

private:
    std::mt19937_64 engine_;
};

/// Disjoint disks with centers uniform in [R, box - R]^2, by rejection.
[[nodiscard]] inline Instance gen_disjoint(std::size_t n, double radius, double box, std::uint64_t seed,
                                           std::size_t max_attempts = 100000) {
    if (n == 0) throw InvalidInput("gen_disjoint: n must be positive");
    if (!(radius > 0.0) || !(box > 2.0 * radius)) throw InvalidInput("gen_disjoint: box must exceed 2R");
    Rng rng(seed);
    Instance inst;
    inst.radius = radius;
    inst.disjoint = true;
    inst.id = "disjoint-n" + std::to_string(n) + "-s" + std::to_string(seed);
    const double min_d2 = 4.0 * radius * radius;
    std::size_t attempts = 0;
    while (inst.centers.size() < n) {
        if (++attempts > max_attempts) throw GenerationFailed("gen_disjoint: retry cap exceeded");
        const Point c{rng.uniform(radius, box - radius), rng.uniform(radius, box - radius)};
        const bool clear = std::all_of(inst.centers.begin(), inst.centers.end(),
                                       [&](Point o) { return dot(o - c, o - c) >= min_d2; });
        if (clear) inst.centers.push_back(c);
    }
    return inst;
}

/// Centers uniform in [0, box]^2 with no separation constraint.
[[nodiscard]] inline Instance gen_overlapping(std::size_t n, double radius, double box, std::uint64_t seed) {
    if (n == 0) throw InvalidInput("gen_overlapping: n must be positive");
    if (!(radius > 0.0) || !(box > 0.0)) throw InvalidInput("gen_overlapping: radius and box must be positive");
    Rng rng(seed);
    Instance inst;
    inst.radius = radius;
    inst.id = "overlap-n" + std::to_string(n) + "-s" + std::to_string(seed);
    for (std::size_t i = 0; i < n; ++i) inst.centers.push_back({rng.uniform(0.0, box), rng.uniform(0.0, box)});
    return inst;
}

/// Disjoint disks whose centers lie within `offset` R of a line through the
/// box, so a line meets every disk when offset <= 1.
[[nodiscard]] inline Instance gen_line_transversal(std::size_t n, double radius, double length, double offset,
                                                   std::uint64_t seed, std::size_t max_attempts = 100000) {
    if (n == 0) throw InvalidInput("gen_line_transversal: n must be positive");
    if (!(radius > 0.0) || !(offset >= 0.0) || !(length >= 2.0 * radius * static_cast<double>(n))) {
        throw InvalidInput("gen_line_transversal: need R > 0, offset >= 0 and length >= 2Rn");
    }
    Rng rng(seed);
    Instance inst;
    inst.radius = radius;
    inst.disjoint = true;
    inst.id = "line-n" + std::to_string(n) + "-s" + std::to_string(seed);
    const double theta = rng.uniform(0.0, std::numbers::pi);
    const Point axis{std::cos(theta), std::sin(theta)};
    const Point normal = perp(axis);
    const double min_d2 = 4.0 * radius * radius;
    std::size_t attempts = 0;
    while (inst.centers.size() < n) {
        if (++attempts > max_attempts) throw GenerationFailed("gen_line_transversal: retry cap exceeded");
        const Point c = axis * rng.uniform(0.0, length) + normal * (radius * rng.uniform(-offset, offset));
        const bool clear = std::all_of(inst.centers.begin(), inst.centers.end(),
                                       [&](Point o) { return dot(o - c, o - c) >= min_d2; });
        if (clear) inst.centers.push_back(c);
    }
    return inst;
}

struct SharpTurnParams {
    double beta = default_beta();
    /// Two mirrored turns stacked in one eight-disk tour, giving two
    /// edge-disjoint triads. Only the intended order is solved; it is locally
    /// optimal, not the global optimum.
    bool double_turn = false;
    /// Move the crossed disk off both legs; the optimal tour then has no triad.
    bool negative_control = false;
    /// Solve the instance exactly and confirm the expected triad count.
    bool validate = true;
    std::size_t max_attempts = 20;
};

struct SharpTurnInstance {
    Instance instance;
    /// Visiting order the construction is built around.
    OrderPermutation intended_order;
    std::size_t expected_triads = 0;
};

namespace detail {

/// Unit-radius layout. A thin tour turns sharply around disk B at the origin;
/// disk A sits next to B on the axis, so both legs of the turn pass straight
/// through it. Leg slopes stay near beta / 6 so the edges at the turn are bad.
/// The A-B gap grows with the center cap so the turn stays readable at small
/// beta.
inline SharpTurnInstance sharp_turn_layout(const SharpTurnParams& p, Rng& rng) {
    const double room = 1.0 / std::sin(2.0 * p.beta) - 2.0;
    auto gap = [&] { return std::min(rng.uniform(0.5, 2.0), rng.uniform(0.3, 0.9) * room); };
    const double g = gap();
    const double lift = rng.uniform(0.2, 1.0);
    const double span = std::max(rng.uniform(6.0, 9.0) * (1.0 + lift) / p.beta, 12.0);
    std::vector<Point> c;
    std::vector<std::size_t> order;
    SharpTurnInstance out;
    if (!p.double_turn) {
        // A, B, C, E
        const Point a = p.negative_control ? Point{span / 4.0, -(1.0 + lift)} : Point{2.0 + g, 0.0};
        c = {a, {0.0, 0.0}, {span, 0.0}, {span / 2.0, 1.0 + lift}};
        order = p.negative_control ? std::vector<std::size_t>{3, 1, 0, 2} : std::vector<std::size_t>{3, 0, 1, 2};
        out.expected_triads = p.negative_control ? 0 : 1;
    } else {
        // Lower turn A, B, C, E; upper turn A', B', C', E' mirrored left to
        // right at height h.
        const double g2 = gap();
        const double lift2 = rng.uniform(0.2, 1.0);
        const double h = (1.0 + lift) + (1.0 + lift2) + rng.uniform(2.5, 4.0);
        c = {{2.0 + g, 0.0},         {0.0, 0.0}, {span, 0.0},   {span / 2.0, 1.0 + lift},
             {span - 2.0 - g2, h},   {span, h},  {0.0, h},      {span / 2.0, h - 1.0 - lift2}};
        if (p.negative_control) {
            c[0] = {span / 4.0, -(1.0 + lift)};
            c[4] = {3.0 * span / 4.0, h + 1.0 + lift2};
        }
        order = p.negative_control ? std::vector<std::size_t>{3, 1, 0, 2, 7, 5, 4, 6}
                                   : std::vector<std::size_t>{3, 0, 1, 2, 7, 4, 5, 6};
        out.expected_triads = p.negative_control ? 0 : 2;
    }

    const double theta = rng.uniform(0.0, 2.0 * std::numbers::pi);
    const double scale = rng.uniform(0.5, 2.0);
    const Point shift{rng.uniform(-50.0, 50.0), rng.uniform(-50.0, 50.0)};
    const double cs = std::cos(theta), sn = std::sin(theta);

    std::vector<std::size_t> label(c.size());
    std::iota(label.begin(), label.end(), std::size_t{0});
    rng.shuffle(label);  // disk k of the layout becomes label[k]

    out.instance.radius = scale;
    out.instance.centers.resize(c.size());
    for (std::size_t k = 0; k < c.size(); ++k) {
        const Point q{c[k].x * cs - c[k].y * sn, c[k].x * sn + c[k].y * cs};
        out.instance.centers[label[k]] = q * scale + shift;
    }
    std::vector<std::size_t> relabeled;
    for (std::size_t k : order) relabeled.push_back(label[k]);
    out.intended_order = OrderPermutation(relabeled);
    out.instance.disjoint = true;
    return out;
}

}  // namespace detail

struct SharpTurnCheck {
    bool ok = false;
    std::size_t triads = 0;
    double oracle_length = 0.0;
    double intended_length = 0.0;
    /// Tour in the intended order; optimal whenever `ok`.
    Tour tour;
};

/// Confirms the intended order is optimal (its length matches the exact
/// optimum) and counts triads on its tour. Orders that trace the same polyline
/// tie, and only some of them place the crossed disk where a triad is read, so
/// the intended order is the one analyzed. Eight-disk instances skip the
/// optimality check.
[[nodiscard]] inline SharpTurnCheck check_sharp_turn(const SharpTurnInstance& s, double beta) {
    SharpTurnCheck chk;
    chk.oracle_length = s.instance.size() <= 6 ? tspn_exact_small(s.instance).length
                                               : std::numeric_limits<double>::infinity();
    chk.tour = snap_to_boundary(s.instance, tspn_fixed_order(s.instance, s.intended_order));
    chk.intended_length = chk.tour.length;
    AnalysisParams params;
    params.beta = beta;
    const TriadDetection det = detect_beta_triads(s.instance, chk.tour, params);
    chk.triads = det.triads.size();
    const bool optimal = chk.intended_length <= chk.oracle_length * (1.0 + 1e-9) + 1e-9 * s.instance.radius;
    chk.ok = optimal && det.issues.empty() && chk.triads == s.expected_triads;
    return chk;
}

/// Instance whose optimal tour makes a sharp turn with a disk crossed on both
/// legs of the turn. Redraws up to `max_attempts` times if validation fails.
[[nodiscard]] inline SharpTurnInstance gen_sharp_turn_triad(const SharpTurnParams& params, std::uint64_t seed) {
    if (!(params.beta > 0.0) || !(params.beta < std::numbers::pi / 12.0)) {
        throw InvalidInput("gen_sharp_turn_triad: beta must lie in (0, pi/12)");
    }
    Rng rng(seed);
    for (std::size_t attempt = 0; attempt < std::max<std::size_t>(1, params.max_attempts); ++attempt) {
        SharpTurnInstance s = detail::sharp_turn_layout(params, rng);
        s.instance.id = std::string(params.double_turn ? "double-turn" : "sharp-turn") +
                        (params.negative_control ? "-control" : "") + "-s" + std::to_string(seed);
        if (!params.validate || check_sharp_turn(s, params.beta).ok) return s;
    }
    throw GenerationFailed("gen_sharp_turn_triad: construction failed validation");
}

}  // namespace tspn
