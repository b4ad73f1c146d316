#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>

#include <gtest/gtest.h>

#include "support/grid_oracle.hpp"
#include "tspn/generate.hpp"
#include "tspn/oracle.hpp"

using namespace tspn;

namespace {

std::vector<Point> random_points(std::size_t n, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<Point> pts;
    for (std::size_t i = 0; i < n; ++i) pts.push_back({rng.uniform(0, 10), rng.uniform(0, 10)});
    return pts;
}

// Every order, no pruning, no symmetry reduction.
double brute_force_tsp(const std::vector<Point>& pts) {
    std::vector<std::size_t> p(pts.size());
    std::iota(p.begin(), p.end(), std::size_t{0});
    double best = std::numeric_limits<double>::infinity();
    do {
        double len = 0;
        for (std::size_t i = 0; i < p.size(); ++i) len += dist(pts[p[i]], pts[p[(i + 1) % p.size()]]);
        best = std::min(best, len);
    } while (std::next_permutation(p.begin() + 1, p.end()));
    return best;
}

}  // namespace

TEST(OrderPermutation, RejectsNonPermutation) {
    EXPECT_THROW(OrderPermutation({0, 0, 1}), InvalidInput);
    EXPECT_THROW(OrderPermutation({0, 3, 1}), InvalidInput);
}

TEST(OrderPermutation, CanonicalIdentifiesCycles) {
    const OrderPermutation a({2, 0, 3, 1});
    const OrderPermutation b({1, 3, 0, 2});  // reversed
    const OrderPermutation c({3, 1, 2, 0});  // rotated
    EXPECT_EQ(a.canonical(), b.canonical());
    EXPECT_EQ(a.canonical(), c.canonical());
    EXPECT_EQ(a.canonical()[0], 0u);
    EXPECT_LT(a.canonical()[1], a.canonical()[3]);
}

TEST(TspExactPoints, UnitSquare) {
    const std::vector<Point> sq{{0, 0}, {1, 1}, {1, 0}, {0, 1}};
    EXPECT_NEAR(tsp_exact_points(sq).length, 4.0, 1e-12);
}

TEST(TspExactPoints, CollinearGoesOutAndBack) {
    const std::vector<Point> line{{0, 0}, {3, 0}, {1, 0}, {7, 0}};
    EXPECT_NEAR(tsp_exact_points(line).length, 14.0, 1e-12);
}

TEST(TspExactPoints, MatchesEnumerationAndBruteForce) {
    for (std::size_t n = 3; n <= 9; ++n) {
        for (std::uint64_t s = 0; s < 3; ++s) {
            const auto pts = random_points(n, 100 * n + s);
            const double hk = tsp_exact_points(pts).length;
            EXPECT_NEAR(hk, tsp_enumerate_points(pts).length, 1e-9) << n;
            if (n <= 8) {
                EXPECT_NEAR(hk, brute_force_tsp(pts), 1e-9) << n;
            }
            EXPECT_NEAR(order_length(pts, tsp_exact_points(pts).order), hk, 1e-9);
        }
    }
}

TEST(TspExactPoints, SizeLimits) {
    EXPECT_THROW((void)tsp_exact_points(random_points(16, 1)), InvalidInput);
    EXPECT_THROW((void)tsp_exact_points(random_points(1, 1)), InvalidInput);
}

TEST(TouchPointUpdate, ReflectionWhenBothSidesMatch) {
    // prev and next mirror images across the x axis: optimum at the nearest
    // boundary point on the axis. The objective is flat to second order
    // there, so the location is only good to about sqrt(eps).
    const Disk d{{0, 0}, 1};
    const auto u = touch_point_update({5, 3}, {5, -3}, d);
    EXPECT_NEAR(u.point.x, 1.0, 1e-6);
    EXPECT_NEAR(u.point.y, 0.0, 1e-6);
    EXPECT_NEAR(u.objective, 2.0 * std::hypot(4.0, 3.0), 1e-9);
}

TEST(TouchPointUpdate, SegmentThroughDiskCostsNothingExtra) {
    const Disk d{{0, 0}, 1};
    const auto u = touch_point_update({-4, 0.5}, {4, 0.5}, d);
    EXPECT_NEAR(u.objective, 8.0, 1e-12);
    EXPECT_TRUE(d.contains(u.point, 1e-12));
}

TEST(TouchPointUpdate, MatchesDenseSampling) {
    Rng rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const Disk d{{rng.uniform(-1, 1), rng.uniform(-1, 1)}, rng.uniform(0.3, 2)};
        Point a, b;
        do {
            a = {rng.uniform(-8, 8), rng.uniform(-8, 8)};
            b = {rng.uniform(-8, 8), rng.uniform(-8, 8)};
        } while (d.contains(a) || d.contains(b) || segment_disk_intersect(a, b, d).hit());
        double best = std::numeric_limits<double>::infinity();
        const int samples = 200000;
        for (int k = 0; k < samples; ++k) {
            const Point p = d.center + polar(d.radius, 2 * std::numbers::pi * k / samples);
            best = std::min(best, dist(a, p) + dist(p, b));
        }
        const auto u = touch_point_update(a, b, d);
        EXPECT_LE(u.objective, best + 1e-12);
        EXPECT_NEAR(u.objective, best, 1e-7);
        EXPECT_NEAR(dist(u.point, d.center), d.radius, 1e-12);
    }
}

TEST(FixedOrder, AgreesWithAngularGrid) {
    for (std::uint64_t s = 0; s < 20; ++s) {
        const Instance inst = gen_disjoint(4 + s % 4, 1.0, 12.0, s);
        Rng rng(s);
        std::vector<std::size_t> order(inst.size());
        std::iota(order.begin(), order.end(), std::size_t{0});
        rng.shuffle(order);
        const OrderPermutation perm(order);
        const Tour t = tspn_fixed_order(inst, perm);
        const auto grid = tspn::testing::grid_fixed_order(inst, perm);
        EXPECT_TRUE(t.converged);
        EXPECT_LE(t.length, grid.length + 1e-9) << s;
        EXPECT_NEAR(t.length, grid.length, 1e-4) << s;
        EXPECT_NEAR(t.length, cycle_length(t.touch_points), 1e-12);
        for (std::size_t i = 0; i < t.size(); ++i) {
            EXPECT_TRUE(inst.disk(t.disk(i)).contains(t.point(i), 1e-9));
        }
    }
}

TEST(FixedOrder, CrossedDiskCostsNothing) {
    // Middle disk sits on the segment joining the outer two.
    Instance inst{1.0, {{0, 0}, {5, 0.3}, {10, 0}}, std::nullopt, true};
    const Tour t = tspn_fixed_order(inst, OrderPermutation::identity(3));
    EXPECT_NEAR(t.length, 2.0 * 8.0, 1e-8);
}

TEST(FixedOrder, TangentRowOfThree) {
    // Touching disks in a row: any tour must reach from disk 0 to disk 2 and
    // back, so the optimum is twice the gap between them.
    Instance inst{1.0, {{0, 0}, {2, 0}, {4, 0}}, std::nullopt, true};
    EXPECT_NEAR(tspn_fixed_order(inst, OrderPermutation::identity(3)).length, 4.0, 1e-9);
}

TEST(FixedOrder, OnSweepReportsMonotoneLengths) {
    const Instance inst = gen_disjoint(6, 1.0, 12.0, 3);
    std::vector<double> lens;
    FixedOrderOptions opt;
    opt.on_sweep = [&](std::size_t, double len) { lens.push_back(len); };
    (void)tspn_fixed_order(inst, OrderPermutation::identity(6), opt);
    ASSERT_FALSE(lens.empty());
    for (std::size_t i = 1; i < lens.size(); ++i) EXPECT_LE(lens[i], lens[i - 1] + 1e-12);
}

TEST(FixedOrder, MaxSweepsFlagsNonConvergence) {
    const Instance inst = gen_disjoint(7, 1.0, 12.0, 5);
    FixedOrderOptions opt;
    opt.max_sweeps = 1;
    EXPECT_FALSE(tspn_fixed_order(inst, OrderPermutation::identity(7), opt).converged);
}

TEST(ExactSmall, MatchesGridOverAllOrders) {
    for (std::uint64_t s = 0; s < 6; ++s) {
        const Instance inst = gen_disjoint(4 + s % 2, 1.0, 10.0, 40 + s);
        double best = std::numeric_limits<double>::infinity();
        for_each_canonical_order(inst.size(), [&](const std::vector<std::size_t>& order) {
            best = std::min(best, tspn::testing::grid_fixed_order(inst, OrderPermutation(order), 64, 6).length);
        });
        EXPECT_NEAR(tspn_exact_small(inst).length, best, 1e-4) << s;
    }
}

TEST(ExactSmall, ThreeTouchingDisksInATriangle) {
    const double s3 = std::numbers::sqrt3;
    Instance inst{1.0, {{0, 0}, {2, 0}, {1, s3}}, std::nullopt, true};
    // Candidate: degenerate triangle between tangent point (1,0) and the
    // nearest point of disk 2, length 2 (sqrt3 - 1); the true optimum can only
    // be shorter.
    const double len = tspn_exact_small(inst).length;
    EXPECT_LE(len, 2.0 * (s3 - 1.0) + 1e-9);
    EXPECT_GT(len, 0.0);
}

TEST(ExactSmall, LabelShuffleStable) {
    const Instance inst = gen_disjoint(6, 1.0, 12.0, 9);
    Instance shuffled = inst;
    Rng rng(3);
    rng.shuffle(shuffled.centers);
    EXPECT_NEAR(tspn_exact_small(inst).length, tspn_exact_small(shuffled).length, 1e-6 * tspn_exact_small(inst).length);
}

TEST(ExactSmall, OrderIsCanonical) {
    const Instance inst = gen_disjoint(5, 1.0, 12.0, 2);
    const Tour t = tspn_exact_small(inst);
    EXPECT_EQ(t.order, t.order.canonical());
}

TEST(ExactSmall, SizeLimits) {
    EXPECT_THROW((void)tspn_exact_small(gen_disjoint(9, 1.0, 30.0, 1)), InvalidInput);
    EXPECT_THROW((void)tspn_exact_small(gen_disjoint(2, 1.0, 30.0, 1)), InvalidInput);
}

TEST(Snap, MovesPassThroughToChordEnd) {
    Instance inst{1.0, {{0, 0}, {5, 0.3}, {10, 0}}, std::nullopt, true};
    const Tour t = snap_to_boundary(inst, tspn_fixed_order(inst, OrderPermutation::identity(3)));
    for (std::size_t i = 0; i < 3; ++i) {
        EXPECT_NEAR(dist(t.point(i), inst.centers[t.disk(i)]), 1.0, 1e-9);
    }
    EXPECT_NEAR(t.length, 16.0, 1e-8);
}
