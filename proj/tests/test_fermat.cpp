#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "tspn/fermat.hpp"
#include "tspn/generate.hpp"
#include "tspn/sweeps.hpp"

using namespace tspn;

TEST(FermatWeber, EquilateralCenter) {
    const std::vector<Point> tri{{0, 0}, {2, 0}, {1, std::sqrt(3.0)}};
    const auto r = fermat_weber(tri);
    EXPECT_TRUE(r.converged);
    EXPECT_NEAR(r.point.x, 1.0, 1e-8);
    EXPECT_NEAR(r.point.y, 1.0 / std::sqrt(3.0), 1e-8);
    EXPECT_NEAR(r.objective, 2.0 * std::sqrt(3.0), 1e-9);
}

TEST(FermatWeber, ObtuseVertexIsOptimal) {
    // Angle at the origin exceeds 120 degrees: the median is that vertex.
    const std::vector<Point> tri{{0, 0}, {5, 0.2}, {-5, 0.2}};
    const auto r = fermat_weber(tri);
    EXPECT_TRUE(r.converged);
    EXPECT_NEAR(r.point.x, 0.0, 1e-7);
    EXPECT_NEAR(r.point.y, 0.0, 1e-7);
}

TEST(FermatWeber, BeatsRandomCandidates) {
    Rng rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<Point> pts;
        const std::size_t n = 3 + static_cast<std::size_t>(trial % 6);
        for (std::size_t i = 0; i < n; ++i) pts.push_back({rng.uniform(-5, 5), rng.uniform(-5, 5)});
        const auto r = fermat_weber(pts);
        for (int k = 0; k < 2000; ++k) {
            const Point c{rng.uniform(-6, 6), rng.uniform(-6, 6)};
            EXPECT_LE(r.objective, sum_of_distances(pts, c) + 1e-8);
        }
        for (const Point& p : pts) EXPECT_LE(r.objective, sum_of_distances(pts, p) + 1e-8);
    }
}

TEST(FermatWeber, SinglePointAndEmpty) {
    const std::vector<Point> one{{3, 4}};
    EXPECT_DOUBLE_EQ(fermat_weber(one).objective, 0.0);
    EXPECT_THROW((void)fermat_weber(std::vector<Point>{}), InvalidInput);
}

TEST(TriangleBound, EquilateralIsTight) {
    const double r = 2.5;
    const Point a = polar(r, 0.3), b = polar(r, 0.3 + 2 * std::numbers::pi / 3), c = polar(r, 0.3 + 4 * std::numbers::pi / 3);
    EXPECT_NEAR(triangle_bound_check(a, b, c, r), 0.0, 1e-12);
}

TEST(TriangleBound, InscribedTrianglesNeverExceed) {
    Rng rng(5);
    for (int k = 0; k < 10000; ++k) {
        const Point a = polar(1.0, rng.uniform(0, 7)), b = polar(1.0, rng.uniform(0, 7)),
                    c = polar(1.0, rng.uniform(0, 7));
        EXPECT_GE(triangle_bound_check(a, b, c, 1.0), -1e-12);
    }
    EXPECT_THROW((void)triangle_bound_check({2, 0}, {0, 1}, {-1, 0}, 1.0), InvalidInput);
}

TEST(MaxTsp, SquareAndTriangle) {
    const std::vector<Point> sq{{0, 0}, {1, 0}, {1, 1}, {0, 1}};
    EXPECT_NEAR(max_tsp_length(sq), 2.0 + 2.0 * std::sqrt(2.0), 1e-12);
    const std::vector<Point> tri{{0, 0}, {3, 0}, {0, 4}};
    EXPECT_NEAR(max_tsp_length(tri), 12.0, 1e-12);
}

TEST(ChordBound, HoldsEdgeByEdge) {
    for (std::uint64_t s = 0; s < 30; ++s) {
        const Instance inst = gen_disjoint(4 + s % 4, 1.0, 9.0, 900 + s);
        const Tour t = tspn_exact_small(inst);
        const ChordBound cb = chord_detour_bound(inst, t);
        EXPECT_TRUE(cb.per_edge.ok()) << s;
        const double tsp_sigma = order_length(inst.centers, t.order);
        EXPECT_LE(tsp_sigma - t.length, cb.bound + 1e-9);
        // n chords of a circle of radius R.
        EXPECT_LE(cb.circle_bound, 2.0 * static_cast<double>(inst.size()) + 1e-9);
        EXPECT_LE(cb.bound, cb.circle_bound + 1e-9);
    }
}

TEST(ProjectToCircle, FlagsCenterTouchPoints) {
    Instance inst{1.0, {{0, 0}, {5, 0}, {5, 5}}, std::nullopt, true};
    Tour t;
    t.order = OrderPermutation::identity(3);
    t.touch_points = {{0, 0}, {4, 0}, {5, 4}};
    const auto proj = project_to_circle(inst, t);
    ASSERT_EQ(proj.flagged.size(), 1u);
    EXPECT_EQ(proj.flagged[0], 0u);
    for (const Point& q : proj.points) EXPECT_NEAR(norm(q), 1.0, 1e-12);
}

TEST(N3, EquilateralApproachesBound) {
    const double r = 1.0;
    for (double side : {2.0, 3.0, 10.0}) {
        const N3Report rep = verify_n3_theorem(equilateral_triple(r, side));
        EXPECT_GE(rep.slack, -1e-9);
        // Optimal touch points sit R from each center toward the centroid.
        const double circum = side / std::sqrt(3.0);
        const double inner = std::max(0.0, circum - r) * std::sqrt(3.0) * 3.0;
        EXPECT_NEAR(rep.tspn, inner, 1e-6);
        EXPECT_NEAR(rep.detour, 3.0 * std::sqrt(3.0) * r, 1e-6);
    }
}

TEST(N3, RandomTriplesRespectBound) {
    const N3Sweep sweep = n3_sweep(200, 3, false);
    EXPECT_EQ(sweep.violations, 0u);
    EXPECT_LE(sweep.max_detour, 3.0 * std::sqrt(3.0) + 1e-6);
    EXPECT_THROW((void)verify_n3_theorem(gen_disjoint(4, 1.0, 20.0, 1)), InvalidInput);
}
