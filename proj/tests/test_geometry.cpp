#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "tspn/geometry.hpp"

using namespace tspn;

TEST(Dist, PythagoreanTriple) {
    EXPECT_DOUBLE_EQ(dist({0, 0}, {3, 4}), 5.0);
    EXPECT_DOUBLE_EQ(dist({-1, 2}, {-1, 2}), 0.0);
}

TEST(Dist, SymmetricAndTriangle) {
    const Point a{0.3, -1.2}, b{4.1, 2.2}, c{-2.0, 0.7};
    EXPECT_DOUBLE_EQ(dist(a, b), dist(b, a));
    EXPECT_LE(dist(a, c), dist(a, b) + dist(b, c));
}

TEST(FBeta, ZeroAngleIsDMinusR) {
    EXPECT_NEAR(f_beta(5.0, 0.0, 1.0), 4.0, 1e-15);
    EXPECT_NEAR(f_beta(2.0, 0.0, 1.0) - 1.0, 0.0, 1e-15);  // tangent disks: threshold 0
}

TEST(FBeta, LawOfCosines) {
    // Boundary point at angle beta off the center line, seen from the other center.
    const double d = 3.7, r = 1.3, beta = 0.21;
    const Point o1{0, 0}, o2{d, 0};
    const Point p = o2 + polar(r, std::numbers::pi - beta);
    EXPECT_NEAR(f_beta(d, beta, r), dist(o1, p), 1e-12);
}

TEST(FBeta, RightAngle) { EXPECT_NEAR(f_beta(3.0, std::numbers::pi / 2, 4.0), 5.0, 1e-12); }

TEST(FBeta, RejectsBadInput) {
    EXPECT_THROW((void)f_beta(-1.0, 0.1, 1.0), InvalidInput);
    EXPECT_THROW((void)f_beta(1.0, 0.1, 0.0), InvalidInput);
    EXPECT_THROW((void)f_beta(1.0, 4.0, 1.0), InvalidInput);
}

TEST(Angle, RightAndStraight) {
    EXPECT_NEAR(angle({0, 0}, {1, 0}, {0, 1}), std::numbers::pi / 2, 1e-15);
    EXPECT_NEAR(angle({0, 0}, {1, 0}, {-2, 0}), std::numbers::pi, 1e-15);
    EXPECT_NEAR(angle({0, 0}, {1, 0}, {3, 0}), 0.0, 1e-15);
}

TEST(Angle, DegenerateArmThrows) { EXPECT_THROW((void)angle({1, 1}, {1, 1}, {2, 2}), DegenerateGeometry); }

TEST(SegmentDisk, Secant) {
    const auto hit = segment_disk_intersect({-3, 0}, {3, 0}, Disk{{0, 0}, 1});
    ASSERT_EQ(hit.kind, Contact::secant);
    EXPECT_NEAR(hit.enter.x, -1.0, 1e-12);
    EXPECT_NEAR(hit.exit.x, 1.0, 1e-12);
    EXPECT_NEAR(hit.t_enter, 2.0 / 6.0, 1e-12);
}

TEST(SegmentDisk, TangentAndMiss) {
    const auto t = segment_disk_intersect({-3, 1}, {3, 1}, Disk{{0, 0}, 1});
    EXPECT_EQ(t.kind, Contact::tangent);
    EXPECT_NEAR(t.enter.x, 0.0, 1e-12);
    EXPECT_EQ(segment_disk_intersect({-3, 1.5}, {3, 1.5}, Disk{{0, 0}, 1}).kind, Contact::none);
}

TEST(SegmentDisk, EndsInsideIsClipped) {
    const auto hit = segment_disk_intersect({0, 0}, {5, 0}, Disk{{0, 0}, 2});
    ASSERT_EQ(hit.kind, Contact::secant);
    EXPECT_NEAR(hit.t_enter, 0.0, 1e-15);
    EXPECT_NEAR(hit.exit.x, 2.0, 1e-12);
}

TEST(SegmentDisk, StopsShortOfDisk) {
    EXPECT_EQ(segment_disk_intersect({-5, 0}, {-2, 0}, Disk{{0, 0}, 1}).kind, Contact::none);
}

TEST(SegmentDisk, ZeroLengthThrows) {
    EXPECT_THROW((void)segment_disk_intersect({1, 1}, {1, 1}, Disk{{0, 0}, 1}), DegenerateGeometry);
}

TEST(Collinear, ExactLine) {
    const auto c = collinear({0, 0}, {1, 1}, {2, 2});
    EXPECT_TRUE(c.collinear);
    EXPECT_TRUE(c.between);
    const auto d = collinear({0, 0}, {3, 3}, {2, 2});
    EXPECT_TRUE(d.collinear);
    EXPECT_FALSE(d.between);
}

TEST(Collinear, ToleranceBoundary) {
    Tolerance tol;
    // Area / longest^2 for a flat triangle with apex height h on a base of 2 is h / 4.
    const double inside = 4.0 * tol.eps_col * 0.5;
    const double outside = 4.0 * tol.eps_col * 2.0;
    EXPECT_TRUE(collinear({0, 0}, {1, inside}, {2, 0}, tol).collinear);
    EXPECT_FALSE(collinear({0, 0}, {1, outside}, {2, 0}, tol).collinear);
}

TEST(Collinear, AllCoincident) {
    const auto c = collinear({1, 1}, {1, 1}, {1, 1});
    EXPECT_TRUE(c.collinear);
    EXPECT_TRUE(c.between);
}

TEST(Instance, ValidateRejects) {
    Instance inst;
    EXPECT_THROW(inst.validate(), InvalidInput);  // no disks
    inst.centers = {{0, 0}};
    inst.radius = -1;
    EXPECT_THROW(inst.validate(), InvalidInput);
    inst.radius = 1;
    inst.centers.push_back({1, 0});
    inst.disjoint = true;
    EXPECT_THROW(inst.validate(), InvalidInput);
    inst.disjoint = false;
    EXPECT_NO_THROW(inst.validate());
}

TEST(Instance, TangentCountsAsDisjoint) {
    Instance inst{1.0, {{0, 0}, {2, 0}}, std::nullopt, true};
    EXPECT_TRUE(pairwise_disjoint(inst));
    EXPECT_NO_THROW(inst.validate());
}

TEST(Lengths, CycleAndPath) {
    const std::vector<Point> sq{{0, 0}, {1, 0}, {1, 1}, {0, 1}};
    EXPECT_DOUBLE_EQ(cycle_length(sq), 4.0);
    EXPECT_DOUBLE_EQ(path_length(sq), 3.0);
    EXPECT_DOUBLE_EQ(point_segment_distance({0.5, 2}, {0, 0}, {1, 0}), 2.0);
    EXPECT_DOUBLE_EQ(point_segment_distance({3, 4}, {0, 0}, {0, 0}), 5.0);
}

TEST(Disk, ContainsWithSlack) {
    const Disk d{{0, 0}, 1};
    EXPECT_TRUE(d.contains({1, 0}));
    EXPECT_FALSE(d.contains({1.001, 0}));
    EXPECT_TRUE(d.contains({1.001, 0}, 0.01));
}
