#include <cmath>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <sstream>

#include <gtest/gtest.h>

#include "tspn/tspn.hpp"
#include "tspn/verify.hpp"

using namespace tspn;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Fixed instance and tour for the golden figure.
Instance golden_instance() { return Instance{1.0, {{0, 0}, {6, 0.5}, {7, 6}, {1, 5}, {3.5, 2.5}}, "golden", true}; }

}  // namespace

TEST(Generators, Deterministic) {
    EXPECT_EQ(gen_disjoint(6, 1.0, 12.0, 17).centers, gen_disjoint(6, 1.0, 12.0, 17).centers);
    EXPECT_NE(gen_disjoint(6, 1.0, 12.0, 17).centers, gen_disjoint(6, 1.0, 12.0, 18).centers);
    EXPECT_EQ(gen_overlapping(9, 1.0, 6.0, 3).centers, gen_overlapping(9, 1.0, 6.0, 3).centers);
    EXPECT_EQ(gen_line_transversal(5, 1.0, 10.0, 0.5, 2).centers, gen_line_transversal(5, 1.0, 10.0, 0.5, 2).centers);
}

TEST(Generators, DisjointAndInBox) {
    const Instance inst = gen_disjoint(12, 0.5, 10.0, 4);
    EXPECT_TRUE(pairwise_disjoint(inst));
    for (const Point& c : inst.centers) {
        EXPECT_GE(c.x, 0.5);
        EXPECT_LE(c.x, 9.5);
        EXPECT_GE(c.y, 0.5);
        EXPECT_LE(c.y, 9.5);
    }
    EXPECT_THROW((void)gen_disjoint(500, 1.0, 10.0, 1, 1000), GenerationFailed);
}

TEST(Generators, LineTransversalIsStabbable) {
    for (std::uint64_t s = 0; s < 20; ++s) {
        const Instance inst = gen_line_transversal(6, 1.0, 18.0, 0.7, s);
        EXPECT_TRUE(pairwise_disjoint(inst));
        EXPECT_TRUE(stabbing_segment(inst).has_value());
    }
}

TEST(Generators, SharpTurnRejectsBetaOutOfRange) {
    SharpTurnParams p;
    p.beta = std::numbers::pi / 12.0;
    EXPECT_THROW((void)gen_sharp_turn_triad(p, 1), InvalidInput);
    p.beta = 0.0;
    EXPECT_THROW((void)gen_sharp_turn_triad(p, 1), InvalidInput);
}

TEST(Json, InstanceRoundTrip) {
    const Instance inst = gen_disjoint(5, 1.25, 12.0, 8);
    const Instance back = instance_from_json(Json::parse(to_json(inst).dump()));
    EXPECT_EQ(back.centers, inst.centers);
    EXPECT_EQ(back.radius, inst.radius);
    EXPECT_EQ(back.id, inst.id);
}

TEST(Json, TourRoundTripRecomputesLength) {
    const Instance inst = gen_disjoint(5, 1.0, 12.0, 8);
    const Tour t = tspn_exact_small(inst);
    Json j = to_json(t);
    j["length"] = 12345.0;
    const Tour back = tour_from_json(j);
    EXPECT_EQ(back.order, t.order);
    EXPECT_EQ(back.touch_points, t.touch_points);
    EXPECT_NEAR(back.length, t.length, 1e-12);
}

TEST(Json, RejectsMalformed) {
    EXPECT_THROW((void)instance_from_json(Json::parse(R"({"radius": 1})")), InvalidInput);
    EXPECT_THROW((void)instance_from_json(Json::parse(R"({"radius": "x", "centers": []})")), InvalidInput);
    EXPECT_THROW((void)instance_from_json(Json::parse(R"({"radius": 1, "centers": [[0]]})")), InvalidInput);
    EXPECT_THROW((void)instance_from_json(Json::parse(R"({"radius": -1, "centers": [[0, 0]]})")), InvalidInput);
    EXPECT_THROW((void)tour_from_json(Json::parse(R"({"order": [0, 0], "touch_points": [[0, 0], [1, 1]]})")),
                 InvalidInput);
    EXPECT_THROW((void)read_json_file("/nonexistent/file.json"), InvalidInput);
}

TEST(Json, ReadsShippedExample) {
    const Instance inst = read_instance(std::string(TSPN_TEST_DATA) + "/golden_instance.json");
    EXPECT_EQ(inst.centers, golden_instance().centers);
}

TEST(Svg, DeterministicAndWellFormed) {
    const Instance inst = golden_instance();
    const Tour t = snap_to_boundary(inst, tspn_exact_small(inst));
    SvgOverlay ov;
    ov.edges = classify_edges(inst, t, AnalysisParams{});
    const std::string a = render_svg(inst, t, ov);
    EXPECT_EQ(a, render_svg(inst, t, ov));
    EXPECT_EQ(a.rfind("<svg", 0), 0u);
    EXPECT_NE(a.find("</svg>"), std::string::npos);
    std::size_t circles = 0;
    for (std::size_t p = a.find("<circle"); p != std::string::npos; p = a.find("<circle", p + 1)) ++circles;
    EXPECT_GE(circles, inst.size());
}

TEST(Svg, MatchesGoldenFile) {
    const Instance inst = golden_instance();
    const Tour t = snap_to_boundary(inst, tspn_exact_small(inst));
    SvgOverlay ov;
    ov.edges = classify_edges(inst, t, AnalysisParams{});
    const std::string golden = slurp(std::string(TSPN_TEST_DATA) + "/golden.svg");
    ASSERT_FALSE(golden.empty());
    EXPECT_EQ(render_svg(inst, t, ov), golden);
}

TEST(Csv, RowFormatAndQuoting) {
    ExperimentReport r;
    r.instance_id = "a,b";
    r.algorithm = "exact";
    r.tour_length = 2.5;
    r.set_oracle(2.0);
    r.triad_count = 1;
    r.case_label = "1";
    EXPECT_EQ(csv_row(r), "\"a,b\",exact,2.5,2,1.25,0,,1,1,");
    std::ostringstream out;
    write_csv(out, {r});
    EXPECT_EQ(out.str().substr(0, out.str().find('\n')), kReportHeader);
}

TEST(Minkowski, PointNeighborhoodIsADisk) {
    const std::vector<Point> pt{{0, 0}};
    const auto rep = verify_minkowski_lemma(pt, false, 1.0, 200000, 3);
    EXPECT_NEAR(rep.estimate, std::numbers::pi, 4.0 * rep.std_error);
    EXPECT_TRUE(rep.holds);
}

TEST(Minkowski, StadiumIsTight) {
    // Segment of length L: the neighborhood is a stadium of area 2xL + pi x^2.
    const std::vector<Point> seg{{0, 0}, {10, 0}};
    const auto rep = verify_minkowski_lemma(seg, false, 1.0, 400000, 5);
    EXPECT_NEAR(rep.estimate, 20.0 + std::numbers::pi, 4.0 * rep.std_error);
    EXPECT_TRUE(rep.holds);
}

TEST(Minkowski, ClosedSquareBelowBound) {
    const std::vector<Point> sq{{0, 0}, {4, 0}, {4, 4}, {0, 4}};
    const auto rep = verify_minkowski_lemma(sq, true, 1.0, 200000, 9);
    // Exact area: outer rounded square minus inner 2x2 hole.
    const double exact = (36.0 - 4.0 * (1.0 - std::numbers::pi / 4.0)) - 4.0;
    EXPECT_NEAR(rep.estimate, exact, 4.0 * rep.std_error);
    EXPECT_LE(exact, rep.bound);
}

TEST(Minkowski, PackingBound) {
    EXPECT_NEAR(packing_lower_bound(8, 1.0), std::numbers::pi, 1e-15);
    for (std::uint64_t s = 0; s < 10; ++s) {
        const Instance inst = gen_disjoint(8, 1.0, 10.0, s);
        EXPECT_GE(tspn_exact_small(inst).length, packing_lower_bound(8, 1.0));
    }
}

TEST(Parallel, OrderedResultsAndErrors) {
    const auto v = parallel_map(100, [](std::size_t i) { return i * i; }, 4);
    for (std::size_t i = 0; i < v.size(); ++i) EXPECT_EQ(v[i], i * i);
    EXPECT_THROW((void)parallel_map(
                     10,
                     [](std::size_t i) -> int {
                         if (i == 7) throw InvalidInput("boom");
                         return 0;
                     },
                     3),
                 InvalidInput);
    EXPECT_NE(trial_seed(1, 0), trial_seed(1, 1));
    EXPECT_EQ(trial_seed(5, 9), trial_seed(5, 9));
}

TEST(Parallel, WorkerEnv) {
    ::setenv(kWorkersEnv, "3", 1);
    EXPECT_EQ(worker_count(), 3u);
    ::setenv(kWorkersEnv, "zero", 1);
    EXPECT_THROW((void)worker_count(), InvalidInput);
    ::unsetenv(kWorkersEnv);
    EXPECT_GE(worker_count(), 1u);
}

TEST(Sweeps, ResultsIndependentOfWorkerCount) {
    ::setenv(kWorkersEnv, "1", 1);
    const auto a = conjecture_sweep(4, 20, 77);
    ::setenv(kWorkersEnv, "3", 1);
    const auto b = conjecture_sweep(4, 20, 77);
    ::unsetenv(kWorkersEnv);
    EXPECT_EQ(a.max_per_disk, b.max_per_disk);
    EXPECT_EQ(a.histogram, b.histogram);
}

TEST(Sweeps, ConjectureSmall) {
    const auto rep = conjecture_sweep(3, 100, 1);
    EXPECT_TRUE(rep.within_two);
    EXPECT_TRUE(rep.within_sqrt3);
    std::size_t total = 0;
    for (std::size_t c : rep.histogram) total += c;
    EXPECT_EQ(total, 100u);
}

TEST(Sweeps, OrderDetourWithinTwoRn) {
    for (std::uint64_t s = 0; s < 10; ++s) {
        const DetourSample d = order_detour(gen_disjoint(5, 1.0, 10.0, s));
        EXPECT_LE(d.detour, d.limit + 1e-9);
    }
}

TEST(Suites, EverySuiteRunsSmall) {
    for (const std::string& name : suite_names()) {
        const SuiteResult r = run_suite(name, 6, 1);
        EXPECT_TRUE(r.passed()) << name;
        EXPECT_EQ(r.name, name);
    }
    EXPECT_THROW((void)run_suite("nope", 1, 1), InvalidInput);
}
