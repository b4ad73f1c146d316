// tspn: generate instances, solve, analyze, verify, benchmark and render.
// Exit codes: 0 success, 1 assertion violation or failed run, 2 usage error.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tspn/tspn.hpp"
#include "tspn/verify.hpp"

namespace {

using namespace tspn;

constexpr int kOk = 0;
constexpr int kViolation = 1;
constexpr int kUsage = 2;

/// Thrown when a run completes but an asserted property fails.
struct AssertionFailed : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Json check_json(const CheckReport& r) {
    Json v = Json::array();
    for (const Violation& x : r.violations) {
        v.push_back({{"check", x.check}, {"edge", x.edge}, {"value", x.value}, {"limit", x.limit}});
    }
    return {{"checked", r.checked}, {"skipped", r.skipped}, {"violations", v}};
}

Json triad_json(const BetaTriad& t) {
    return {{"positions", t.positions}, {"disks", t.disks},     {"edges", t.edges},
            {"reversed", t.reversed},   {"p1", {t.p1.x, t.p1.y}}, {"q1", {t.q1.x, t.q1.y}},
            {"span_length", t.span_length}};
}

const char* case_name(BoundCase c) { return c == BoundCase::one ? "one" : "two"; }

void emit(const std::string& path, const Json& j) {
    if (path.empty() || path == "-") {
        std::cout << j.dump(2) << "\n";
    } else {
        write_json_file(path, j);
    }
}

// ---------------------------------------------------------------- gen

struct GenArgs {
    std::size_t n = 8;
    double radius = 1.0;
    double box = 20.0;
    std::uint64_t seed = 1;
    bool overlapping = false;
    bool sharp_turn = false;
    bool line = false;
    double beta = default_beta();
    std::string out;
};

int run_gen(const GenArgs& a) {
    Instance inst;
    if (a.sharp_turn) {
        SharpTurnParams p;
        p.beta = a.beta;
        inst = gen_sharp_turn_triad(p, a.seed).instance;
    } else if (a.line) {
        inst = gen_line_transversal(a.n, a.radius, a.box, 1.0, a.seed);
    } else if (a.overlapping) {
        inst = gen_overlapping(a.n, a.radius, a.box, a.seed);
    } else {
        inst = gen_disjoint(a.n, a.radius, a.box, a.seed);
    }
    emit(a.out, to_json(inst));
    return kOk;
}

// ---------------------------------------------------------------- solve

struct SolveArgs {
    std::string algo = "exact";
    std::string in;
    std::string out;
};

int run_solve(const SolveArgs& a) {
    const Instance inst = read_instance(a.in);
    Json j;
    if (a.algo == "exact") {
        j = to_json(snap_to_boundary(inst, tspn_exact_small(inst)));
    } else if (a.algo == "centers") {
        j = to_json(approx_disjoint(inst));
    } else if (a.algo == "overlap") {
        const OverlapSolution sol = solve_overlapping(inst);
        j = to_json(sol.tour.base);
        Json detours = Json::array();
        for (const DetourArc& d : sol.tour.detours) {
            detours.push_back({{"center", {d.center.x, d.center.y}},
                               {"radius", d.radius},
                               {"start_angle", d.start_angle},
                               {"sweep", d.sweep}});
        }
        j["subset"] = sol.subset;
        j["splice_points"] = detail::points_json(sol.tour.splice_points);
        j["detours"] = detours;
        j["total_length"] = sol.tour.total_length;
        j["subroutine_factor_a"] = sol.report.subroutine_factor_a;
        j["bound"] = {{"multiplicative", sol.report.built.multiplicative},
                      {"additive_per_radius", sol.report.built.additive_per_radius}};
    } else if (a.algo == "stab") {
        const auto sol = stabbing_segment(inst);
        if (!sol) {
            j = {{"feasible", false}};
        } else {
            j = to_json(sol->as_tour());
            j["feasible"] = true;
            j["segment"] = {{sol->start.x, sol->start.y}, {sol->end.x, sol->end.y}};
            j["tour_length"] = sol->tour_length;
        }
    } else if (a.algo == "rect") {
        const auto sol = rectangle_transversal(inst);
        if (!sol) {
            j = {{"feasible", false}};
        } else {
            j = to_json(sol->tour);
            j["feasible"] = true;
            const auto c = sol->corners();
            j["rectangle"] = detail::points_json(c);
            j["perimeter"] = sol->perimeter;
            j["fell_back"] = sol->fell_back;
        }
    } else {
        throw InvalidInput("unknown algorithm: " + a.algo);
    }
    j["algorithm"] = a.algo;
    emit(a.out, j);
    return kOk;
}

// ---------------------------------------------------------------- analyze

struct AnalyzeArgs {
    double beta = default_beta();
    double alpha = 2.0;
    std::string instance;
    std::string tour;
    std::string out;
};

int run_analyze(const AnalyzeArgs& a) {
    const Instance inst = read_instance(a.instance);
    const Tour tour = read_tour(a.tour);
    if (tour.size() != inst.size()) throw InvalidInput("tour and instance sizes differ");
    AnalysisParams params;
    params.beta = a.beta;
    params.alpha = a.alpha;
    params.validate();

    Json edges = Json::array();
    for (const EdgeClass& e : classify_edges(inst, tour, params)) {
        edges.push_back({{"index", e.index},
                         {"from", e.from_disk},
                         {"to", e.to_disk},
                         {"bad", e.bad},
                         {"length", e.edge_length},
                         {"center_distance", e.center_distance},
                         {"threshold", e.threshold}});
    }
    const CheckReport angle = check_angle_lemma(inst, tour, params);
    const CheckReport good = check_good_edge_detour(inst, tour, params);
    const ChordBound chord = chord_detour_bound(inst, tour, params.tol);
    const CheckReport inter = check_intersection_theorem(inst, tour, params);
    const CheckReport collinear_pairs = check_collinear_bad_pairs(inst, tour, params);
    const TriadReport triads = check_averaging_bound(inst, tour, params);

    Json j{{"beta", params.beta}, {"alpha", params.alpha}, {"tour_length", tour.length}, {"edges", edges}};
    j["checks"] = {{"angle_lemma", check_json(angle)},
                   {"good_edge_detour", check_json(good)},
                   {"chord_bound", check_json(chord.per_edge)},
                   {"intersection_theorem", check_json(inter)},
                   {"collinear_bad_pairs", check_json(collinear_pairs)}};
    j["chord_bound_total"] = chord.bound;
    Json tj = Json::array();
    for (const BetaTriad& t : triads.detection.triads) tj.push_back(triad_json(t));
    j["triads"] = tj;
    j["triad_issues"] = triads.detection.issues;
    if (triads.sigma_prime) j["sigma_prime"] = triads.sigma_prime->indices();
    if (triads.averaging) {
        const AveragingReport& r = *triads.averaging;
        j["averaging"] = {{"tsp_sigma", r.tsp_sigma}, {"tsp_sigma_prime", r.tsp_sigma_prime},
                          {"tsp_common", r.tsp_common}, {"triad_length", r.triad_length},
                          {"lhs", r.lhs},             {"rhs", r.rhs},
                          {"slack", r.slack}};
    }
    if (inst.size() >= 4) {
        const DetourLedger led = build_detour_ledger(inst, tour, params);
        j["ledger"] = {{"n", led.n},
                       {"k1", led.k1},
                       {"triad_length", led.triad_length},
                       {"N", led.good_outside},
                       {"M", led.bad_outside},
                       {"K", led.K},
                       {"case", case_name(led.active)},
                       {"case_one_coefficient", led.case_one_coefficient},
                       {"case_two_factor", led.case_two_factor},
                       {"bound_value", led.bound_value},
                       {"combined_bound", led.combined_bound},
                       {"short_bad_outside", led.short_bad_outside},
                       {"sigma_prime", led.sigma_prime.indices()},
                       {"issues", led.issues}};
    }
    emit(a.out, j);
    // These hold for any tour with touch points on the disks; the
    // intersection and collinearity checks assume an optimal tour and are
    // only reported.
    if (!angle.ok() || !good.ok() || !chord.per_edge.ok()) throw AssertionFailed("geometric check violated");
    return kOk;
}

// ---------------------------------------------------------------- verify

struct VerifyArgs {
    std::string suite;
    std::size_t trials = 0;
    std::uint64_t seed = 1;
    std::string out;
};

std::size_t default_trials(const std::string& suite) {
    if (suite == "n3") return 10000;
    if (suite == "angle") return 10000;
    if (suite == "eq1" || suite == "intersect") return 1000;
    return 200;
}

int run_verify(const VerifyArgs& a) {
    const std::size_t trials = a.trials > 0 ? a.trials : default_trials(a.suite);
    const SuiteResult r = run_suite(a.suite, trials, a.seed);
    std::printf("%s %s cases=%zu checked=%zu violations=%zu\n", r.passed() ? "PASS" : "FAIL", r.name.c_str(),
                r.cases, r.checked, r.violations);
    for (const auto& [k, v] : r.metrics) std::printf("  %s = %.10g\n", k.c_str(), v);
    if (!a.out.empty()) {
        Json m = Json::object();
        for (const auto& [k, v] : r.metrics) m[k] = v;
        write_json_file(a.out, {{"suite", r.name},
                                {"passed", r.passed()},
                                {"cases", r.cases},
                                {"checked", r.checked},
                                {"violations", r.violations},
                                {"metrics", m}});
    }
    return r.passed() ? kOk : kViolation;
}

// ---------------------------------------------------------------- bench

struct BenchArgs {
    std::string family = "disjoint";
    std::vector<std::size_t> sizes{4, 6, 8};
    std::size_t trials = 5;
    std::uint64_t seed = 1;
    bool timing = false;
    std::string out;
};

template <typename F>
auto timed(bool on, std::optional<double>& secs, F&& f) {
    const auto t0 = std::chrono::steady_clock::now();
    auto result = f();
    if (on) secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return result;
}

std::vector<ExperimentReport> bench_instance(const Instance& inst, const std::string& family, bool timing) {
    std::vector<ExperimentReport> rows;
    const std::string id = inst.id.value_or("instance");
    const bool exact_ok = inst.size() >= 3 && inst.size() <= 8;
    std::optional<double> oracle;
    AnalysisParams params;

    if (exact_ok) {
        ExperimentReport r;
        r.instance_id = id;
        r.algorithm = "exact";
        const Tour t = timed(timing, r.wall_time, [&] { return snap_to_boundary(inst, tspn_exact_small(inst)); });
        r.tour_length = t.length;
        r.set_oracle(t.length);
        oracle = t.length;
        r.detour = order_length(inst.centers, t.order) - t.length;
        if (inst.size() >= 4 && family != "overlapping") {
            const DetourLedger led = build_detour_ledger(inst, t, params);
            r.triad_count = led.k1;
            r.case_label = case_name(led.active);
            r.active_bound = led.bound_value;
        }
        rows.push_back(r);
    }
    auto push = [&](ExperimentReport r, double tspn_for_detour) {
        if (oracle) r.set_oracle(*oracle);
        r.detour = r.tour_length - tspn_for_detour;
        rows.push_back(std::move(r));
    };
    if (family == "overlapping") {
        ExperimentReport r;
        r.instance_id = id;
        r.algorithm = "overlap";
        const OverlapSolution sol = timed(timing, r.wall_time, [&] { return solve_overlapping(inst); });
        r.tour_length = sol.tour.total_length;
        if (oracle) r.active_bound = sol.report.built.bound(*oracle, inst.radius);
        push(r, oracle.value_or(r.tour_length));
        return rows;
    }
    {
        ExperimentReport r;
        r.instance_id = id;
        r.algorithm = "centers";
        const Tour t = timed(timing, r.wall_time, [&] { return approx_disjoint(inst); });
        r.tour_length = t.length;
        if (oracle) r.active_bound = *oracle + 2.0 * inst.radius * static_cast<double>(inst.size());
        push(r, oracle.value_or(r.tour_length));
    }
    if (family == "line") {
        ExperimentReport s;
        s.instance_id = id;
        s.algorithm = "stab";
        const auto stab = timed(timing, s.wall_time, [&] { return stabbing_segment(inst); });
        if (stab) {
            s.tour_length = stab->tour_length;
            if (oracle) s.active_bound = *oracle + 4.0 * inst.radius;
            push(s, oracle.value_or(s.tour_length));
        }
        ExperimentReport q;
        q.instance_id = id;
        q.algorithm = "rect";
        const auto rect = timed(timing, q.wall_time, [&] { return rectangle_transversal(inst); });
        if (rect) {
            q.tour_length = rect->tour.length;
            if (oracle) q.active_bound = std::numbers::sqrt2 * *oracle;
            push(q, oracle.value_or(q.tour_length));
        }
    }
    return rows;
}

int run_bench(const BenchArgs& a) {
    std::vector<Instance> insts;
    for (std::size_t n : a.sizes) {
        for (std::size_t k = 0; k < a.trials; ++k) {
            const std::uint64_t s = trial_seed(a.seed, n * 100003 + k);
            if (a.family == "disjoint") {
                insts.push_back(gen_disjoint(n, 1.0, box_for_density(n, 1.0, 0.15), s));
            } else if (a.family == "overlapping") {
                insts.push_back(gen_overlapping(n, 1.0, box_for_density(n, 1.0, 0.6), s));
            } else if (a.family == "sharp") {
                SharpTurnParams p;
                p.double_turn = n >= 8;
                insts.push_back(gen_sharp_turn_triad(p, s).instance);
            } else if (a.family == "line") {
                insts.push_back(gen_line_transversal(n, 1.0, 4.0 * static_cast<double>(n), 1.0, s));
            } else {
                throw InvalidInput("unknown family: " + a.family);
            }
        }
    }
    // Timing runs serially so workers do not skew each other.
    const auto per = parallel_map(
        insts.size(), [&](std::size_t i) { return bench_instance(insts[i], a.family, a.timing); },
        a.timing ? 1 : worker_count());
    std::vector<ExperimentReport> rows;
    for (const auto& r : per) rows.insert(rows.end(), r.begin(), r.end());
    if (a.out.empty() || a.out == "-") {
        write_csv(std::cout, rows);
    } else {
        std::ofstream f(a.out, std::ios::binary);
        if (!f) throw InvalidInput("cannot write " + a.out);
        write_csv(f, rows);
    }
    return kOk;
}

// ---------------------------------------------------------------- render

struct RenderArgs {
    std::string instance;
    std::string tour;
    std::string out;
    double beta = default_beta();
    bool stab = false;
    bool rect = false;
};

int run_render(const RenderArgs& a) {
    const Instance inst = read_instance(a.instance);
    std::optional<Tour> tour;
    SvgOverlay overlay;
    if (!a.tour.empty()) {
        tour = read_tour(a.tour);
        if (tour->size() != inst.size()) throw InvalidInput("tour and instance sizes differ");
        if (inst.size() >= 2) {
            AnalysisParams params;
            params.beta = a.beta;
            overlay.edges = classify_edges(inst, *tour, params);
            if (inst.size() >= 4) overlay.triads = detect_beta_triads(inst, *tour, params).triads;
        }
    }
    if (a.stab) overlay.stabbing = stabbing_segment(inst);
    if (a.rect) overlay.rectangle = rectangle_transversal(inst);
    const std::string svg = render_svg(inst, tour, overlay);
    if (a.out.empty() || a.out == "-") {
        std::cout << svg;
    } else {
        write_text_file(a.out, svg);
    }
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"TSPN on uniform disks: solvers, structural checks and experiments"};
    app.require_subcommand(1);

    GenArgs gen;
    auto* g = app.add_subcommand("gen", "Generate an instance");
    g->add_option("--n", gen.n, "Number of disks")->check(CLI::PositiveNumber);
    g->add_option("--radius", gen.radius, "Disk radius")->check(CLI::PositiveNumber);
    g->add_option("--box", gen.box, "Box side (line length with --line)")->check(CLI::PositiveNumber);
    g->add_option("--seed", gen.seed, "Seed");
    auto* ov = g->add_flag("--overlapping", gen.overlapping, "No separation constraint");
    auto* sh = g->add_flag("--sharp-turn", gen.sharp_turn, "Four-disk instance with a beta-triad");
    g->add_flag("--line", gen.line, "Disjoint disks met by one line")->excludes(ov)->excludes(sh);
    sh->excludes(ov);
    g->add_option("--beta", gen.beta, "Beta for --sharp-turn");
    g->add_option("-o,--output", gen.out, "Output JSON (default stdout)");

    SolveArgs solve;
    auto* s = app.add_subcommand("solve", "Solve an instance");
    s->add_option("--algo", solve.algo, "Algorithm")
        ->check(CLI::IsMember({"exact", "centers", "overlap", "stab", "rect"}));
    s->add_option("-i,--input", solve.in, "Instance JSON")->required();
    s->add_option("-o,--output", solve.out, "Tour JSON (default stdout)");

    AnalyzeArgs an;
    auto* a = app.add_subcommand("analyze", "Edge classes, triads and the detour ledger of a tour");
    a->add_option("--beta", an.beta, "Beta in [0, pi/12]");
    a->add_option("--alpha", an.alpha, "Alpha > 1");
    a->add_option("-i,--instance", an.instance, "Instance JSON")->required();
    a->add_option("-t,--tour", an.tour, "Tour JSON")->required();
    a->add_option("-o,--output", an.out, "Report JSON (default stdout)");

    VerifyArgs ver;
    auto* v = app.add_subcommand("verify", "Run a property suite");
    v->add_option("--suite", ver.suite, "Suite")->required()->check(CLI::IsMember(suite_names()));
    v->add_option("--trials", ver.trials, "Trials (default depends on suite)");
    v->add_option("--seed", ver.seed, "Seed");
    v->add_option("-o,--output", ver.out, "Summary JSON");

    BenchArgs bench;
    auto* b = app.add_subcommand("bench", "Run algorithms over a family and write CSV");
    b->add_option("--family", bench.family, "Instance family")
        ->check(CLI::IsMember({"disjoint", "overlapping", "sharp", "line"}));
    b->add_option("--sizes", bench.sizes, "Comma-separated sizes")->delimiter(',');
    b->add_option("--trials", bench.trials, "Instances per size");
    b->add_option("--seed", bench.seed, "Seed");
    b->add_flag("--timing", bench.timing, "Fill the wall_time column");
    b->add_option("-o,--output", bench.out, "CSV (default stdout)");

    RenderArgs ren;
    auto* r = app.add_subcommand("render", "Draw an instance and tour as SVG");
    r->add_option("-i,--instance", ren.instance, "Instance JSON")->required();
    r->add_option("-t,--tour", ren.tour, "Tour JSON");
    r->add_option("--beta", ren.beta, "Beta for bad-edge colouring");
    r->add_flag("--stab", ren.stab, "Draw the stabbing segment");
    r->add_flag("--rect", ren.rect, "Draw the transversal rectangle");
    r->add_option("-o,--output", ren.out, "SVG (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (g->parsed()) return run_gen(gen);
        if (s->parsed()) return run_solve(solve);
        if (a->parsed()) return run_analyze(an);
        if (v->parsed()) return run_verify(ver);
        if (b->parsed()) return run_bench(bench);
        if (r->parsed()) return run_render(ren);
    } catch (const AssertionFailed& e) {
        std::cerr << "assertion failed: " << e.what() << "\n";
        return kViolation;
    } catch (const InvalidInput& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kViolation;
    }
    return kUsage;
}
