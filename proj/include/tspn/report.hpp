#pragma once

// One CSV row per (instance, algorithm) run.

#include <cstdio>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace tspn {

struct ExperimentReport {
    std::string instance_id;
    std::string algorithm;
    double tour_length = 0.0;
    std::optional<double> oracle_length;
    /// tour_length / oracle_length.
    std::optional<double> ratio;
    /// Tour through the centers in the analyzed order minus the TSPN tour.
    double detour = 0.0;
    /// Upper bound the algorithm guarantees on tour_length, when it has one.
    std::optional<double> active_bound;
    std::size_t triad_count = 0;
    std::string case_label;
    /// Seconds; left empty unless timing was requested, so runs stay
    /// byte-reproducible.
    std::optional<double> wall_time;

    void set_oracle(double oracle) {
        oracle_length = oracle;
        ratio = oracle > 0.0 ? std::optional<double>(tour_length / oracle) : std::nullopt;
    }
};

inline constexpr const char* kReportHeader =
    "instance_id,algorithm,tour_length,oracle_length,ratio,detour,active_bound,triad_count,case,wall_time";

namespace detail {

inline std::string csv_num(std::optional<double> v) {
    if (!v) return "";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", *v);
    return buf;
}

inline std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) {
        if (c == '"') q += '"';
        q += c;
    }
    return q + "\"";
}

}  // namespace detail

[[nodiscard]] inline std::string csv_row(const ExperimentReport& r) {
    using detail::csv_num;
    return detail::csv_field(r.instance_id) + "," + detail::csv_field(r.algorithm) + "," + csv_num(r.tour_length) +
           "," + csv_num(r.oracle_length) + "," + csv_num(r.ratio) + "," + csv_num(r.detour) + "," +
           csv_num(r.active_bound) + "," + std::to_string(r.triad_count) + "," + detail::csv_field(r.case_label) +
           "," + csv_num(r.wall_time);
}

inline void write_csv(std::ostream& out, const std::vector<ExperimentReport>& rows) {
    out << kReportHeader << '\n';
    for (const auto& r : rows) out << csv_row(r) << '\n';
}

}  // namespace tspn
