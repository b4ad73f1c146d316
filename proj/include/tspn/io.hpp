#pragma once

// JSON files for instances and tours.
//   instance: {"radius": r, "centers": [[x, y], ...], "id": "..."}
//   tour:     {"order": [i, ...], "touch_points": [[x, y], ...], "length": L}

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "tspn/geometry.hpp"
#include "tspn/oracle.hpp"

namespace tspn {

using Json = nlohmann::json;

namespace detail {

inline Json points_json(std::span<const Point> pts) {
    Json arr = Json::array();
    for (const Point& p : pts) arr.push_back({p.x, p.y});
    return arr;
}

inline std::vector<Point> points_from(const Json& arr, const char* field) {
    if (!arr.is_array()) throw InvalidInput(std::string(field) + " must be an array");
    std::vector<Point> out;
    for (const Json& p : arr) {
        if (!p.is_array() || p.size() != 2 || !p[0].is_number() || !p[1].is_number()) {
            throw InvalidInput(std::string(field) + " entries must be [x, y]");
        }
        out.push_back({p[0].get<double>(), p[1].get<double>()});
    }
    return out;
}

}  // namespace detail

[[nodiscard]] inline Json to_json(const Instance& inst) {
    Json j{{"radius", inst.radius}, {"centers", detail::points_json(inst.centers)}};
    if (inst.id) j["id"] = *inst.id;
    return j;
}

[[nodiscard]] inline Json to_json(const Tour& tour) {
    return {{"order", tour.order.indices()},
            {"touch_points", detail::points_json(tour.touch_points)},
            {"length", tour.length}};
}

[[nodiscard]] inline Instance instance_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("radius") || !j.contains("centers")) {
        throw InvalidInput("instance JSON needs radius and centers");
    }
    if (!j["radius"].is_number()) throw InvalidInput("radius must be a number");
    Instance inst;
    inst.radius = j["radius"].get<double>();
    inst.centers = detail::points_from(j["centers"], "centers");
    if (j.contains("id")) {
        if (!j["id"].is_string()) throw InvalidInput("id must be a string");
        inst.id = j["id"].get<std::string>();
    }
    inst.validate();
    return inst;
}

[[nodiscard]] inline Tour tour_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("order") || !j.contains("touch_points")) {
        throw InvalidInput("tour JSON needs order and touch_points");
    }
    Tour t;
    std::vector<std::size_t> order;
    for (const Json& v : j["order"]) {
        if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0)) {
            throw InvalidInput("order entries must be non-negative integers");
        }
        order.push_back(v.get<std::size_t>());
    }
    t.order = OrderPermutation(order);
    t.touch_points = detail::points_from(j["touch_points"], "touch_points");
    if (t.touch_points.size() != order.size()) throw InvalidInput("order and touch_points differ in size");
    t.length = cycle_length(t.touch_points);
    return t;
}

[[nodiscard]] inline Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw InvalidInput(path + ": " + e.what());
    }
}

inline void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InvalidInput("cannot write " + path);
    out << text;
    if (!out) throw InvalidInput("write failed: " + path);
}

inline void write_json_file(const std::string& path, const Json& j) { write_text_file(path, j.dump(2) + "\n"); }

[[nodiscard]] inline Instance read_instance(const std::string& path) { return instance_from_json(read_json_file(path)); }
[[nodiscard]] inline Tour read_tour(const std::string& path) { return tour_from_json(read_json_file(path)); }

}  // namespace tspn
