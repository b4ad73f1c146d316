#pragma once

// Planar primitives shared by every other header: points, disks, instances,
// the tolerance policy, and the handful of predicates the analysis relies on.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace tspn {

/// Thrown when an input violates a documented precondition.
class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Thrown when an input is geometrically degenerate for the requested query
/// (coincident points for an angle, a touch point sitting on its center, ...).
class DegenerateGeometry : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

struct Point {
    double x = 0.0;
    double y = 0.0;

    constexpr Point operator+(Point o) const { return {x + o.x, y + o.y}; }
    constexpr Point operator-(Point o) const { return {x - o.x, y - o.y}; }
    constexpr Point operator*(double s) const { return {x * s, y * s}; }
    constexpr Point operator/(double s) const { return {x / s, y / s}; }
    constexpr Point operator-() const { return {-x, -y}; }
    constexpr bool operator==(const Point&) const = default;

    [[nodiscard]] bool finite() const { return std::isfinite(x) && std::isfinite(y); }
};

constexpr Point operator*(double s, Point p) { return p * s; }

[[nodiscard]] constexpr double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
[[nodiscard]] constexpr double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
[[nodiscard]] inline double norm(Point a) { return std::hypot(a.x, a.y); }
[[nodiscard]] constexpr Point perp(Point a) { return {-a.y, a.x}; }

/// Unit vector in direction `a`; the zero vector maps to zero.
[[nodiscard]] inline Point unit(Point a) {
    const double len = norm(a);
    return len > 0.0 ? a / len : Point{};
}

[[nodiscard]] inline Point polar(double radius, double theta) {
    return {radius * std::cos(theta), radius * std::sin(theta)};
}

/// Euclidean distance.
[[nodiscard]] inline double dist(Point a, Point b) { return norm(a - b); }

/// Tolerances used by predicates. `eps_len` is relative: callers multiply it by
/// the instance length scale (the radius R) before comparing lengths.
struct Tolerance {
    double eps_len = 1e-9;
    double eps_ang = 1e-7;
    double eps_col = 1e-7;

    [[nodiscard]] double len(double scale) const { return eps_len * scale; }

    void validate() const {
        if (!(eps_len > 0.0) || !(eps_ang > 0.0) || !(eps_col > 0.0)) {
            throw InvalidInput("tolerances must be strictly positive");
        }
    }
};

struct Disk {
    Point center;
    double radius = 1.0;

    [[nodiscard]] bool contains(Point p, double slack = 0.0) const {
        return dist(p, center) <= radius + slack;
    }
};

/// A set of uniform disks: one radius plus an ordered list of centers.
struct Instance {
    double radius = 1.0;
    std::vector<Point> centers;
    std::optional<std::string> id;
    /// When set, `validate()` also asserts pairwise center distance >= 2R - tol.
    bool disjoint = false;

    [[nodiscard]] std::size_t size() const { return centers.size(); }
    [[nodiscard]] Disk disk(std::size_t i) const { return {centers.at(i), radius}; }

    void validate(const Tolerance& tol = {}) const;
};

/// True when every pair of disks is separated (center distance >= 2R within
/// the relative length tolerance). Tangent disks count as disjoint.
[[nodiscard]] inline bool pairwise_disjoint(const Instance& inst, const Tolerance& tol = {}) {
    const double limit = 2.0 * inst.radius - tol.len(inst.radius);
    for (std::size_t i = 0; i < inst.size(); ++i) {
        for (std::size_t j = i + 1; j < inst.size(); ++j) {
            if (dist(inst.centers[i], inst.centers[j]) < limit) return false;
        }
    }
    return true;
}

inline void Instance::validate(const Tolerance& tol) const {
    if (!(radius > 0.0) || !std::isfinite(radius)) throw InvalidInput("radius must be positive and finite");
    if (centers.empty()) throw InvalidInput("instance has no disks");
    for (const Point& c : centers) {
        if (!c.finite()) throw InvalidInput("disk center is not finite");
    }
    if (disjoint && !pairwise_disjoint(*this, tol)) {
        throw InvalidInput("instance is flagged disjoint but two disks overlap");
    }
}

/// f(d, beta) = sqrt(d^2 + R^2 - 2 R d cos beta): the distance from the center
/// of one disk to the boundary point of the other disk that sits at angle beta
/// off the center line. The bad-edge threshold is f - R.
[[nodiscard]] inline double f_beta(double d, double beta, double radius) {
    if (d < 0.0) throw InvalidInput("f_beta: negative center distance");
    if (!(radius > 0.0)) throw InvalidInput("f_beta: radius must be positive");
    if (beta < 0.0 || beta > std::numbers::pi) throw InvalidInput("f_beta: beta outside [0, pi]");
    const double sq = d * d + radius * radius - 2.0 * radius * d * std::cos(beta);
    return std::sqrt(std::max(0.0, sq));
}

/// Interior angle a-vertex-b in [0, pi].
[[nodiscard]] inline double angle(Point vertex, Point a, Point b, double eps = 1e-12) {
    const Point u = a - vertex;
    const Point v = b - vertex;
    if (norm(u) <= eps || norm(v) <= eps) {
        throw DegenerateGeometry("angle: arm coincides with vertex");
    }
    return std::atan2(std::abs(cross(u, v)), dot(u, v));
}

enum class Contact { none, tangent, secant };

/// Closed segment vs closed disk. Parameters are along a + t (b - a), t in [0, 1].
/// For `tangent`, enter == exit (the single contact point).
struct SegmentDiskHit {
    Contact kind = Contact::none;
    double t_enter = 0.0;
    double t_exit = 0.0;
    Point enter;
    Point exit;

    [[nodiscard]] bool hit() const { return kind != Contact::none; }
};

[[nodiscard]] inline SegmentDiskHit segment_disk_intersect(Point a, Point b, const Disk& d,
                                                           const Tolerance& tol = {}) {
    const Point ab = b - a;
    const double len2 = dot(ab, ab);
    if (len2 <= 0.0) throw DegenerateGeometry("segment_disk_intersect: zero-length segment");

    const double slack = tol.len(d.radius);
    const double t_closest = std::clamp(dot(d.center - a, ab) / len2, 0.0, 1.0);
    const Point closest = a + ab * t_closest;
    const double gap = dist(closest, d.center) - d.radius;

    SegmentDiskHit hit;
    if (gap > slack) return hit;

    // Line/circle roots, clipped to the segment.
    const Point ac = a - d.center;
    const double half_b = dot(ac, ab) / len2;
    const double c = (dot(ac, ac) - d.radius * d.radius) / len2;
    const double disc = std::max(0.0, half_b * half_b - c);
    const double root = std::sqrt(disc);
    double t0 = std::max(0.0, -half_b - root);
    double t1 = std::min(1.0, -half_b + root);

    if (gap >= -slack || t1 - t0 <= slack / std::sqrt(len2)) {
        hit.kind = Contact::tangent;
        hit.t_enter = hit.t_exit = t_closest;
        hit.enter = hit.exit = closest;
        return hit;
    }
    hit.kind = Contact::secant;
    hit.t_enter = t0;
    hit.t_exit = t1;
    hit.enter = a + ab * t0;
    hit.exit = a + ab * t1;
    return hit;
}

struct Collinearity {
    bool collinear = false;
    /// b lies between a and c (its projection falls inside segment ac).
    bool between = false;
};

/// Collinearity by triangle area normalized by the squared longest side.
[[nodiscard]] inline Collinearity collinear(Point a, Point b, Point c, const Tolerance& tol = {}) {
    const double longest = std::max({dist(a, b), dist(b, c), dist(a, c)});
    Collinearity out;
    if (longest == 0.0) {
        out.collinear = out.between = true;
        return out;
    }
    out.collinear = std::abs(cross(b - a, c - a)) / (longest * longest) <= tol.eps_col;
    const double scale = tol.eps_col * longest * longest;
    out.between = dot(b - a, c - a) >= -scale && dot(b - c, a - c) >= -scale;
    return out;
}

/// Length of the closed polygon through `pts` (0 for fewer than two points).
[[nodiscard]] inline double cycle_length(std::span<const Point> pts) {
    if (pts.size() < 2) return 0.0;
    double total = 0.0;
    for (std::size_t i = 0; i < pts.size(); ++i) total += dist(pts[i], pts[(i + 1) % pts.size()]);
    return total;
}

/// Length of the open polyline through `pts`.
[[nodiscard]] inline double path_length(std::span<const Point> pts) {
    double total = 0.0;
    for (std::size_t i = 1; i < pts.size(); ++i) total += dist(pts[i - 1], pts[i]);
    return total;
}

/// Distance from `p` to the closed segment ab.
[[nodiscard]] inline double point_segment_distance(Point p, Point a, Point b) {
    const Point ab = b - a;
    const double len2 = dot(ab, ab);
    if (len2 == 0.0) return dist(p, a);
    const double t = std::clamp(dot(p - a, ab) / len2, 0.0, 1.0);
    return dist(p, a + ab * t);
}

}  // namespace tspn
