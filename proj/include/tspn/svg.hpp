#pragma once

// Deterministic SVG figures of an instance and a tour, with optional overlays.

#include <algorithm>
#include <array>
#include <cstdio>
#include <optional>
#include <string>
#include <vector>

#include "tspn/approx.hpp"
#include "tspn/geometry.hpp"
#include "tspn/oracle.hpp"
#include "tspn/structure.hpp"

namespace tspn {

struct SvgOverlay {
    /// Edge classes of the tour; bad edges are drawn in red.
    std::vector<EdgeClass> edges;
    std::vector<BetaTriad> triads;
    std::optional<StabbingSolution> stabbing;
    std::optional<RectangleSolution> rectangle;
};

namespace detail {

class SvgWriter {
public:
    SvgWriter(double min_x, double min_y, double max_x, double max_y, double width_px)
        : min_x_(min_x), max_y_(max_y), scale_(width_px / std::max(max_x - min_x, 1e-12)) {
        width_ = width_px;
        height_ = (max_y - min_y) * scale_;
        out_ += fmt("<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"%.0f\" height=\"%.0f\" viewBox=\"0 0 %.2f %.2f\">\n",
                    width_, height_, width_, height_);
        out_ += fmt("<rect width=\"%.2f\" height=\"%.2f\" fill=\"white\"/>\n", width_, height_);
    }

    [[nodiscard]] double sx(double x) const { return (x - min_x_) * scale_; }
    [[nodiscard]] double sy(double y) const { return (max_y_ - y) * scale_; }
    [[nodiscard]] double len(double d) const { return d * scale_; }

    void circle(Point c, double r_px, const char* style) {
        out_ += fmt("<circle cx=\"%.3f\" cy=\"%.3f\" r=\"%.3f\" %s/>\n", sx(c.x), sy(c.y), r_px, style);
    }
    void line(Point a, Point b, const char* style) {
        out_ += fmt("<line x1=\"%.3f\" y1=\"%.3f\" x2=\"%.3f\" y2=\"%.3f\" %s/>\n", sx(a.x), sy(a.y), sx(b.x), sy(b.y),
                    style);
    }
    void polyline(std::span<const Point> pts, bool closed, const char* style) {
        out_ += closed ? "<polygon points=\"" : "<polyline points=\"";
        for (std::size_t i = 0; i < pts.size(); ++i) {
            out_ += fmt(i == 0 ? "%.3f,%.3f" : " %.3f,%.3f", sx(pts[i].x), sy(pts[i].y));
        }
        out_ += fmt("\" %s/>\n", style);
    }
    void text(Point at, const std::string& s, const char* style) {
        out_ += fmt("<text x=\"%.3f\" y=\"%.3f\" %s>", sx(at.x), sy(at.y), style) + s + "</text>\n";
    }
    void raw(const std::string& s) { out_ += s; }

    std::string finish() {
        out_ += "</svg>\n";
        return std::move(out_);
    }

    template <typename... Args>
    static std::string fmt(const char* f, Args... args) {
        const int n = std::snprintf(nullptr, 0, f, args...);
        std::string s(static_cast<std::size_t>(n) + 1, '\0');
        std::snprintf(s.data(), s.size(), f, args...);
        s.resize(static_cast<std::size_t>(n));
        return s;
    }

private:
    double min_x_, max_y_, scale_;
    double width_ = 0.0, height_ = 0.0;
    std::string out_;
};

}  // namespace detail

/// Disks, centers, the tour polygon and its touch points. Output depends only
/// on the inputs.
[[nodiscard]] inline std::string render_svg(const Instance& inst, const std::optional<Tour>& tour,
                                            const SvgOverlay& overlay = {}, double width_px = 800.0) {
    const double r = inst.radius;
    double lo_x = 0.0, hi_x = 0.0, lo_y = 0.0, hi_y = 0.0;
    bool first = true;
    auto grow = [&](Point p, double pad) {
        if (first) {
            lo_x = hi_x = p.x;
            lo_y = hi_y = p.y;
            first = false;
        }
        lo_x = std::min(lo_x, p.x - pad);
        hi_x = std::max(hi_x, p.x + pad);
        lo_y = std::min(lo_y, p.y - pad);
        hi_y = std::max(hi_y, p.y + pad);
    };
    for (const Point& c : inst.centers) grow(c, r);
    if (tour) {
        for (const Point& p : tour->touch_points) grow(p, 0.0);
    }
    if (overlay.rectangle) {
        for (const Point& p : overlay.rectangle->corners()) grow(p, 0.0);
    }
    if (first) grow({0.0, 0.0}, 1.0);
    const double margin = 0.05 * std::max(hi_x - lo_x, hi_y - lo_y) + 1e-9;
    detail::SvgWriter w(lo_x - margin, lo_y - margin, hi_x + margin, hi_y + margin, width_px);

    for (std::size_t i = 0; i < inst.size(); ++i) {
        w.circle(inst.centers[i], w.len(r), "fill=\"#dbe9f6\" fill-opacity=\"0.6\" stroke=\"#4a78a8\" stroke-width=\"1\"");
        w.circle(inst.centers[i], 2.0, "fill=\"#4a78a8\"");
        w.text(inst.centers[i] + Point{0.0, 0.15 * r}, std::to_string(i), "font-size=\"10\" fill=\"#4a78a8\"");
    }

    if (overlay.rectangle) {
        const auto c = overlay.rectangle->corners();
        w.polyline(c, true, "fill=\"none\" stroke=\"#7a4fa3\" stroke-width=\"1.5\" stroke-dasharray=\"6 3\"");
    }
    if (overlay.stabbing) {
        w.line(overlay.stabbing->start, overlay.stabbing->end, "stroke=\"#2e8b57\" stroke-width=\"2\"");
    }

    if (tour && tour->size() > 0) {
        const std::size_t n = tour->size();
        for (std::size_t i = 0; i < n; ++i) {
            const bool bad = i < overlay.edges.size() && overlay.edges[i].bad;
            w.line(tour->point(i), tour->point(i + 1),
                   bad ? "stroke=\"#d62728\" stroke-width=\"2\"" : "stroke=\"#333333\" stroke-width=\"1.2\"");
        }
        for (const Point& p : tour->touch_points) w.circle(p, 2.5, "fill=\"#111111\"");
    }

    for (std::size_t k = 0; k < overlay.triads.size(); ++k) {
        const BetaTriad& t = overlay.triads[k];
        if (!tour) break;
        const std::array<Point, 4> win{tour->point(t.positions[0]), t.p1, tour->point(t.positions[2]),
                                       tour->point(t.positions[3])};
        w.polyline(win, false, "fill=\"none\" stroke=\"#ff7f0e\" stroke-width=\"3\" stroke-opacity=\"0.6\"");
        w.circle(t.q1, 3.0, "fill=\"#ff7f0e\"");
        w.text(t.p1 + Point{0.0, 0.4 * r}, "triad " + std::to_string(k), "font-size=\"11\" fill=\"#ff7f0e\"");
    }
    return w.finish();
}

}  // namespace tspn
