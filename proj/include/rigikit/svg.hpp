#pragma once

#include <rigikit/framework.hpp>
#include <rigikit/nac.hpp>

#include <array>
#include <cstdio>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace rigikit {

struct RenderStyle {
    std::string red_color = "#c0392b";
    std::string blue_color = "#2471a3";
    std::string edge_color = "#2d2d2d";
    std::string brace_dash = "6 4";
    bool ribbon_overlay = false;
    std::string face_fill = "#f6d76b";
    std::string overlay_color = "#7d3c98";
    int frames = 1;
    double scale = 40.0;
};

inline void validate_render_style(const RenderStyle& s) {
    if (s.frames < 1) throw DomainError("frame count must be at least 1");
    if (!(s.scale > 0)) throw DomainError("canvas scale must be positive");
}

// Everything one picture shows: the framework, an optional coloring, braces
// drawn dashed, faces filled per style, and raw ribbon-overlay segments.
struct RenderScene {
    Framework framework;
    std::optional<EdgeColoring> coloring;
    std::vector<Edge> braces;
    std::vector<std::array<VertexId, 4>> filled;
    std::vector<std::array<Vec2, 2>> overlay;
};

struct CanvasBounds {
    double min_x = 0, min_y = 0, max_x = 0, max_y = 0;
    bool empty = true;

    void include(const Vec2& p) {
        if (empty) {
            min_x = max_x = p.x;
            min_y = max_y = p.y;
            empty = false;
            return;
        }
        min_x = std::min(min_x, p.x);
        max_x = std::max(max_x, p.x);
        min_y = std::min(min_y, p.y);
        max_y = std::max(max_y, p.y);
    }
};

inline CanvasBounds scene_bounds(const RenderScene& scene) {
    CanvasBounds b;
    for (const auto& [v, p] : scene.framework.placement) b.include(p);
    for (const auto& seg : scene.overlay) {
        b.include(seg[0]);
        b.include(seg[1]);
    }
    return b;
}

namespace detail {

inline std::string svg_num(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    std::string s(buf);
    if (s == "-0.000000") s = "0.000000";
    return s;
}

}  // namespace detail

// Deterministic single document: fixed element order (faces, edges, braces,
// overlay, vertices), six-decimal coordinates, y axis pointing up. A shared
// canvas keeps the viewport fixed across animation frames.
inline std::string render_svg(const RenderScene& scene, const RenderStyle& style,
                              std::optional<CanvasBounds> canvas = std::nullopt) {
    validate_render_style(style);
    CanvasBounds b = canvas ? *canvas : scene_bounds(scene);
    const double margin = 12.0;
    double width = (b.empty ? 0.0 : (b.max_x - b.min_x) * style.scale) + 2 * margin;
    double height = (b.empty ? 0.0 : (b.max_y - b.min_y) * style.scale) + 2 * margin;
    auto map = [&](const Vec2& p) -> Vec2 {
        return {(p.x - b.min_x) * style.scale + margin, (b.max_y - p.y) * style.scale + margin};
    };

    std::string svg;
    svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + detail::svg_num(width) +
           "\" height=\"" + detail::svg_num(height) + "\" viewBox=\"0 0 " +
           detail::svg_num(width) + " " + detail::svg_num(height) + "\">\n";

    const Framework& f = scene.framework;
    for (const auto& face : scene.filled) {
        svg += "  <polygon points=\"";
        for (int i = 0; i < 4; ++i) {
            Vec2 p = map(f.placement.at(face[i]));
            if (i) svg += " ";
            svg += detail::svg_num(p.x) + "," + detail::svg_num(p.y);
        }
        svg += "\" fill=\"" + style.face_fill + "\" stroke=\"none\"/>\n";
    }
    auto line = [&](const Vec2& from, const Vec2& to, const std::string& color,
                    const char* width_px, const std::string& extra) {
        Vec2 p = map(from), q = map(to);
        svg += "  <line x1=\"" + detail::svg_num(p.x) + "\" y1=\"" + detail::svg_num(p.y) +
               "\" x2=\"" + detail::svg_num(q.x) + "\" y2=\"" + detail::svg_num(q.y) +
               "\" stroke=\"" + color + "\" stroke-width=\"" + width_px + "\"" + extra + "/>\n";
    };
    for (const Edge& e : f.graph.edges()) {
        std::string color = style.edge_color;
        if (scene.coloring) {
            if (scene.coloring->is_red(e)) color = style.red_color;
            else if (scene.coloring->is_blue(e)) color = style.blue_color;
        }
        line(f.placement.at(e.a), f.placement.at(e.b), color, "2", "");
    }
    for (const Edge& e : scene.braces)
        line(f.placement.at(e.a), f.placement.at(e.b), style.edge_color, "1.5",
             " stroke-dasharray=\"" + style.brace_dash + "\"");
    for (const auto& seg : scene.overlay) line(seg[0], seg[1], style.overlay_color, "1", "");
    for (const VertexId& v : f.graph.vertices()) {
        Vec2 p = map(f.placement.at(v));
        svg += "  <circle cx=\"" + detail::svg_num(p.x) + "\" cy=\"" + detail::svg_num(p.y) +
               "\" r=\"3\" fill=\"#111111\"/>\n";
    }
    svg += "</svg>\n";
    return svg;
}

// A single sampled frame of any motion exposing graph and position(v, t).
template <class Motion>
Framework motion_frame(const Motion& x, double t) {
    std::map<VertexId, Vec2> placement;
    for (const VertexId& v : x.graph.vertices()) placement[v] = x.position(v, t);
    return Framework{x.graph, std::move(placement), {}};
}

// Uniform samples over the motion domain, all frames sharing one canvas.
template <class Motion>
std::vector<std::string> render_flex_frames(const Motion& x, const RenderStyle& style,
                                            const std::optional<EdgeColoring>& coloring = {}) {
    validate_render_style(style);
    std::vector<Framework> frames;
    for (int i = 0; i < style.frames; ++i) {
        double t = x.domain_lo;
        if (style.frames > 1) t += (x.domain_hi - x.domain_lo) * i / (style.frames - 1);
        frames.push_back(motion_frame(x, t));
    }
    CanvasBounds canvas;
    for (const Framework& f : frames)
        for (const auto& [v, p] : f.placement) canvas.include(p);
    std::vector<std::string> out;
    for (Framework& f : frames) {
        RenderScene scene{std::move(f), coloring, {}, {}, {}};
        out.push_back(render_svg(scene, style, canvas));
    }
    return out;
}

}  // namespace rigikit
