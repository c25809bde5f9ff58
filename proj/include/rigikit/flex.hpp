#pragma once

#include <cmath>
#include <deque>
#include <map>
#include <optional>
#include <vector>

#include "rigikit/framework.hpp"
#include "rigikit/nac.hpp"

namespace rigikit {

constexpr double kTau = 6.28318530717958647692;
// Mutual-angle variation above this flags a motion as non-trivial; it sits
// far above geometric rounding noise.
constexpr double kAngleWitnessTol = 1e-3;

// Clockwise rotation by t radians.
inline Vec2 rotate_cw(const Vec2& v, double t) {
    double c = std::cos(t), s = std::sin(t);
    return {v.x * c + v.y * s, -v.x * s + v.y * c};
}

// One-parameter motion rho_t(v) = R(t)(rot(v) + rot_center) + fix(v) +
// fix_center with R(t) the clockwise rotation. Edges keep their length
// because each edge has equal rot offsets or equal fix offsets at its ends.
struct Flex {
    Graph graph;
    VertexId base;
    std::map<VertexId, Vec2> rot_offset;
    std::map<VertexId, Vec2> fix_offset;
    Vec2 rot_center{0, 0}, fix_center{0, 0};
    double domain_lo = 0.0, domain_hi = kTau;
    // When set, the motion is expected to commute with this action via the
    // plane rotation by symmetry_angle (clockwise).
    std::optional<SymmetryAction> symmetry;
    double symmetry_angle = 0.0;

    Vec2 position(const VertexId& v, double t) const {
        return rotate_cw(rot_offset.at(v) + rot_center, t) + fix_offset.at(v) + fix_center;
    }
};

inline Framework evaluate_flex(const Flex& x, double t) {
    std::map<VertexId, Vec2> placement;
    for (const VertexId& v : x.graph.vertices()) placement[v] = x.position(v, t);
    return Framework{x.graph, std::move(placement), {}};
}

namespace detail {

enum class PointPolicy { Distinct, AdjacentDistinct };

inline Flex flex_from_points(const Graph& g, const EdgeColoring& c,
                             const std::vector<Vec2>& red_points,
                             const std::vector<Vec2>& blue_points, PointPolicy policy) {
    if (!is_nac(g, c)) throw DomainError("coloring is not a NAC-coloring");
    auto comps = monochromatic_components(g, c);
    if (red_points.size() != static_cast<std::size_t>(comps.red_count) ||
        blue_points.size() != static_cast<std::size_t>(comps.blue_count))
        throw DomainError("component point count mismatch");
    if (policy == PointPolicy::Distinct) {
        if (!(red_points[0] == Vec2{0, 0}) || !(blue_points[0] == Vec2{0, 0}))
            throw DomainError("the base components must be placed at the origin");
        for (const auto* pts : {&red_points, &blue_points})
            for (std::size_t i = 0; i < pts->size(); ++i)
                for (std::size_t j = i + 1; j < pts->size(); ++j)
                    if ((*pts)[i] == (*pts)[j])
                        throw DomainError("repeated component vectors");
    } else {
        // Only components joined by an edge of the other color must differ;
        // coincidences elsewhere are harmless.
        for (const Edge& e : g.edges()) {
            int ia = g.vertex_index(e.a), ib = g.vertex_index(e.b);
            const std::vector<Vec2>& pts = c.is_red(e) ? blue_points : red_points;
            const std::vector<int>& ids = c.is_red(e) ? comps.blue_id : comps.red_id;
            if (pts[ids[ia]] == pts[ids[ib]])
                throw DomainError("adjacent components share a vector at " + to_string(e));
        }
    }
    Flex x;
    x.graph = g;
    x.base = g.vertices().front();
    for (const VertexId& v : g.vertices()) {
        int vi = g.vertex_index(v);
        x.rot_offset[v] = blue_points[comps.blue_id[vi]];
        x.fix_offset[v] = red_points[comps.red_id[vi]];
    }
    return x;
}

}  // namespace detail

// Motion from a NAC-coloring: every vertex of blue component j moves on the
// circle R(t)*b_j translated by its red component's vector r_i. The first
// component of each color (the one holding the least vertex) must sit at the
// origin; vectors must be pairwise distinct per color.
inline Flex flex_from_nac(const Graph& g, const EdgeColoring& c,
                          const std::vector<Vec2>& red_points,
                          const std::vector<Vec2>& blue_points) {
    return detail::flex_from_points(g, c, red_points, blue_points,
                                    detail::PointPolicy::Distinct);
}

namespace detail {

struct WalkSums {
    std::map<VertexId, Vec2> rot, fix;           // float sums
    std::map<VertexId, std::pair<ZTuple, ZTuple>> exact;  // when available
};

// Splits rho(v) - rho(base) into the blue-edge and red-edge displacement
// sums of any walk. Every edge is then checked for consistency, which is
// exactly the walk-independence the construction needs.
inline WalkSums displacement_sums(const Framework& f, const EdgeColoring& c,
                                  const VertexId& base) {
    WalkSums w;
    const bool exact = f.has_exact();
    w.rot[base] = {0, 0};
    w.fix[base] = {0, 0};
    if (exact) w.exact[base] = {ZTuple{}, ZTuple{}};
    std::deque<VertexId> queue{base};
    while (!queue.empty()) {
        VertexId u = queue.front();
        queue.pop_front();
        int ui = f.graph.vertex_index(u);
        for (int ei : f.graph.incident_edges(ui)) {
            const Edge& e = f.graph.edges()[ei];
            VertexId v = e.other(u);
            if (w.rot.count(v)) continue;
            Vec2 d = f.placement.at(v) - f.placement.at(u);
            bool blue = c.is_blue(e);
            w.rot[v] = w.rot.at(u) + (blue ? d : Vec2{0, 0});
            w.fix[v] = w.fix.at(u) + (blue ? Vec2{0, 0} : d);
            if (exact) {
                ZTuple dz = f.exact.at(v) - f.exact.at(u);
                auto [a, b] = w.exact.at(u);
                w.exact[v] = blue ? std::make_pair(a + dz, b) : std::make_pair(a, b + dz);
            }
            queue.push_back(v);
        }
    }
    if (w.rot.size() != f.graph.vertices().size())
        throw DomainError("framework graph is disconnected");
    for (const Edge& e : f.graph.edges()) {
        bool ok;
        if (exact) {
            ok = c.is_red(e) ? w.exact.at(e.a).first == w.exact.at(e.b).first
                             : w.exact.at(e.a).second == w.exact.at(e.b).second;
        } else {
            Vec2 d = c.is_red(e) ? w.rot.at(e.a) - w.rot.at(e.b)
                                 : w.fix.at(e.a) - w.fix.at(e.b);
            ok = length(d) < kAdjacentTol;
        }
        if (!ok)
            throw DomainError("walk sums are inconsistent across " + to_string(e) +
                              "; not a valid parallelogram placement for this coloring");
    }
    return w;
}

}  // namespace detail

// Motion of a parallelogram placement from a cartesian coloring: blue-edge
// displacement sums (constant on red components) rotate, red-edge sums stay.
// At t = 0 the frame is the input translated by -rho(base).
inline Flex pframework_flex(const Framework& f, const EdgeColoring& c,
                            std::optional<VertexId> base_vertex = std::nullopt) {
    if (!is_cartesian(f.graph, c))
        throw DomainError("coloring is not cartesian");
    VertexId base = base_vertex.value_or(f.graph.vertices().front());
    if (!f.graph.has_vertex(base)) throw DomainError("unknown base vertex");
    auto w = detail::displacement_sums(f, c, base);
    Flex x;
    x.graph = f.graph;
    x.base = base;
    x.rot_offset = std::move(w.rot);
    x.fix_offset = std::move(w.fix);
    return x;
}

namespace detail {

// The plane rotation matching the action on this placement, snapped to a
// multiple of 2*pi/k. Requires an equivariant placement centered at the
// rotation's fixed point.
inline double symmetry_rotation_angle(const Framework& f, const SymmetryAction& a) {
    double best_r2 = -1;
    VertexId witness = f.graph.vertices().front();
    for (const VertexId& v : f.graph.vertices()) {
        Vec2 p = f.placement.at(v);
        double r2 = dot(p, p);
        if (r2 > best_r2) {
            best_r2 = r2;
            witness = v;
        }
    }
    if (best_r2 < kGeometricTol * kGeometricTol)
        throw DomainError("placement is concentrated at the origin");
    Vec2 p = f.placement.at(witness);
    Vec2 q = f.placement.at(a.generator.at(witness));
    double ang = std::atan2(p.y, p.x) - std::atan2(q.y, q.x);  // clockwise amount
    double step = kTau / a.k;
    double snapped = step * std::round(ang / step);
    double residual = 0;
    for (const VertexId& v : f.graph.vertices()) {
        Vec2 img = f.placement.at(a.generator.at(v));
        Vec2 want = rotate_cw(f.placement.at(v), snapped);
        residual = std::max(residual, length(img - want));
    }
    if (residual > kGeometricTol)
        throw DomainError("placement is not equivariant under the action");
    return snapped;
}

}  // namespace detail

// Symmetric variant: re-centers the walk-sum motion by the orbit average of
// the base vertex so that rho_t(gamma v) = R_omega rho_t(v) at every t.
inline Flex symmetric_flex(const Framework& f, const SymmetryAction& a, const EdgeColoring& c,
                           std::optional<VertexId> base_vertex = std::nullopt) {
    require_valid_action(f.graph, a);
    if (!is_symmetric_nac(f.graph, c, a))
        throw DomainError("coloring is not a symmetric NAC-coloring");
    double angle = detail::symmetry_rotation_angle(f, a);
    Flex x = pframework_flex(f, c, base_vertex);
    Vec2 rot_sum{0, 0}, fix_sum{0, 0};
    VertexId v = x.base;
    for (int i = 0; i < a.k; ++i) {
        rot_sum = rot_sum + x.rot_offset.at(v);
        fix_sum = fix_sum + x.fix_offset.at(v);
        v = a.generator.at(v);
    }
    x.rot_center = rot_sum * (-1.0 / a.k);
    x.fix_center = fix_sum * (-1.0 / a.k);
    x.symmetry = a;
    x.symmetry_angle = angle;
    return x;
}

// Equivariant component points for a symmetric NAC-coloring: partially
// invariant components sit at the origin, every other orbit gets a distinct
// radius and rotates with the action.
inline std::pair<std::vector<Vec2>, std::vector<Vec2>> equivariant_component_points(
    const Graph& g, const EdgeColoring& c, const SymmetryAction& a) {
    require_valid_action(g, a);
    if (!is_symmetric_nac(g, c, a))
        throw DomainError("coloring is not a symmetric NAC-coloring");
    auto comps = monochromatic_components(g, c);
    double radius = 1.0;
    auto assign = [&](const std::vector<int>& comp_id,
                      const std::vector<std::vector<VertexId>>& blocks) {
        std::vector<Vec2> pts(blocks.size(), Vec2{0, 0});
        std::vector<bool> done(blocks.size(), false);
        for (std::size_t i = 0; i < blocks.size(); ++i) {
            if (done[i]) continue;
            if (detail::is_partially_invariant(blocks[i], a.generator, a.k)) {
                done[i] = true;
                continue;  // pinned at the origin
            }
            Vec2 p{radius, radius / 3};
            radius += 1.0;
            int at = static_cast<int>(i);
            for (int step = 0; step < a.k && !done[at]; ++step) {
                pts[at] = p;
                done[at] = true;
                at = comp_id[g.vertex_index(a.generator.at(blocks[at].front()))];
                p = rotate_cw(p, kTau / a.k);
            }
        }
        return pts;
    };
    std::vector<Vec2> red = assign(comps.red_id, comps.red_blocks);
    std::vector<Vec2> blue = assign(comps.blue_id, comps.blue_blocks);
    return {std::move(red), std::move(blue)};
}

// Prop-style symmetric construction without a starting placement: the
// component points above fed through the relaxed distinctness policy. The
// result commutes with the action by construction.
inline Flex equivariant_flex_from_nac(const Graph& g, const EdgeColoring& c,
                                      const SymmetryAction& a) {
    auto [red, blue] = equivariant_component_points(g, c, a);
    Flex x = detail::flex_from_points(g, c, red, blue, detail::PointPolicy::AdjacentDistinct);
    x.symmetry = a;
    x.symmetry_angle = kTau / a.k;
    return x;
}

struct FlexCheckReport {
    double max_length_deviation = 0.0;
    bool lengths_ok = false;
    double max_base_deviation = 0.0;
    bool nontrivial = false;
    double max_angle_variation = 0.0;
    std::array<Edge, 2> witness{};
    std::optional<double> equivariance_residual;
};

// Samples the motion, comparing edge lengths against the reference
// placement, hunting for an edge pair whose mutual angle genuinely varies,
// and, for symmetric flexes, measuring the equivariance residual. Accepts
// any motion exposing graph, base, domain_lo/hi and position(v, t).
template <class Motion>
FlexCheckReport check_flex(const Framework& f, const Motion& x, int samples = 64,
                           double tol = kGeometricTol) {
    if (samples < 2) throw DomainError("need at least two samples");
    if (f.graph.edges() != x.graph.edges())
        throw DomainError("flex and framework disagree on the graph");
    FlexCheckReport rep;
    const auto& edges = f.graph.edges();
    std::vector<double> base_len(edges.size());
    for (std::size_t i = 0; i < edges.size(); ++i)
        base_len[i] = length(edge_vector(f, edges[i]));

    // Translation-invariant: centered constructions shift every vertex alike.
    Vec2 base_ref = f.placement.at(x.base);
    Vec2 base_pos = x.position(x.base, 0.0);
    for (const VertexId& v : f.graph.vertices()) {
        Vec2 want = f.placement.at(v) - base_ref;
        rep.max_base_deviation =
            std::max(rep.max_base_deviation, length(x.position(v, 0.0) - base_pos - want));
    }

    // Unwrapped absolute edge angles, per edge and sample.
    std::vector<std::vector<double>> delta(edges.size(), std::vector<double>(samples));
    for (int s = 0; s < samples; ++s) {
        double t = x.domain_lo + (x.domain_hi - x.domain_lo) * s / (samples - 1);
        std::map<VertexId, Vec2> pos;
        for (const VertexId& v : f.graph.vertices()) pos[v] = x.position(v, t);
        for (std::size_t i = 0; i < edges.size(); ++i) {
            Vec2 d = pos.at(edges[i].b) - pos.at(edges[i].a);
            rep.max_length_deviation =
                std::max(rep.max_length_deviation, std::abs(length(d) - base_len[i]));
            double ang = std::atan2(d.y, d.x);
            if (s > 0) {
                double prev = delta[i][s - 1];
                while (ang - prev > kTau / 2) ang -= kTau;
                while (prev - ang > kTau / 2) ang += kTau;
            }
            delta[i][s] = ang;
        }
        if constexpr (requires { x.symmetry; x.symmetry_angle; }) {
            if (x.symmetry) {
                double worst = rep.equivariance_residual.value_or(0.0);
                for (const VertexId& v : f.graph.vertices()) {
                    Vec2 img = pos.at(x.symmetry->generator.at(v));
                    worst = std::max(worst, length(img - rotate_cw(pos.at(v), x.symmetry_angle)));
                }
                rep.equivariance_residual = worst;
            }
        }
    }
    rep.lengths_ok = rep.max_length_deviation <= tol;

    for (auto& d : delta) {
        double d0 = d[0];
        for (double& v : d) v -= d0;
    }
    std::size_t hi_edge = 0, lo_edge = 0;
    double best_spread = 0;
    for (int s = 0; s < samples; ++s) {
        std::size_t hi = 0, lo = 0;
        for (std::size_t i = 1; i < edges.size(); ++i) {
            if (delta[i][s] > delta[hi][s]) hi = i;
            if (delta[i][s] < delta[lo][s]) lo = i;
        }
        double spread = delta[hi][s] - delta[lo][s];
        if (spread > best_spread) {
            best_spread = spread;
            hi_edge = hi;
            lo_edge = lo;
        }
    }
    if (!edges.empty()) {
        double mn = 0, mx = 0;
        for (int s = 0; s < samples; ++s) {
            double v = delta[hi_edge][s] - delta[lo_edge][s];
            mn = std::min(mn, v);
            mx = std::max(mx, v);
        }
        rep.max_angle_variation = mx - mn;
        rep.witness = {edges[hi_edge], edges[lo_edge]};
        rep.nontrivial = rep.max_angle_variation > kAngleWitnessTol;
    }
    return rep;
}

}  // namespace rigikit
