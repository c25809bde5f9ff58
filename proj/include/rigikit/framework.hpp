#pragma once

#include <cmath>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "rigikit/cyclotomic.hpp"
#include "rigikit/graph.hpp"
#include "rigikit/ribbons.hpp"

namespace rigikit {

constexpr double kAdjacentTol = 1e-12;
constexpr double kGeometricTol = 1e-9;

// A plane realization. When exact coordinates are present they are the
// source of truth and the float placement is derived from them.
struct Framework {
    Graph graph;
    std::map<VertexId, Vec2> placement;
    std::map<VertexId, ZTuple> exact;

    bool has_exact() const { return !exact.empty(); }
};

inline Framework make_framework(Graph g, std::map<VertexId, Vec2> placement) {
    for (const VertexId& v : g.vertices())
        if (!placement.count(v)) throw DomainError("missing placement for vertex " + to_string(v));
    if (placement.size() != g.vertices().size())
        throw DomainError("placement names a vertex outside the graph");
    return Framework{std::move(g), std::move(placement), {}};
}

inline Framework make_framework(Graph g, std::map<VertexId, ZTuple> exact) {
    std::map<VertexId, Vec2> placement;
    for (const VertexId& v : g.vertices()) {
        auto it = exact.find(v);
        if (it == exact.end()) throw DomainError("missing placement for vertex " + to_string(v));
        placement[v] = it->second.to_vec2();
    }
    if (exact.size() != g.vertices().size())
        throw DomainError("placement names a vertex outside the graph");
    return Framework{std::move(g), std::move(placement), std::move(exact)};
}

inline double length(const Vec2& v) { return std::sqrt(v.x * v.x + v.y * v.y); }

inline Vec2 edge_vector(const Framework& f, const Edge& e) {
    return f.placement.at(e.b) - f.placement.at(e.a);
}

// True iff adjacent vertices land on distinct points. Non-adjacent
// coincidences are allowed here; see validate_parallelogram for injectivity.
inline bool validate_framework(const Framework& f) {
    for (const Edge& e : f.graph.edges()) {
        if (f.has_exact()) {
            if ((f.exact.at(e.a) - f.exact.at(e.b)).is_zero()) return false;
        } else if (length(edge_vector(f, e)) <= kAdjacentTol) {
            return false;
        }
    }
    return true;
}

struct ParallelogramReport {
    bool parallelograms = true;
    bool injective = true;
    std::optional<std::array<VertexId, 4>> offending;

    bool ok() const { return parallelograms && injective; }
};

// Every 4-cycle (c0,c1,c2,c3) must satisfy rho(c1)-rho(c0) = rho(c2)-rho(c3),
// and the placement must be injective overall.
inline ParallelogramReport validate_parallelogram(const Framework& f) {
    ParallelogramReport rep;
    for (const auto& cyc : four_cycles(f.graph)) {
        bool good;
        if (f.has_exact()) {
            good = (f.exact.at(cyc[1]) - f.exact.at(cyc[0])) ==
                   (f.exact.at(cyc[2]) - f.exact.at(cyc[3]));
        } else {
            Vec2 d = (f.placement.at(cyc[1]) - f.placement.at(cyc[0])) -
                     (f.placement.at(cyc[2]) - f.placement.at(cyc[3]));
            good = length(d) < kGeometricTol;
        }
        if (!good) {
            rep.parallelograms = false;
            if (!rep.offending) rep.offending = cyc;
        }
    }
    if (f.has_exact()) {
        std::set<ZTuple> seen;
        for (const auto& [v, t] : f.exact) seen.insert(t);
        rep.injective = seen.size() == f.exact.size();
    } else {
        const auto& vs = f.graph.vertices();
        for (std::size_t i = 0; i < vs.size() && rep.injective; ++i)
            for (std::size_t j = i + 1; j < vs.size(); ++j)
                if (length(f.placement.at(vs[i]) - f.placement.at(vs[j])) < kGeometricTol) {
                    rep.injective = false;
                    break;
                }
    }
    return rep;
}

inline bool parallel_directions(const Vec2& u, const Vec2& v, double tol = kGeometricTol) {
    return std::abs(std::abs(dot(u, v)) - 1.0) < tol;
}

// One unit normal per ribbon, perpendicular to all of the ribbon's edge
// vectors and sign-normalized to be lexicographically positive.
inline std::vector<Vec2> ribbon_directions(const Framework& f, const RibbonDecomposition& rd) {
    std::vector<Vec2> out;
    out.reserve(rd.ribbons.size());
    for (const auto& ribbon : rd.ribbons) {
        Vec2 first = edge_vector(f, ribbon.front());
        for (const Edge& e : ribbon) {
            bool par;
            if (f.has_exact()) {
                Cyclotomic5 a = (f.exact.at(e.b) - f.exact.at(e.a)).to_cyclotomic();
                Cyclotomic5 b = (f.exact.at(ribbon.front().b) - f.exact.at(ribbon.front().a))
                                    .to_cyclotomic();
                par = (a * b.conj()).is_real();
            } else {
                Vec2 d = edge_vector(f, e);
                par = std::abs(cross(first, d)) < kGeometricTol * length(first) * length(d);
            }
            if (!par)
                throw DomainError("ribbon contains non-parallel edges: " + to_string(e));
        }
        Vec2 normal{-first.y, first.x};
        double len = length(normal);
        if (len <= kAdjacentTol) throw DomainError("degenerate ribbon edge");
        normal = normal * (1.0 / len);
        if (normal.x < 0 || (normal.x == 0 && normal.y < 0)) normal = normal * -1.0;
        out.push_back(normal);
    }
    return out;
}

}  // namespace rigikit
