#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "core.hpp"

namespace rigikit {

// Finite simple undirected graph. Vertices and edges are kept sorted and
// unique; all algorithms below are deterministic in that order.
class Graph {
  public:
    Graph() = default;

    Graph(std::vector<VertexId> vertices, std::vector<Edge> edges) {
        std::sort(vertices.begin(), vertices.end());
        vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
        verts_ = std::move(vertices);
        for (const Edge& e : edges) {
            if (e.a == e.b) throw DomainError("loop edge at vertex " + to_string(e.a));
            if (!has_vertex(e.a) || !has_vertex(e.b))
                throw DomainError("edge " + to_string(e) + " joins absent vertices");
        }
        std::sort(edges.begin(), edges.end());
        edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
        edges_ = std::move(edges);
        build_index();
    }

    const std::vector<VertexId>& vertices() const { return verts_; }
    const std::vector<Edge>& edges() const { return edges_; }
    std::size_t vertex_count() const { return verts_.size(); }
    std::size_t edge_count() const { return edges_.size(); }

    bool has_vertex(const VertexId& v) const {
        return std::binary_search(verts_.begin(), verts_.end(), v);
    }
    bool has_edge(const Edge& e) const {
        return std::binary_search(edges_.begin(), edges_.end(), e);
    }

    // Dense index of a vertex within the sorted vertex list.
    int vertex_index(const VertexId& v) const {
        auto it = std::lower_bound(verts_.begin(), verts_.end(), v);
        if (it == verts_.end() || *it != v) throw DomainError("unknown vertex " + to_string(v));
        return static_cast<int>(it - verts_.begin());
    }
    int edge_index(const Edge& e) const {
        auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
        if (it == edges_.end() || *it != e) throw DomainError("unknown edge " + to_string(e));
        return static_cast<int>(it - edges_.begin());
    }

    // Neighbours as sorted dense indices.
    const std::vector<int>& neighbors(int vertex_idx) const { return adj_[vertex_idx]; }

    // Edges incident to a vertex, as edge indices.
    const std::vector<int>& incident_edges(int vertex_idx) const { return inc_[vertex_idx]; }

  private:
    void build_index() {
        adj_.assign(verts_.size(), {});
        inc_.assign(verts_.size(), {});
        for (std::size_t i = 0; i < edges_.size(); ++i) {
            int u = vertex_index(edges_[i].a);
            int v = vertex_index(edges_[i].b);
            adj_[u].push_back(v);
            adj_[v].push_back(u);
            inc_[u].push_back(static_cast<int>(i));
            inc_[v].push_back(static_cast<int>(i));
        }
        for (auto& n : adj_) std::sort(n.begin(), n.end());
    }

    std::vector<VertexId> verts_;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adj_;
    std::vector<std::vector<int>> inc_;
};

// Component id per vertex (dense indices), considering only edges accepted by
// `keep_edge`. Ids are assigned in increasing order of the least vertex of
// each component. Returns the ids and the component count.
inline std::pair<std::vector<int>, int> component_ids(
    const Graph& g, const std::function<bool(int)>& keep_edge = {}) {
    const auto& verts = g.vertices();
    std::vector<int> comp(verts.size(), -1);
    int next = 0;
    for (std::size_t s = 0; s < verts.size(); ++s) {
        if (comp[s] >= 0) continue;
        comp[s] = next;
        std::vector<int> stack{static_cast<int>(s)};
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int ei : g.incident_edges(u)) {
                if (keep_edge && !keep_edge(ei)) continue;
                const Edge& e = g.edges()[ei];
                int v = g.vertex_index(e.a) == u ? g.vertex_index(e.b) : g.vertex_index(e.a);
                if (comp[v] < 0) {
                    comp[v] = next;
                    stack.push_back(v);
                }
            }
        }
        ++next;
    }
    return {std::move(comp), next};
}

// Connected components as sorted vertex blocks, blocks ordered by their least
// vertex.
inline std::vector<std::vector<VertexId>> connected_components(const Graph& g) {
    auto [comp, n] = component_ids(g);
    std::vector<std::vector<VertexId>> blocks(n);
    for (std::size_t i = 0; i < g.vertices().size(); ++i)
        blocks[comp[i]].push_back(g.vertices()[i]);
    return blocks;
}

inline bool is_connected(const Graph& g) {
    return g.vertex_count() == 0 || component_ids(g).second == 1;
}

// All 4-cycles, each reported once as an ordered quadruple (v0,v1,v2,v3) with
// consecutive vertices adjacent, v0 the least vertex of the cycle and v1 the
// smaller of its two cycle neighbours.
inline std::vector<std::array<VertexId, 4>> four_cycles(const Graph& g) {
    std::vector<std::array<VertexId, 4>> out;
    const int n = static_cast<int>(g.vertex_count());
    for (int u = 0; u < n; ++u) {
        for (int w = u + 1; w < n; ++w) {
            // Common neighbours of the diagonal pair {u,w}, restricted to > u
            // so that u is the least vertex of every emitted cycle.
            std::vector<int> common;
            const auto& nu = g.neighbors(u);
            const auto& nw = g.neighbors(w);
            std::set_intersection(nu.begin(), nu.end(), nw.begin(), nw.end(),
                                  std::back_inserter(common));
            for (std::size_t i = 0; i < common.size(); ++i) {
                if (common[i] <= u) continue;
                for (std::size_t j = i + 1; j < common.size(); ++j) {
                    out.push_back({g.vertices()[u], g.vertices()[common[i]], g.vertices()[w],
                                   g.vertices()[common[j]]});
                }
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

// The two opposite-edge pairs of a 4-cycle quadruple.
inline std::array<std::array<Edge, 2>, 2> opposite_edge_pairs(const std::array<VertexId, 4>& c) {
    return {{{Edge(c[0], c[1]), Edge(c[2], c[3])}, {Edge(c[1], c[2]), Edge(c[3], c[0])}}};
}

inline std::array<Edge, 2> diagonals(const std::array<VertexId, 4>& c) {
    return {Edge(c[0], c[2]), Edge(c[1], c[3])};
}

// Cyclic symmetry of order k, described by a generator permutation of the
// vertex set.
struct SymmetryAction {
    int k = 0;
    std::map<VertexId, VertexId> generator;

    VertexId apply(const VertexId& v) const {
        auto it = generator.find(v);
        if (it == generator.end()) throw DomainError("action undefined on vertex " + to_string(v));
        return it->second;
    }
    Edge apply(const Edge& e) const { return Edge(apply(e.a), apply(e.b)); }

    VertexId apply_power(VertexId v, int j) const {
        for (int i = 0; i < j; ++i) v = apply(v);
        return v;
    }

    // Orbit of v, listed from v in generator order.
    std::vector<VertexId> orbit(const VertexId& v) const {
        std::vector<VertexId> o{v};
        for (VertexId w = apply(v); w != v; w = apply(w)) o.push_back(w);
        return o;
    }
};

struct ActionReport {
    bool is_permutation = false;    // generator bijectively maps V onto V
    bool is_automorphism = false;   // images of edges are edges
    bool order_exact = false;       // generator has order exactly k
    bool orbits_full_or_fixed = false;  // every vertex orbit has size k or 1
    bool invariant_set_independent = false;  // fixed vertices pairwise non-adjacent
    std::string detail;             // first failure, empty when valid

    bool ok() const {
        return is_permutation && is_automorphism && order_exact && orbits_full_or_fixed &&
               invariant_set_independent;
    }
};

// Checks every condition a usable cyclic action must satisfy; each failure is
// reported independently so callers can show a precise message.
inline ActionReport validate_symmetry_action(const Graph& g, const SymmetryAction& a) {
    ActionReport r;
    if (a.k < 2) {
        r.detail = "order must be at least 2";
        return r;
    }
    const auto& verts = g.vertices();
    if (a.generator.size() == verts.size()) {
        std::set<VertexId> image;
        bool ok = true;
        for (const auto& [v, w] : a.generator) {
            if (!g.has_vertex(v) || !g.has_vertex(w)) {
                ok = false;
                break;
            }
            image.insert(w);
        }
        r.is_permutation = ok && image.size() == verts.size();
    }
    if (!r.is_permutation) {
        r.detail = "generator is not a permutation of the vertex set";
        return r;
    }

    r.is_automorphism = true;
    for (const Edge& e : g.edges()) {
        if (!g.has_edge(a.apply(e))) {
            r.is_automorphism = false;
            r.detail = "image of edge " + to_string(e) + " is not an edge";
            break;
        }
    }

    // Orbit sizes give both the order check and the full-or-fixed condition:
    // the generator order is the lcm of the orbit sizes.
    long long order = 1;
    bool full_or_fixed = true;
    for (const VertexId& v : verts) {
        auto o = a.orbit(v);
        order = std::lcm(order, static_cast<long long>(o.size()));
        if (o.size() != 1 && o.size() != static_cast<std::size_t>(a.k)) full_or_fixed = false;
    }
    r.order_exact = order == a.k;
    r.orbits_full_or_fixed = full_or_fixed;
    if (!r.order_exact && r.detail.empty())
        r.detail = "generator order is " + std::to_string(order) + ", expected " +
                   std::to_string(a.k);
    if (!full_or_fixed && r.detail.empty())
        r.detail = "a vertex orbit has size other than 1 or k";

    r.invariant_set_independent = true;
    for (const Edge& e : g.edges()) {
        if (a.apply(e.a) == e.a && a.apply(e.b) == e.b) {
            r.invariant_set_independent = false;
            r.detail = "invariant vertices " + to_string(e.a) + " and " + to_string(e.b) +
                       " are adjacent";
            break;
        }
    }
    return r;
}

inline void require_valid_action(const Graph& g, const SymmetryAction& a) {
    ActionReport r = validate_symmetry_action(g, a);
    if (!r.ok()) throw DomainError("invalid symmetry action: " + r.detail);
}

// Subgraph induced on `keep`; vertices absent from g are rejected.
inline Graph induced_subgraph(const Graph& g, const std::vector<VertexId>& keep) {
    std::set<VertexId> s;
    for (const VertexId& v : keep) {
        if (!g.has_vertex(v)) throw DomainError("unknown vertex " + to_string(v));
        s.insert(v);
    }
    std::vector<Edge> edges;
    for (const Edge& e : g.edges())
        if (s.count(e.a) && s.count(e.b)) edges.push_back(e);
    return Graph(std::vector<VertexId>(s.begin(), s.end()), std::move(edges));
}

// True when `sub` is the subgraph of `g` induced on sub's vertex set.
inline bool is_induced_subgraph(const Graph& sub, const Graph& g) {
    for (const VertexId& v : sub.vertices())
        if (!g.has_vertex(v)) return false;
    std::size_t expect = 0;
    for (const Edge& e : g.edges())
        if (sub.has_vertex(e.a) && sub.has_vertex(e.b)) {
            if (!sub.has_edge(e)) return false;
            ++expect;
        }
    return expect == sub.edge_count();
}

}  // namespace rigikit
