#pragma once

#include <optional>

#include "graph.hpp"

namespace rigikit {

enum class Color { Red, Blue };

inline Color opposite(Color c) { return c == Color::Red ? Color::Blue : Color::Red; }

// Red/blue edge coloring, stored as two sorted disjoint edge lists.
struct EdgeColoring {
    std::vector<Edge> red, blue;

    EdgeColoring() = default;
    EdgeColoring(std::vector<Edge> r, std::vector<Edge> b) : red(std::move(r)), blue(std::move(b)) {
        std::sort(red.begin(), red.end());
        red.erase(std::unique(red.begin(), red.end()), red.end());
        std::sort(blue.begin(), blue.end());
        blue.erase(std::unique(blue.begin(), blue.end()), blue.end());
        for (const Edge& e : red)
            if (std::binary_search(blue.begin(), blue.end(), e))
                throw DomainError("edge " + to_string(e) + " is both red and blue");
    }

    bool is_red(const Edge& e) const { return std::binary_search(red.begin(), red.end(), e); }
    bool is_blue(const Edge& e) const { return std::binary_search(blue.begin(), blue.end(), e); }

    Color color_of(const Edge& e) const {
        if (is_red(e)) return Color::Red;
        if (is_blue(e)) return Color::Blue;
        throw DomainError("edge " + to_string(e) + " is uncolored");
    }

    EdgeColoring swapped() const { return EdgeColoring(blue, red); }

    bool operator==(const EdgeColoring& o) const { return red == o.red && blue == o.blue; }
    bool operator<(const EdgeColoring& o) const {
        if (red != o.red) return red < o.red;
        return blue < o.blue;
    }
};

// Throws unless c colors exactly the edges of g.
inline void require_total_coloring(const Graph& g, const EdgeColoring& c) {
    if (c.red.size() + c.blue.size() != g.edge_count())
        throw DomainError("coloring does not cover the edge set exactly");
    for (const Edge& e : c.red)
        if (!g.has_edge(e)) throw DomainError("red edge " + to_string(e) + " not in graph");
    for (const Edge& e : c.blue)
        if (!g.has_edge(e)) throw DomainError("blue edge " + to_string(e) + " not in graph");
}

// Per-edge colors in the graph's edge order.
inline std::vector<Color> color_by_index(const Graph& g, const EdgeColoring& c) {
    std::vector<Color> out(g.edge_count(), Color::Blue);
    for (std::size_t i = 0; i < g.edge_count(); ++i) out[i] = c.color_of(g.edges()[i]);
    return out;
}

inline EdgeColoring coloring_from_index(const Graph& g, const std::vector<Color>& by_index) {
    std::vector<Edge> r, b;
    for (std::size_t i = 0; i < g.edge_count(); ++i)
        (by_index[i] == Color::Red ? r : b).push_back(g.edges()[i]);
    return EdgeColoring(std::move(r), std::move(b));
}

struct MonochromaticComponents {
    // Component id per dense vertex index, in the red-only and blue-only
    // subgraphs (isolated vertices form singleton components).
    std::vector<int> red_id, blue_id;
    int red_count = 0, blue_count = 0;
    std::vector<std::vector<VertexId>> red_blocks, blue_blocks;
};

inline MonochromaticComponents monochromatic_components(const Graph& g, const EdgeColoring& c) {
    require_total_coloring(g, c);
    auto colors = color_by_index(g, c);
    MonochromaticComponents m;
    auto red = component_ids(g, [&](int ei) { return colors[ei] == Color::Red; });
    auto blue = component_ids(g, [&](int ei) { return colors[ei] == Color::Blue; });
    m.red_id = std::move(red.first);
    m.red_count = red.second;
    m.blue_id = std::move(blue.first);
    m.blue_count = blue.second;
    m.red_blocks.resize(m.red_count);
    m.blue_blocks.resize(m.blue_count);
    for (std::size_t i = 0; i < g.vertex_count(); ++i) {
        m.red_blocks[m.red_id[i]].push_back(g.vertices()[i]);
        m.blue_blocks[m.blue_id[i]].push_back(g.vertices()[i]);
    }
    return m;
}

namespace detail {

// Violation scan used by both is_nac and the enumerator: a coloring is free of
// almost-monochromatic cycles iff no red edge has blue-connected endpoints and
// no blue edge has red-connected endpoints.
inline bool no_single_color_cycle(const Graph& g, const std::vector<Color>& colors) {
    auto red = component_ids(g, [&](int ei) { return colors[ei] == Color::Red; }).first;
    auto blue = component_ids(g, [&](int ei) { return colors[ei] == Color::Blue; }).first;
    for (std::size_t ei = 0; ei < g.edge_count(); ++ei) {
        const Edge& e = g.edges()[ei];
        int u = g.vertex_index(e.a), v = g.vertex_index(e.b);
        if (colors[ei] == Color::Red && blue[u] == blue[v]) return false;
        if (colors[ei] == Color::Blue && red[u] == red[v]) return false;
    }
    return true;
}

}  // namespace detail

// True when the coloring is surjective and every cycle is monochromatic or
// carries at least two edges of each color.
inline bool is_nac(const Graph& g, const EdgeColoring& c) {
    require_total_coloring(g, c);
    if (c.red.empty() || c.blue.empty()) return false;
    return detail::no_single_color_cycle(g, color_by_index(g, c));
}

namespace detail {

// Every simple cycle, as a list of edge indices. Cycles are rooted at their
// least vertex and walked with all intermediate vertices above the root;
// requiring the second vertex below the last kills the reversed duplicate.
inline std::vector<std::vector<int>> all_simple_cycles(const Graph& g) {
    std::vector<std::vector<int>> cycles;
    const int n = static_cast<int>(g.vertex_count());
    std::vector<int> path;
    std::vector<char> used(n, 0);
    std::vector<int> path_edges;

    std::function<void(int, int)> dfs = [&](int root, int u) {
        for (int v : g.neighbors(u)) {
            if (v == root && path.size() >= 3 && path[1] < path.back()) {
                path_edges.push_back(g.edge_index(Edge(g.vertices()[u], g.vertices()[root])));
                cycles.push_back(path_edges);
                path_edges.pop_back();
                continue;
            }
            if (v <= root || used[v]) continue;
            used[v] = 1;
            path.push_back(v);
            path_edges.push_back(g.edge_index(Edge(g.vertices()[u], g.vertices()[v])));
            dfs(root, v);
            path_edges.pop_back();
            path.pop_back();
            used[v] = 0;
        }
    };

    for (int root = 0; root < n; ++root) {
        std::fill(used.begin(), used.end(), 0);
        used[root] = 1;
        path = {root};
        dfs(root, root);
    }
    return cycles;
}

}  // namespace detail

// Definition-level check by enumerating every simple cycle. Exponential;
// refuses graphs with more than 20 edges.
inline bool is_nac_oracle(const Graph& g, const EdgeColoring& c) {
    if (g.edge_count() > 20) throw DomainError("is_nac_oracle limited to 20 edges");
    require_total_coloring(g, c);
    if (c.red.empty() || c.blue.empty()) return false;
    auto colors = color_by_index(g, c);
    for (const auto& cyc : detail::all_simple_cycles(g)) {
        int reds = 0;
        for (int ei : cyc) reds += colors[ei] == Color::Red ? 1 : 0;
        int blues = static_cast<int>(cyc.size()) - reds;
        bool mono = reds == 0 || blues == 0;
        if (!mono && (reds < 2 || blues < 2)) return false;
    }
    return true;
}

namespace detail {

// Depth-first enumeration over edge colors in sorted edge order, keeping the
// partial coloring free of almost-monochromatic cycles. The first edge stays
// blue; each completed coloring is emitted together with its color swap.
// `visit` returns false to stop early.
inline void enumerate_nac_visit(const Graph& g,
                                const std::function<bool(const std::vector<Color>&)>& visit) {
    if (!is_connected(g)) throw DomainError("enumeration requires a connected graph");
    const int m = static_cast<int>(g.edge_count());
    if (m < 2) return;

    std::vector<Color> colors(m, Color::Blue);
    bool stop = false;

    // Recomputing components per node keeps this simple; the prune keeps the
    // tree close to the number of results for cycle-rich graphs.
    auto consistent = [&](int depth) {
        auto red = component_ids(g, [&](int ei) {
                       return ei <= depth && colors[ei] == Color::Red;
                   }).first;
        auto blue = component_ids(g, [&](int ei) {
                        return ei <= depth && colors[ei] == Color::Blue;
                    }).first;
        for (int ei = 0; ei <= depth; ++ei) {
            const Edge& e = g.edges()[ei];
            int u = g.vertex_index(e.a), v = g.vertex_index(e.b);
            if (colors[ei] == Color::Red && blue[u] == blue[v]) return false;
            if (colors[ei] == Color::Blue && red[u] == red[v]) return false;
        }
        return true;
    };

    std::function<void(int)> dfs = [&](int depth) {
        if (stop) return;
        if (depth == m) {
            bool any_red = false;
            for (Color c : colors) any_red = any_red || c == Color::Red;
            if (!any_red) return;
            if (!visit(colors)) {
                stop = true;
                return;
            }
            std::vector<Color> swapped(colors.size());
            for (std::size_t i = 0; i < colors.size(); ++i) swapped[i] = opposite(colors[i]);
            if (!visit(swapped)) stop = true;
            return;
        }
        for (Color c : {Color::Blue, Color::Red}) {
            colors[depth] = c;
            if (consistent(depth)) dfs(depth + 1);
            if (stop) return;
        }
        colors[depth] = Color::Blue;
    };

    colors[0] = Color::Blue;
    if (consistent(0)) dfs(1);
}

}  // namespace detail

// All NAC-colorings of a connected graph, in a deterministic order. Results
// come in swap pairs. `limit` truncates the output when set.
inline std::vector<EdgeColoring> enumerate_nac(const Graph& g,
                                               std::optional<std::size_t> limit = {}) {
    std::vector<EdgeColoring> out;
    detail::enumerate_nac_visit(g, [&](const std::vector<Color>& colors) {
        out.push_back(coloring_from_index(g, colors));
        return !limit || out.size() < *limit;
    });
    return out;
}

// True when no red component meets a blue component in more than one vertex.
inline bool is_cartesian(const Graph& g, const EdgeColoring& c) {
    if (!is_nac(g, c)) throw DomainError("is_cartesian requires a NAC-coloring");
    auto m = monochromatic_components(g, c);
    std::set<std::pair<int, int>> seen;
    for (std::size_t i = 0; i < g.vertex_count(); ++i)
        if (!seen.insert({m.red_id[i], m.blue_id[i]}).second) return false;
    return true;
}

namespace detail {

// A vertex set is partially invariant when some nontrivial power of the
// generator maps it onto itself.
inline bool is_partially_invariant(const std::vector<VertexId>& block,
                                   const std::map<VertexId, VertexId>& gen, int k) {
    std::set<VertexId> self(block.begin(), block.end());
    std::vector<VertexId> cur(block);
    for (int j = 1; j < k; ++j) {
        for (VertexId& v : cur) {
            auto it = gen.find(v);
            if (it == gen.end()) throw DomainError("action undefined on vertex " + to_string(v));
            v = it->second;
        }
        bool same = true;
        for (const VertexId& v : cur)
            if (!self.count(v)) {
                same = false;
                break;
            }
        if (same) return true;
    }
    return false;
}

// Symmetry conditions for a coloring, with the generator given as a bare map;
// the caller owns action validation. Conditions: colors constant on edge
// orbits, and no edge joins two distinct partially invariant components of
// the same color.
inline bool symmetric_nac_conditions(const Graph& g, const EdgeColoring& c,
                                     const std::map<VertexId, VertexId>& gen, int k) {
    auto apply = [&](const VertexId& v) {
        auto it = gen.find(v);
        if (it == gen.end()) throw DomainError("action undefined on vertex " + to_string(v));
        return it->second;
    };
    for (const Edge& e : g.edges()) {
        Edge im(apply(e.a), apply(e.b));
        if (c.color_of(e) != c.color_of(im)) return false;
    }

    auto m = monochromatic_components(g, c);

    auto partially_invariant = [&](const std::vector<std::vector<VertexId>>& blocks) {
        std::vector<char> flags(blocks.size(), 0);
        for (std::size_t b = 0; b < blocks.size(); ++b)
            flags[b] = is_partially_invariant(blocks[b], gen, k) ? 1 : 0;
        return flags;
    };
    auto red_pi = partially_invariant(m.red_blocks);
    auto blue_pi = partially_invariant(m.blue_blocks);

    for (const Edge& e : g.edges()) {
        int u = g.vertex_index(e.a), v = g.vertex_index(e.b);
        if (m.red_id[u] != m.red_id[v] && red_pi[m.red_id[u]] && red_pi[m.red_id[v]]) return false;
        if (m.blue_id[u] != m.blue_id[v] && blue_pi[m.blue_id[u]] && blue_pi[m.blue_id[v]])
            return false;
    }
    return true;
}

}  // namespace detail

// NAC-coloring compatible with a cyclic symmetry: invariant under the action
// and with no edge joining two distinct partially invariant components of one
// color.
inline bool is_symmetric_nac(const Graph& g, const EdgeColoring& c, const SymmetryAction& a) {
    require_valid_action(g, a);
    if (!is_nac(g, c)) return false;
    return detail::symmetric_nac_conditions(g, c, a.generator, a.k);
}

enum class TowerMode { Plain, MonochromaticRibbons, Symmetric };

// Increasing chain of induced subgraphs with a pinned edge pair in the
// smallest level; tower_chain looks for colorings consistent along the chain.
struct TowerInstance {
    std::vector<Graph> levels;
    Edge blue_pin, red_pin;
};

}  // namespace rigikit
