#pragma once

#include "nac.hpp"

namespace rigikit {

// Partition of the edge set into ribbons: transitive closure of "opposite
// edges of a 4-cycle". Ribbons are ordered by their least edge.
struct RibbonDecomposition {
    std::vector<std::vector<Edge>> ribbons;
    std::vector<bool> simple;  // ribbon's own edges span no 4-cycle
    std::map<Edge, int> ribbon_of;
};

namespace detail {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int x, int y) { parent[find(x)] = find(y); }
};

}  // namespace detail

inline RibbonDecomposition compute_ribbons(const Graph& g) {
    detail::UnionFind uf(static_cast<int>(g.edge_count()));
    for (const auto& cyc : four_cycles(g))
        for (const auto& pair : opposite_edge_pairs(cyc))
            uf.unite(g.edge_index(pair[0]), g.edge_index(pair[1]));

    std::map<int, std::vector<Edge>> classes;
    for (std::size_t i = 0; i < g.edge_count(); ++i)
        classes[uf.find(static_cast<int>(i))].push_back(g.edges()[i]);

    RibbonDecomposition d;
    for (auto& [root, edges] : classes) d.ribbons.push_back(std::move(edges));
    std::sort(d.ribbons.begin(), d.ribbons.end());
    for (std::size_t r = 0; r < d.ribbons.size(); ++r) {
        for (const Edge& e : d.ribbons[r]) d.ribbon_of[e] = static_cast<int>(r);
        std::set<VertexId> vs;
        for (const Edge& e : d.ribbons[r]) {
            vs.insert(e.a);
            vs.insert(e.b);
        }
        Graph sub(std::vector<VertexId>(vs.begin(), vs.end()), d.ribbons[r]);
        d.simple.push_back(four_cycles(sub).empty());
    }
    return d;
}

struct RibbonCutReport {
    bool cutting = false;                // removal of every ribbon disconnects
    bool always_two_components = false;  // every removal leaves exactly two parts
    std::optional<int> witness;          // first ribbon whose removal keeps g connected
};

inline RibbonCutReport is_ribbon_cutting(const Graph& g) {
    if (!is_connected(g)) throw DomainError("ribbon-cutting check requires a connected graph");
    RibbonDecomposition d = compute_ribbons(g);
    RibbonCutReport rep;
    rep.cutting = true;
    rep.always_two_components = true;
    for (std::size_t r = 0; r < d.ribbons.size(); ++r) {
        int parts = component_ids(g, [&](int ei) {
                        return d.ribbon_of.at(g.edges()[ei]) != static_cast<int>(r);
                    }).second;
        if (parts == 1) {
            rep.cutting = false;
            rep.always_two_components = false;
            if (!rep.witness) rep.witness = static_cast<int>(r);
        } else if (parts != 2) {
            rep.always_two_components = false;
        }
    }
    return rep;
}

// Ribbon-cutting base plus braces, each brace a diagonal of some base 4-cycle.
struct BracedGraph {
    Graph base;
    std::vector<Edge> braces;
};

inline BracedGraph make_braced(Graph base, std::vector<Edge> braces) {
    std::sort(braces.begin(), braces.end());
    braces.erase(std::unique(braces.begin(), braces.end()), braces.end());
    std::set<Edge> diag;
    for (const auto& cyc : four_cycles(base))
        for (const Edge& d : diagonals(cyc)) diag.insert(d);
    for (const Edge& d : braces) {
        if (base.has_edge(d)) throw DomainError("brace " + to_string(d) + " is a base edge");
        if (!diag.count(d))
            throw DomainError("brace " + to_string(d) + " is not a diagonal of any 4-cycle");
    }
    return BracedGraph{std::move(base), std::move(braces)};
}

inline Graph full_graph(const BracedGraph& b) {
    std::vector<Edge> edges = b.base.edges();
    edges.insert(edges.end(), b.braces.begin(), b.braces.end());
    return Graph(b.base.vertices(), std::move(edges));
}

// Base decomposition plus, per brace, every ribbon it belongs to: a brace
// joins the ribbon of each opposite-edge pair of each 4-cycle it diagonalizes.
struct BracedRibbons {
    RibbonDecomposition base;
    std::vector<std::vector<int>> brace_homes;   // parallel to BracedGraph::braces
    std::vector<std::vector<Edge>> augmented;    // ribbon edges including braces
};

inline BracedRibbons braced_ribbons(const BracedGraph& b) {
    BracedRibbons out;
    out.base = compute_ribbons(b.base);
    out.augmented = out.base.ribbons;
    auto cycles = four_cycles(b.base);
    for (const Edge& brace : b.braces) {
        std::set<int> homes;
        for (const auto& cyc : cycles) {
            auto diag = diagonals(cyc);
            if (diag[0] != brace && diag[1] != brace) continue;
            for (const auto& pair : opposite_edge_pairs(cyc)) homes.insert(out.base.ribbon_of.at(pair[0]));
        }
        out.brace_homes.emplace_back(homes.begin(), homes.end());
        for (int r : homes) out.augmented[r].push_back(brace);
    }
    for (auto& edges : out.augmented) std::sort(edges.begin(), edges.end());
    return out;
}

// Ribbon adjacency graph. Vertices are ribbon ids (or ribbon-orbit ids for
// quotients); an edge joins two ribbons when some 4-cycle alternates between
// them, and it is braced when the two ribbons share a brace.
struct RibbonGraph {
    std::size_t vertex_count = 0;
    std::vector<std::pair<int, int>> edges;         // sorted, first < second
    std::vector<std::pair<int, int>> braced_edges;  // subset of edges
};

namespace detail {

inline std::pair<std::vector<int>, int> pair_graph_components(
    std::size_t n, const std::vector<std::pair<int, int>>& edges) {
    UnionFind uf(static_cast<int>(n));
    for (auto [x, y] : edges) uf.unite(x, y);
    std::vector<int> id(n, -1);
    int count = 0;
    for (std::size_t v = 0; v < n; ++v) {
        int root = uf.find(static_cast<int>(v));
        if (id[root] < 0) id[root] = count++;
    }
    std::vector<int> out(n);
    for (std::size_t v = 0; v < n; ++v) out[v] = id[uf.find(static_cast<int>(v))];
    return {std::move(out), count};
}

}  // namespace detail

inline RibbonGraph ribbon_graph(const BracedGraph& b) {
    BracedRibbons br = braced_ribbons(b);
    RibbonGraph rg;
    rg.vertex_count = br.base.ribbons.size();

    std::set<std::pair<int, int>> adjacent;
    for (const auto& cyc : four_cycles(b.base)) {
        auto pairs = opposite_edge_pairs(cyc);
        int r0 = br.base.ribbon_of.at(pairs[0][0]);
        int r1 = br.base.ribbon_of.at(pairs[1][0]);
        if (r0 != r1) adjacent.insert({std::min(r0, r1), std::max(r0, r1)});
    }
    rg.edges.assign(adjacent.begin(), adjacent.end());

    std::set<std::pair<int, int>> braced;
    for (const auto& homes : br.brace_homes)
        for (std::size_t i = 0; i < homes.size(); ++i)
            for (std::size_t j = i + 1; j < homes.size(); ++j)
                if (adjacent.count({homes[i], homes[j]})) braced.insert({homes[i], homes[j]});
    rg.braced_edges.assign(braced.begin(), braced.end());
    return rg;
}

// Deterministic spanning tree (BFS from vertex 0 component by component).
inline std::vector<std::pair<int, int>> spanning_tree(std::size_t n,
                                                      const std::vector<std::pair<int, int>>& edges) {
    std::vector<std::vector<int>> adj(n);
    for (auto [x, y] : edges) {
        adj[x].push_back(y);
        adj[y].push_back(x);
    }
    for (auto& a : adj) std::sort(a.begin(), a.end());
    std::vector<char> seen(n, 0);
    std::vector<std::pair<int, int>> tree;
    for (std::size_t s = 0; s < n; ++s) {
        if (seen[s]) continue;
        seen[s] = 1;
        std::vector<int> queue{static_cast<int>(s)};
        for (std::size_t q = 0; q < queue.size(); ++q)
            for (int w : adj[queue[q]])
                if (!seen[w]) {
                    seen[w] = 1;
                    tree.push_back({std::min(queue[q], w), std::max(queue[q], w)});
                    queue.push_back(w);
                }
    }
    std::sort(tree.begin(), tree.end());
    return tree;
}

// Colors every edge by its ribbon's side (side 1 = red), braces included via
// the ribbons they belong to. `component_sides` assigns a side to each
// component of the bracing subgraph; the result is checked to be a cartesian
// NAC-coloring of the full braced graph.
inline EdgeColoring cartesian_nac_from_partition(const BracedGraph& b,
                                                 const std::vector<int>& component_sides) {
    BracedRibbons br = braced_ribbons(b);
    RibbonGraph rg = ribbon_graph(b);
    auto [comp, count] = detail::pair_graph_components(rg.vertex_count, rg.braced_edges);
    if (component_sides.size() != static_cast<std::size_t>(count))
        throw DomainError("expected one side per bracing-graph component");
    bool any0 = false, any1 = false;
    for (int s : component_sides) {
        if (s != 0 && s != 1) throw DomainError("sides must be 0 or 1");
        (s ? any1 : any0) = true;
    }
    if (!any0 || !any1) throw DomainError("split must separate at least two components");

    auto ribbon_side = [&](int r) { return component_sides[comp[r]]; };
    std::vector<Edge> red, blue;
    for (std::size_t r = 0; r < br.base.ribbons.size(); ++r)
        for (const Edge& e : br.base.ribbons[r]) (ribbon_side(static_cast<int>(r)) ? red : blue).push_back(e);
    for (std::size_t i = 0; i < b.braces.size(); ++i) {
        const auto& homes = br.brace_homes[i];
        int side = ribbon_side(homes.front());
        for (int r : homes)
            if (ribbon_side(r) != side)
                throw DomainError("brace " + to_string(b.braces[i]) +
                                  " joins ribbons on both sides of the split");
        (side ? red : blue).push_back(b.braces[i]);
    }

    EdgeColoring c(std::move(red), std::move(blue));
    Graph full = full_graph(b);
    if (!is_nac(full, c) || !is_cartesian(full, c))
        throw DomainError("partition does not induce a cartesian NAC-coloring");
    return c;
}

struct RigidityResult {
    bool rigid = false;
    std::vector<std::pair<int, int>> spanning_tree;  // of the bracing subgraph, when rigid
    std::optional<EdgeColoring> certificate;         // cartesian NAC of the full graph, when flexible
};

namespace detail {

inline std::vector<int> least_component_red_split(const std::vector<int>& comp, int count) {
    // Side 1 (red) goes to the component of ribbon 0; every other component
    // is blue. Ribbon 0 holds the least edge, making the certificate
    // deterministic.
    std::vector<int> sides(count, 0);
    sides[comp[0]] = 1;
    return sides;
}

}  // namespace detail

// Rigid iff the bracing subgraph is connected. Requires a ribbon-cutting
// base; whether a parallelogram realization exists is the caller's charge.
inline RigidityResult decide_rigidity(const BracedGraph& b) {
    auto cut = is_ribbon_cutting(b.base);
    if (!cut.cutting)
        throw DomainError("base graph is not ribbon-cutting (ribbon " +
                          std::to_string(*cut.witness) + " does not separate)");
    RibbonGraph rg = ribbon_graph(b);
    auto [comp, count] = detail::pair_graph_components(rg.vertex_count, rg.braced_edges);
    RigidityResult res;
    if (count <= 1) {
        res.rigid = true;
        res.spanning_tree = spanning_tree(rg.vertex_count, rg.braced_edges);
        return res;
    }
    res.rigid = false;
    res.certificate = cartesian_nac_from_partition(b, detail::least_component_red_split(comp, count));
    return res;
}

// Quotient of the ribbon graph by the ribbon permutation the action induces.
// Vertices are ribbon orbits; loops arising from identified ribbons are
// dropped. Returns the quotient graph plus the orbit id per ribbon.
struct QuotientRibbonGraph {
    RibbonGraph graph;
    std::vector<int> orbit_of_ribbon;
};

inline QuotientRibbonGraph quotient_bracing_graph(const BracedGraph& b, const SymmetryAction& a) {
    require_valid_action(b.base, a);
    for (const Edge& e : b.base.edges())
        if (!b.base.has_edge(a.apply(e)))
            throw DomainError("action does not preserve the base edge set");
    std::set<Edge> brace_set(b.braces.begin(), b.braces.end());
    for (const Edge& d : b.braces)
        if (!brace_set.count(a.apply(d)))
            throw DomainError("action does not preserve the brace set");

    RibbonDecomposition dec = compute_ribbons(b.base);
    const int n = static_cast<int>(dec.ribbons.size());

    // The action permutes ribbons because it permutes 4-cycles.
    detail::UnionFind uf(n);
    for (int r = 0; r < n; ++r) {
        Edge image = a.apply(dec.ribbons[r].front());
        uf.unite(r, dec.ribbon_of.at(image));
    }
    std::vector<int> orbit(n, -1);
    int orbit_count = 0;
    for (int r = 0; r < n; ++r) {
        int root = uf.find(r);
        if (orbit[root] < 0) orbit[root] = orbit_count++;
    }
    QuotientRibbonGraph q;
    q.orbit_of_ribbon.resize(n);
    for (int r = 0; r < n; ++r) q.orbit_of_ribbon[r] = orbit[uf.find(r)];

    RibbonGraph rg = ribbon_graph(b);
    q.graph.vertex_count = orbit_count;
    std::set<std::pair<int, int>> qe, qb;
    for (auto [x, y] : rg.edges) {
        int ox = q.orbit_of_ribbon[x], oy = q.orbit_of_ribbon[y];
        if (ox != oy) qe.insert({std::min(ox, oy), std::max(ox, oy)});
    }
    for (auto [x, y] : rg.braced_edges) {
        int ox = q.orbit_of_ribbon[x], oy = q.orbit_of_ribbon[y];
        if (ox != oy) qb.insert({std::min(ox, oy), std::max(ox, oy)});
    }
    q.graph.edges.assign(qe.begin(), qe.end());
    q.graph.braced_edges.assign(qb.begin(), qb.end());
    return q;
}

// Symmetric analogue of decide_rigidity: rigid under the k-fold symmetry iff
// the quotient bracing graph is connected; otherwise the certificate is an
// action-invariant cartesian NAC-coloring.
inline RigidityResult decide_symmetric_rigidity(const BracedGraph& b, const SymmetryAction& a) {
    auto cut = is_ribbon_cutting(b.base);
    if (!cut.cutting)
        throw DomainError("base graph is not ribbon-cutting (ribbon " +
                          std::to_string(*cut.witness) + " does not separate)");
    QuotientRibbonGraph q = quotient_bracing_graph(b, a);
    auto [qcomp, qcount] =
        detail::pair_graph_components(q.graph.vertex_count, q.graph.braced_edges);

    RigidityResult res;
    if (qcount <= 1) {
        res.rigid = true;
        res.spanning_tree = spanning_tree(q.graph.vertex_count, q.graph.braced_edges);
        return res;
    }

    // Lift the quotient split to ribbons: orbits inherit their quotient
    // component's side, which is constant on bracing components.
    RibbonGraph rg = ribbon_graph(b);
    auto [comp, count] = detail::pair_graph_components(rg.vertex_count, rg.braced_edges);
    std::vector<int> orbit_sides(qcount, 0);
    orbit_sides[qcomp[q.orbit_of_ribbon[0]]] = 1;
    std::vector<int> sides(count, -1);
    for (std::size_t r = 0; r < rg.vertex_count; ++r) {
        int want = orbit_sides[qcomp[q.orbit_of_ribbon[r]]];
        if (sides[comp[r]] == -1) sides[comp[r]] = want;
        if (sides[comp[r]] != want)
            throw DomainError("quotient split is inconsistent on a bracing component");
    }
    EdgeColoring c = cartesian_nac_from_partition(b, sides);
    Graph full = full_graph(b);
    if (!detail::symmetric_nac_conditions(full, c, a.generator, a.k))
        throw DomainError("certificate coloring is not symmetric");
    res.rigid = false;
    res.certificate = std::move(c);
    return res;
}

}  // namespace rigikit
