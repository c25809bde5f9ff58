#include <catch2/catch_amalgamated.hpp>

#include "fixtures.hpp"
#include "rigikit/nac.hpp"
#include "rigikit/tower.hpp"

using namespace rigikit;
using fixtures::V;

namespace {

EdgeColoring red_rest_blue(const Graph& g, const std::vector<Edge>& red) {
    std::vector<Edge> blue;
    for (const Edge& e : g.edges())
        if (std::find(red.begin(), red.end(), e) == red.end()) blue.push_back(e);
    return EdgeColoring(red, blue);
}

// Red edge set from a bitmask over the sorted edge list.
EdgeColoring mask_coloring(const Graph& g, unsigned mask) {
    std::vector<Edge> red, blue;
    for (std::size_t i = 0; i < g.edge_count(); ++i)
        ((mask >> i) & 1u ? red : blue).push_back(g.edges()[i]);
    return EdgeColoring(red, blue);
}

// Fig-style coloring of the 2x2 grid: spokes at the center vertex red, outer
// ring blue.
EdgeColoring grid_spokes_coloring(const Graph& g) {
    std::vector<Edge> red;
    for (const Edge& e : g.edges())
        if (e.touches(V(4))) red.push_back(e);
    return red_rest_blue(g, red);
}

}  // namespace

TEST_CASE("coloring validation") {
    Graph g = fixtures::cycle_graph(4);
    REQUIRE_THROWS_AS(EdgeColoring({Edge(V(0), V(1))}, {Edge(V(0), V(1))}), DomainError);
    EdgeColoring partial({Edge(V(0), V(1))}, {});
    REQUIRE_THROWS_AS(is_nac(g, partial), DomainError);
    EdgeColoring foreign({Edge(V(0), V(2))}, {g.edges()[0], g.edges()[1], g.edges()[2]});
    REQUIRE_THROWS_AS(is_nac(g, foreign), DomainError);
}

TEST_CASE("is_nac basics") {
    Graph tri = fixtures::cycle_graph(3);
    REQUIRE_FALSE(is_nac(tri, mask_coloring(tri, 0)));  // not surjective
    REQUIRE_FALSE(is_nac(tri, mask_coloring(tri, 1)));  // cycle with one red edge

    Graph c4 = fixtures::cycle_graph(4);
    REQUIRE(is_nac(c4, mask_coloring(c4, 0b0011)));
    REQUIRE(is_nac(c4, mask_coloring(c4, 0b0101)));
    REQUIRE_FALSE(is_nac(c4, mask_coloring(c4, 0b0001)));
    REQUIRE_FALSE(is_nac(c4, mask_coloring(c4, 0b1110)));

    Graph path = fixtures::path_graph(3);
    REQUIRE(is_nac(path, mask_coloring(path, 0b01)));

    Graph grid = fixtures::grid_squares(2, 2);
    REQUIRE(is_nac(grid, grid_spokes_coloring(grid)));
}

TEST_CASE("is_nac matches the cycle oracle exhaustively") {
    std::vector<Graph> graphs = {fixtures::cycle_graph(4), fixtures::cycle_graph(5),
                                 fixtures::complete_graph(4), fixtures::grid_squares(1, 2)};
    for (int t = 0; t < 6; ++t) graphs.push_back(fixtures::random_graph(6, 26000, 900 + t));
    for (const Graph& g : graphs) {
        INFO("graph with " << g.edge_count() << " edges");
        REQUIRE(g.edge_count() <= 12);
        for (unsigned mask = 0; mask < (1u << g.edge_count()); ++mask) {
            EdgeColoring c = mask_coloring(g, mask);
            if (is_nac(g, c) != is_nac_oracle(g, c)) {
                INFO("mask " << mask);
                REQUIRE(false);
            }
        }
    }
}

TEST_CASE("oracle refuses large graphs") {
    Graph g = fixtures::grid_squares(2, 4);  // 22 edges
    REQUIRE(g.edge_count() > 20);
    REQUIRE_THROWS_AS(is_nac_oracle(g, mask_coloring(g, 1)), DomainError);
}

TEST_CASE("swap closure") {
    for (int t = 0; t < 5; ++t) {
        Graph g = fixtures::random_graph(7, 25000, 40 + t);
        std::mt19937 gen(17 + t);
        for (int s = 0; s < 50; ++s) {
            EdgeColoring c = mask_coloring(g, gen() & ((1u << g.edge_count()) - 1));
            REQUIRE(is_nac(g, c) == is_nac(g, c.swapped()));
        }
    }
}

TEST_CASE("restrictions of NAC-colorings stay NAC") {
    Graph g = fixtures::grid_squares(2, 2);
    auto nacs = enumerate_nac(g);
    // Drop one corner; the rest stays connected and keeps both colors here.
    std::vector<VertexId> keep;
    for (const VertexId& v : g.vertices())
        if (v != V(0)) keep.push_back(v);
    Graph sub = induced_subgraph(g, keep);
    int surviving = 0;
    for (const EdgeColoring& c : nacs) {
        std::vector<Edge> r, b;
        for (const Edge& e : c.red)
            if (sub.has_edge(e)) r.push_back(e);
        for (const Edge& e : c.blue)
            if (sub.has_edge(e)) b.push_back(e);
        if (r.empty() || b.empty()) continue;  // restriction may lose a color
        ++surviving;
        REQUIRE(is_nac(sub, EdgeColoring(r, b)));
    }
    REQUIRE(surviving > 0);
}

TEST_CASE("monochromatic components") {
    Graph path = fixtures::path_graph(3);
    auto m = monochromatic_components(path, mask_coloring(path, 0b01));  // edge 01 red
    REQUIRE(m.red_blocks == std::vector<std::vector<VertexId>>{{V(0), V(1)}, {V(2)}});
    REQUIRE(m.blue_blocks == std::vector<std::vector<VertexId>>{{V(0)}, {V(1), V(2)}});
}

TEST_CASE("enumerate_nac on small graphs") {
    REQUIRE(enumerate_nac(fixtures::cycle_graph(3)).empty());

    auto path = enumerate_nac(fixtures::path_graph(3));
    REQUIRE(path.size() == 2);

    Graph c4 = fixtures::cycle_graph(4);
    auto nacs = enumerate_nac(c4);
    REQUIRE(nacs.size() == 6);
    std::set<EdgeColoring> unique(nacs.begin(), nacs.end());
    REQUIRE(unique.size() == 6);
    for (const auto& c : nacs) {
        REQUIRE(is_nac(c4, c));
        REQUIRE(c.red.size() == 2);  // every NAC of the 4-cycle splits 2+2
    }
    // Results arrive in swap pairs, first of each pair keeping edge 0 blue.
    for (std::size_t i = 0; i < nacs.size(); i += 2) {
        REQUIRE(nacs[i].is_blue(c4.edges()[0]));
        REQUIRE(nacs[i].swapped() == nacs[i + 1]);
    }

    auto limited = enumerate_nac(c4, 4);
    REQUIRE(limited.size() == 4);
    REQUIRE(std::equal(limited.begin(), limited.end(), nacs.begin()));

    Graph two_parts({V(0), V(1), V(2), V(3)}, {Edge(V(0), V(1)), Edge(V(2), V(3))});
    REQUIRE_THROWS_AS(enumerate_nac(two_parts), DomainError);
}

TEST_CASE("enumeration matches a brute-force census on the 2x2 grid") {
    Graph grid = fixtures::grid_squares(2, 2);
    auto nacs = enumerate_nac(grid);
    std::set<EdgeColoring> got(nacs.begin(), nacs.end());
    REQUIRE(got.size() == nacs.size());

    std::set<EdgeColoring> census;
    for (unsigned mask = 1; mask + 1 < (1u << grid.edge_count()); ++mask) {
        EdgeColoring c = mask_coloring(grid, mask);
        if (is_nac_oracle(grid, c)) census.insert(c);
    }
    REQUIRE(got == census);
    REQUIRE(nacs.size() == 254);
    REQUIRE(census.count(grid_spokes_coloring(grid)) == 1);
}

TEST_CASE("is_cartesian") {
    Graph c4 = fixtures::cycle_graph(4);
    // Opposite edges share a color: every red component meets every blue one
    // in at most one vertex.
    REQUIRE(is_cartesian(c4, mask_coloring(c4, 0b1001)));
    // Adjacent red pair: 0 and 2 are joined by a red and a blue path.
    REQUIRE_FALSE(is_cartesian(c4, mask_coloring(c4, 0b0101)));
    REQUIRE_THROWS_AS(is_cartesian(c4, mask_coloring(c4, 0b0001)), DomainError);

    Graph grid = fixtures::grid_squares(2, 2);
    REQUIRE_FALSE(is_cartesian(grid, grid_spokes_coloring(grid)));
}

TEST_CASE("is_symmetric_nac") {
    Graph c4 = fixtures::cycle_graph(4);
    SymmetryAction rot2;
    rot2.k = 2;
    for (int v = 0; v < 4; ++v) rot2.generator[V(v)] = V((v + 2) % 4);

    REQUIRE(is_symmetric_nac(c4, mask_coloring(c4, 0b1001), rot2));
    // 0b0011 colors {01,03} red, {12,23} blue; the rotation maps 01 to 23.
    REQUIRE_FALSE(is_symmetric_nac(c4, mask_coloring(c4, 0b0011), rot2));

    Graph grid = fixtures::grid_squares(2, 2);
    SymmetryAction rot4;
    rot4.k = 4;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) rot4.generator[V(i * 3 + j)] = V(j * 3 + (2 - i));
    // Invariant but with two partially invariant blue components joined by
    // red spokes.
    REQUIRE_FALSE(is_symmetric_nac(grid, grid_spokes_coloring(grid), rot4));

    SymmetryAction bad = rot4;
    bad.k = 3;
    REQUIRE_THROWS_AS(is_symmetric_nac(grid, grid_spokes_coloring(grid), bad), DomainError);
}

TEST_CASE("tower validation") {
    Graph c4 = fixtures::cycle_graph(4);
    TowerInstance t{{c4}, c4.edges()[0], c4.edges()[0]};
    REQUIRE_THROWS_AS(tower_chain(t, TowerMode::Plain), DomainError);

    TowerInstance big{{fixtures::grid_squares(2, 3)},
                      Edge(V(0), V(1)), Edge(V(1), V(2))};
    REQUIRE_THROWS_AS(tower_chain(big, TowerMode::Plain), DomainError);  // 17 edges

    Graph extended({V(0), V(1), V(2), V(3), V(9)},
                   {Edge(V(0), V(1)), Edge(V(1), V(2)), Edge(V(2), V(3)), Edge(V(0), V(3)),
                    Edge(V(0), V(2)), Edge(V(0), V(9))});
    TowerInstance not_induced{{c4, extended}, c4.edges()[0], c4.edges()[2]};
    REQUIRE_THROWS_AS(tower_chain(not_induced, TowerMode::Plain), DomainError);
}

TEST_CASE("tower with a triangle base has no chain") {
    Graph tri = fixtures::cycle_graph(3);
    TowerInstance t{{tri}, tri.edges()[0], tri.edges()[1]};
    REQUIRE_FALSE(tower_chain(t, TowerMode::Plain).has_value());
}

TEST_CASE("single-level tower returns the least admissible coloring") {
    Graph c4 = fixtures::cycle_graph(4);
    TowerInstance t{{c4}, Edge(V(0), V(1)), Edge(V(1), V(2))};
    auto chain = tower_chain(t, TowerMode::Plain);
    REQUIRE(chain.has_value());
    REQUIRE(chain->size() == 1);
    // Two colorings honor the pins; ties break on the sorted red edge list.
    EdgeColoring want({Edge(V(0), V(3)), Edge(V(1), V(2))}, {Edge(V(0), V(1)), Edge(V(2), V(3))});
    REQUIRE(chain->front() == want);
}

TEST_CASE("tower chains restrict level by level") {
    Graph c4 = fixtures::cycle_graph(4);
    Graph lvl2({V(0), V(1), V(2), V(3), V(9)},
               {Edge(V(0), V(1)), Edge(V(1), V(2)), Edge(V(2), V(3)), Edge(V(0), V(3)),
                Edge(V(0), V(9))});
    TowerInstance t{{c4, lvl2}, Edge(V(0), V(1)), Edge(V(1), V(2))};
    for (TowerMode mode : {TowerMode::Plain, TowerMode::MonochromaticRibbons}) {
        auto chain = tower_chain(t, mode);
        REQUIRE(chain.has_value());
        REQUIRE(chain->size() == 2);
        for (const Edge& e : (*chain)[0].red) REQUIRE((*chain)[1].is_red(e));
        for (const Edge& e : (*chain)[0].blue) REQUIRE((*chain)[1].is_blue(e));
        REQUIRE((*chain)[0].is_blue(Edge(V(0), V(1))));
        REQUIRE((*chain)[0].is_red(Edge(V(1), V(2))));
        REQUIRE(is_nac(c4, (*chain)[0]));
        REQUIRE(is_nac(lvl2, (*chain)[1]));
    }
}

TEST_CASE("monochromatic-ribbon towers force ribbon colors") {
    Graph c4 = fixtures::cycle_graph(4);
    TowerInstance t{{c4}, Edge(V(0), V(1)), Edge(V(1), V(2))};
    auto chain = tower_chain(t, TowerMode::MonochromaticRibbons);
    REQUIRE(chain.has_value());
    // Ribbons of the 4-cycle are the opposite pairs; pinning 01 blue and 12
    // red leaves exactly one ribbon coloring.
    EdgeColoring want({Edge(V(0), V(3)), Edge(V(1), V(2))}, {Edge(V(0), V(1)), Edge(V(2), V(3))});
    REQUIRE(chain->front() == want);
}

TEST_CASE("symmetric towers") {
    Graph c4 = fixtures::cycle_graph(4);
    Graph lvl2({V(0), V(1), V(2), V(3), V(10), V(11)},
               {Edge(V(0), V(1)), Edge(V(1), V(2)), Edge(V(2), V(3)), Edge(V(0), V(3)),
                Edge(V(0), V(10)), Edge(V(2), V(11))});
    SymmetryAction rot2;
    rot2.k = 2;
    for (int v = 0; v < 4; ++v) rot2.generator[V(v)] = V((v + 2) % 4);
    rot2.generator[V(10)] = V(11);
    rot2.generator[V(11)] = V(10);

    TowerInstance t{{c4, lvl2}, Edge(V(0), V(1)), Edge(V(1), V(2))};
    REQUIRE_THROWS_AS(tower_chain(t, TowerMode::Symmetric), DomainError);  // action missing

    auto chain = tower_chain(t, TowerMode::Symmetric, rot2);
    REQUIRE(chain.has_value());
    SymmetryAction restricted;
    restricted.k = 2;
    for (int v = 0; v < 4; ++v) restricted.generator[V(v)] = V((v + 2) % 4);
    REQUIRE(is_symmetric_nac(c4, (*chain)[0], restricted));
    REQUIRE(is_symmetric_nac(lvl2, (*chain)[1], rot2));
}
