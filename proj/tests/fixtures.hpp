#pragma once

#include <cmath>
#include <map>
#include <random>

#include "rigikit/graph.hpp"

// Shared graph builders for the test suites. Everything here is deterministic.
namespace fixtures {

using namespace rigikit;

inline VertexId V(long long n) { return VertexId(n); }
inline VertexId V(int n) { return VertexId(static_cast<long long>(n)); }
inline VertexId V(const char* s) { return VertexId(std::string(s)); }

inline Graph path_graph(int n) {
    std::vector<VertexId> vs;
    std::vector<Edge> es;
    for (int i = 0; i < n; ++i) vs.push_back(V(i));
    for (int i = 0; i + 1 < n; ++i) es.emplace_back(V(i), V(i + 1));
    return Graph(vs, es);
}

inline Graph cycle_graph(int n) {
    std::vector<VertexId> vs;
    std::vector<Edge> es;
    for (int i = 0; i < n; ++i) vs.push_back(V(i));
    for (int i = 0; i < n; ++i) es.emplace_back(V(i), V((i + 1) % n));
    return Graph(vs, es);
}

inline Graph complete_graph(int n) {
    std::vector<VertexId> vs;
    std::vector<Edge> es;
    for (int i = 0; i < n; ++i) vs.push_back(V(i));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) es.emplace_back(V(i), V(j));
    return Graph(vs, es);
}

// Vertices are 3-bit masks, edges join masks at Hamming distance 1.
inline Graph cube_graph() {
    std::vector<VertexId> vs;
    std::vector<Edge> es;
    for (int i = 0; i < 8; ++i) vs.push_back(V(i));
    for (int i = 0; i < 8; ++i)
        for (int b = 0; b < 3; ++b)
            if (!(i & (1 << b))) es.emplace_back(V(i), V(i | (1 << b)));
    return Graph(vs, es);
}

// Grid of m x n unit squares: (m+1)*(n+1) vertices, id = row*(n+1)+col.
inline VertexId grid_vertex(int n_cols_sq, int row, int col) {
    return V(static_cast<long long>(row) * (n_cols_sq + 1) + col);
}

inline Graph grid_squares(int m, int n) {
    std::vector<VertexId> vs;
    std::vector<Edge> es;
    for (int i = 0; i <= m; ++i)
        for (int j = 0; j <= n; ++j) vs.push_back(grid_vertex(n, i, j));
    for (int i = 0; i <= m; ++i)
        for (int j = 0; j < n; ++j) es.emplace_back(grid_vertex(n, i, j), grid_vertex(n, i, j + 1));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j <= n; ++j) es.emplace_back(grid_vertex(n, i, j), grid_vertex(n, i + 1, j));
    return Graph(vs, es);
}

// Square faces of grid_squares(m, n) in row-major order, as quadruples
// (top-left, top-right, bottom-right, bottom-left).
inline std::vector<std::array<VertexId, 4>> grid_square_faces(int m, int n) {
    std::vector<std::array<VertexId, 4>> out;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j)
            out.push_back({grid_vertex(n, i, j), grid_vertex(n, i, j + 1),
                           grid_vertex(n, i + 1, j + 1), grid_vertex(n, i + 1, j)});
    return out;
}

struct BracedFixture {
    Graph base;
    std::vector<Edge> braces;
};

// Ten-vertex tree of five squares whose three diagonal braces make it rigid.
inline BracedFixture rigid_squares_tree() {
    std::vector<VertexId> vs;
    for (const char* s : {"a", "b", "c", "d", "e", "f", "g", "h", "j", "k"}) vs.push_back(V(s));
    std::vector<Edge> es = {
        {V("a"), V("b")}, {V("b"), V("c")}, {V("c"), V("d")}, {V("d"), V("a")},
        {V("b"), V("e")}, {V("e"), V("f")}, {V("f"), V("c")}, {V("e"), V("g")},
        {V("g"), V("h")}, {V("h"), V("f")}, {V("g"), V("j")}, {V("b"), V("j")},
        {V("d"), V("k")}, {V("f"), V("k")}};
    std::vector<Edge> braces = {{V("a"), V("c")}, {V("b"), V("f")}, {V("e"), V("j")}};
    return {Graph(vs, es), braces};
}

// Thirteen-vertex tree of six squares; same bracing scheme but two ribbons
// stay unreached, so it flexes.
inline BracedFixture flexible_squares_tree() {
    std::vector<VertexId> vs;
    for (const char* s : {"a", "b", "c", "d", "e", "f", "g", "h", "k", "l", "m", "n", "o"})
        vs.push_back(V(s));
    std::vector<Edge> es = {
        {V("a"), V("b")}, {V("b"), V("c")}, {V("c"), V("d")}, {V("d"), V("a")},
        {V("b"), V("e")}, {V("e"), V("f")}, {V("f"), V("c")}, {V("e"), V("g")},
        {V("g"), V("h")}, {V("h"), V("f")}, {V("d"), V("k")}, {V("f"), V("k")},
        {V("k"), V("l")}, {V("l"), V("m")}, {V("m"), V("f")}, {V("m"), V("n")},
        {V("n"), V("o")}, {V("o"), V("f")}};
    std::vector<Edge> braces = {{V("a"), V("c")}, {V("e"), V("h")}, {V("f"), V("l")}};
    return {Graph(vs, es), braces};
}

// Counterclockwise rotation by degrees, the drawing convention used below.
inline Vec2 rotated_ccw_deg(const Vec2& v, double deg) {
    double t = deg * 3.14159265358979323846 / 180.0;
    double c = std::cos(t), s = std::sin(t);
    return {v.x * c - v.y * s, v.x * s + v.y * c};
}

// Axis-aligned drawing of grid_squares(m, n), rows going down.
inline std::map<VertexId, Vec2> grid_placement(int m, int n) {
    std::map<VertexId, Vec2> p;
    for (int i = 0; i <= m; ++i)
        for (int j = 0; j <= n; ++j)
            p[grid_vertex(n, i, j)] = {static_cast<double>(j), static_cast<double>(-i)};
    return p;
}

// A generic drawing of flexible_squares_tree(): each square lands on a
// parallelogram by construction, with rotated side vectors so that no two
// squares are parallel by accident.
inline std::map<VertexId, Vec2> flexible_tree_placement() {
    Vec2 a{0, 0}, b{1, 0}, c{1, 1};
    Vec2 d = a + c - b;
    Vec2 e = b + rotated_ccw_deg({0.8, 0}, 30);
    Vec2 f = e + c - b;
    Vec2 g = e + rotated_ccw_deg({1.1, 0}, -20);
    Vec2 h = g + f - e;
    Vec2 k = d + f - c;
    Vec2 l = k + rotated_ccw_deg({0.9, 0}, 105);
    Vec2 m = f + l - k;
    Vec2 n = k + rotated_ccw_deg(m + Vec2{1.3, 0} - k, 25);
    Vec2 o = f + n - m;
    return {{V("a"), a}, {V("b"), b}, {V("c"), c}, {V("d"), d}, {V("e"), e},
            {V("f"), f}, {V("g"), g}, {V("h"), h}, {V("k"), k}, {V("l"), l},
            {V("m"), m}, {V("n"), n}, {V("o"), o}};
}

// Erdos-Renyi style graph on n integer vertices; edge kept when the next
// 16-bit draw falls below p_16 (probability p_16 / 65536).
inline Graph random_graph(int n, int p_16, unsigned seed) {
    std::mt19937 gen(seed);
    std::vector<VertexId> vs;
    std::vector<Edge> es;
    for (int i = 0; i < n; ++i) vs.push_back(V(i));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (static_cast<int>(gen() & 0xFFFF) < p_16) es.emplace_back(V(i), V(j));
    return Graph(vs, es);
}

}  // namespace fixtures
