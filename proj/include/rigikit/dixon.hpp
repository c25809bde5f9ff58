#pragma once

#include <rigikit/flex.hpp>
#include <rigikit/framework.hpp>

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace rigikit {

// Complete bipartite linkage with part A at (x_n, 0) and part B at (0, y_n).
// Finite lists stand in for infinite sequences: a declared tail infimum
// extends a side conceptually (0 means the tail accumulates at the origin),
// an absent one means the listed values are all there is.
struct DixonLinkage {
    std::vector<double> xs;
    std::vector<double> ys;
    std::optional<double> tail_inf_x;
    std::optional<double> tail_inf_y;
};

inline void validate_dixon(const DixonLinkage& d) {
    auto check_axis = [](const std::vector<double>& vals, const std::optional<double>& tail,
                         const char* axis) {
        if (vals.empty()) throw DomainError(std::string("no values on the ") + axis + " axis");
        std::set<double> seen;
        for (double v : vals) {
            if (!std::isfinite(v) || v <= 0)
                throw DomainError(std::string(axis) + " values must be positive");
            if (!seen.insert(v).second)
                throw DomainError(std::string("repeated ") + axis + " value");
        }
        if (tail) {
            if (!std::isfinite(*tail) || *tail < 0)
                throw DomainError(std::string(axis) + " tail infimum must be nonnegative");
            if (*tail > *seen.begin())
                throw DomainError(std::string(axis) +
                                  " tail infimum exceeds a listed value");
        }
    };
    check_axis(d.xs, d.tail_inf_x, "x");
    check_axis(d.ys, d.tail_inf_y, "y");
}

inline double effective_inf_x(const DixonLinkage& d) {
    validate_dixon(d);
    double m = *std::min_element(d.xs.begin(), d.xs.end());
    return d.tail_inf_x ? std::min(m, *d.tail_inf_x) : m;
}

inline double effective_inf_y(const DixonLinkage& d) {
    validate_dixon(d);
    double m = *std::min_element(d.ys.begin(), d.ys.end());
    return d.tail_inf_y ? std::min(m, *d.tail_inf_y) : m;
}

// Flexible exactly when both axes stay away from the origin. A zero tail
// infimum on either side rules out any motion keeping the parts on their
// axes, which is the only shape a motion of this linkage can take.
inline bool dixon_flexible(const DixonLinkage& d) {
    return effective_inf_x(d) > 0 && effective_inf_y(d) > 0;
}

namespace detail {

inline VertexId dixon_vertex(char part, std::size_t i) {
    return std::string(1, part) + std::to_string(i + 1);
}

inline Graph dixon_graph(const DixonLinkage& d) {
    std::vector<VertexId> vs;
    std::vector<Edge> es;
    for (std::size_t i = 0; i < d.xs.size(); ++i) vs.push_back(dixon_vertex('a', i));
    for (std::size_t j = 0; j < d.ys.size(); ++j) vs.push_back(dixon_vertex('b', j));
    for (std::size_t i = 0; i < d.xs.size(); ++i)
        for (std::size_t j = 0; j < d.ys.size(); ++j)
            es.push_back(Edge(dixon_vertex('a', i), dixon_vertex('b', j)));
    return Graph(std::move(vs), std::move(es));
}

}  // namespace detail

inline Framework dixon_framework(const DixonLinkage& d) {
    validate_dixon(d);
    std::map<VertexId, Vec2> placement;
    for (std::size_t i = 0; i < d.xs.size(); ++i)
        placement[detail::dixon_vertex('a', i)] = {d.xs[i], 0.0};
    for (std::size_t j = 0; j < d.ys.size(); ++j)
        placement[detail::dixon_vertex('b', j)] = {0.0, d.ys[j]};
    return make_framework(detail::dixon_graph(d), std::move(placement));
}

// Motion sliding part A toward the origin and part B away from it by the
// shared amplitude c: every cross length is constant because the transfer
// c^2(1-(1-t)^2) cancels between the two radicands. With c at most the
// x-axis infimum all radicands stay nonnegative on t in [0,1].
struct DixonFlex {
    Graph graph;
    VertexId base;
    double amplitude = 0.0;
    std::map<VertexId, double> shrink, grow;
    double domain_lo = 0.0, domain_hi = 1.0;

    Vec2 position(const VertexId& v, double t) const {
        double u = 1.0 - t;
        double transfer = amplitude * amplitude * (1.0 - u * u);
        if (auto it = shrink.find(v); it != shrink.end())
            return {std::sqrt(std::max(it->second * it->second - transfer, 0.0)), 0.0};
        return {0.0, std::sqrt(grow.at(v) * grow.at(v) + transfer)};
    }
};

inline DixonFlex dixon_flex(const DixonLinkage& d) {
    validate_dixon(d);
    double cx = effective_inf_x(d), cy = effective_inf_y(d);
    if (std::min(cx, cy) <= 0)
        throw DomainError(std::string("the ") + (cx <= cy ? "x" : "y") +
                          " axis infimum is zero, the linkage is rigid");
    DixonFlex x;
    x.graph = detail::dixon_graph(d);
    x.base = x.graph.vertices().front();
    x.amplitude = std::min(cx, cy);
    for (std::size_t i = 0; i < d.xs.size(); ++i)
        x.shrink[detail::dixon_vertex('a', i)] = d.xs[i];
    for (std::size_t j = 0; j < d.ys.size(); ++j)
        x.grow[detail::dixon_vertex('b', j)] = d.ys[j];
    return x;
}

}  // namespace rigikit
