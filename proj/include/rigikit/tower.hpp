#pragma once

#include "ribbons.hpp"

namespace rigikit {

// Searches for NAC-colorings of the tower levels that restrict onto each
// other, one per level, all honoring the pinned edge pair and the mode
// filter. Returns the chain from the smallest level up, or nothing.
inline std::optional<std::vector<EdgeColoring>> tower_chain(
    const TowerInstance& t, TowerMode mode, const std::optional<SymmetryAction>& action = {}) {
    if (t.levels.empty()) throw DomainError("tower has no levels");
    for (const Graph& g : t.levels) {
        if (g.edge_count() > 16) throw DomainError("tower levels are limited to 16 edges");
        if (!is_connected(g)) throw DomainError("tower levels must be connected");
    }
    for (std::size_t i = 0; i + 1 < t.levels.size(); ++i) {
        if (!is_induced_subgraph(t.levels[i], t.levels[i + 1]))
            throw DomainError("level " + std::to_string(i) + " is not induced in level " +
                              std::to_string(i + 1));
        if (t.levels[i].vertex_count() >= t.levels[i + 1].vertex_count())
            throw DomainError("tower levels must strictly grow");
    }
    if (t.blue_pin == t.red_pin) throw DomainError("pinned edges must differ");
    if (!t.levels.front().has_edge(t.blue_pin) || !t.levels.front().has_edge(t.red_pin))
        throw DomainError("pinned edges must lie in the first level");

    if (mode == TowerMode::Symmetric) {
        if (!action) throw DomainError("symmetric mode needs an action");
        require_valid_action(t.levels.back(), *action);
        for (const Graph& g : t.levels)
            for (const VertexId& v : g.vertices())
                if (!g.has_vertex(action->apply(v)))
                    throw DomainError("tower level is not closed under the action");
    }

    auto admissible = [&](const Graph& g, const EdgeColoring& c,
                          const RibbonDecomposition& ribbons) {
        if (c.color_of(t.blue_pin) != Color::Blue || c.color_of(t.red_pin) != Color::Red)
            return false;
        if (mode == TowerMode::MonochromaticRibbons) {
            for (const auto& ribbon : ribbons.ribbons) {
                Color first = c.color_of(ribbon.front());
                for (const Edge& e : ribbon)
                    if (c.color_of(e) != first) return false;
            }
        }
        if (mode == TowerMode::Symmetric)
            return detail::symmetric_nac_conditions(g, c, action->generator, action->k);
        return true;
    };

    // alive[i] = members of S_i reachable by a consistent chain from below.
    std::vector<std::set<EdgeColoring>> alive(t.levels.size());
    for (std::size_t i = 0; i < t.levels.size(); ++i) {
        const Graph& g = t.levels[i];
        RibbonDecomposition ribbons;
        if (mode == TowerMode::MonochromaticRibbons) ribbons = compute_ribbons(g);
        detail::enumerate_nac_visit(g, [&](const std::vector<Color>& colors) {
            EdgeColoring c = coloring_from_index(g, colors);
            if (admissible(g, c, ribbons)) {
                if (i == 0) {
                    alive[0].insert(std::move(c));
                } else {
                    std::vector<Edge> r, b;
                    for (const Edge& e : c.red)
                        if (t.levels[i - 1].has_edge(e)) r.push_back(e);
                    for (const Edge& e : c.blue)
                        if (t.levels[i - 1].has_edge(e)) b.push_back(e);
                    if (alive[i - 1].count(EdgeColoring(std::move(r), std::move(b))))
                        alive[i].insert(std::move(c));
                }
            }
            return true;
        });
        if (alive[i].empty()) return std::nullopt;
    }

    // Rebuild the chain downward from the first surviving top coloring.
    std::vector<EdgeColoring> chain(t.levels.size());
    chain.back() = *alive.back().begin();
    for (std::size_t i = t.levels.size() - 1; i > 0; --i) {
        std::vector<Edge> r, b;
        for (const Edge& e : chain[i].red)
            if (t.levels[i - 1].has_edge(e)) r.push_back(e);
        for (const Edge& e : chain[i].blue)
            if (t.levels[i - 1].has_edge(e)) b.push_back(e);
        chain[i - 1] = EdgeColoring(std::move(r), std::move(b));
    }
    return chain;
}

}  // namespace rigikit
