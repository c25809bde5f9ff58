#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "core.hpp"
#include "cyclotomic.hpp"
#include "framework.hpp"
#include "graph.hpp"
#include "ribbons.hpp"

namespace rigikit {

// A pentagrid consists of five line families: family m holds the lines
// { x : <x, e_m> = k - offset_m } for integer k, where e_m is the m-th fifth
// root of unity. Dualizing the grid produces a rhombic tiling patch.
struct PentagridParams {
    std::array<Rational, 5> offsets{};
    // Exactly one window must be set. An index window keeps the lines with
    // k_min <= k <= k_max in every family and all of their intersections; a
    // radius window keeps the faces whose defining intersection point lies
    // in the closed disk of that radius around the origin.
    std::optional<std::pair<long long, long long>> index_window;
    std::optional<Rational> radius;
};

inline void validate_pentagrid_params(const PentagridParams& p) {
    Rational sum = 0;
    for (const Rational& g : p.offsets) sum += g;
    if (denominator(sum) != 1)
        throw DomainError("pentagrid offsets must sum to an integer");
    if (p.index_window.has_value() == p.radius.has_value())
        throw DomainError("exactly one of index window and radius must be set");
    if (p.index_window && p.index_window->first > p.index_window->second)
        throw DomainError("empty pentagrid index window");
    if (p.radius && !(*p.radius > 0)) throw DomainError("pentagrid radius must be positive");
}

// Identifies one grid line: (family, line index k).
using RibbonLabel = std::pair<int, long long>;

// The two rhombus shapes of the tiling: Fat has interior angles 72/108
// degrees (adjacent grid families), Thin has 36/144 (families two apart).
enum class TileType { Fat, Thin };

inline TileType tile_type_of(int family_a, int family_b) {
    int d = (((family_b - family_a) % 5) + 5) % 5;
    if (d == 0) throw DomainError("parallel grid families do not bound a tile");
    return (d == 1 || d == 4) ? TileType::Fat : TileType::Thin;
}

struct PenroseFace {
    // Corners in cyclic order; cycle[0] -> cycle[1] runs along direction
    // e_{line_a.first}, cycle[0] -> cycle[3] along e_{line_b.first}.
    std::array<VertexId, 4> cycle;
    RibbonLabel line_a, line_b;  // the two grid lines crossing inside, line_a < line_b
};

inline TileType tile_type(const PenroseFace& f) {
    return tile_type_of(f.line_a.first, f.line_b.first);
}

struct PenrosePatch {
    Framework framework;  // carries exact lattice coordinates
    std::vector<PenroseFace> faces;
    // Each edge of the patch crosses exactly one grid line; its ribbon is
    // the set of edges crossing that line.
    std::map<Edge, RibbonLabel> ribbon_labels;
    std::vector<RibbonLabel> lines;  // grid lines bounding at least one face, sorted
};

namespace detail {

// Ceiling of value + eps * slope for an infinitesimal eps > 0. A zero slope
// at an integer value means the tie is genuine for every eps.
inline long long perturbed_ceil(const Real5& value, const Real5& slope, const std::string& where) {
    if (!value.is_integer()) return value.ceil();
    int s = slope.sign();
    if (s > 0) return value.ceil() + 1;
    if (s < 0) return value.ceil();
    throw DomainError("degenerate pentagrid: three lines meet at " + where);
}

inline std::string approx_point(const Cyclotomic5& z) {
    Vec2 v = z.to_vec2();
    return "(" + std::to_string(v.x) + ", " + std::to_string(v.y) + ")";
}

// splitmix64-style scramble; uniform() yields a double in [0, 1).
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t n) {
    std::uint64_t x = seed + (n + 1) * 0x9E3779B97F4A7C15ULL;
    x ^= x >> 30;
    x *= 0xBF58476D1CE4E5B9ULL;
    x ^= x >> 27;
    x *= 0x94D049BB133111EBULL;
    x ^= x >> 31;
    return x;
}

inline double face_uniform(std::uint64_t seed, std::uint64_t index) {
    return static_cast<double>(mix_seed(seed, index) >> 11) * 0x1.0p-53;
}

inline long long rational_floor(const Rational& q) {
    using boost::multiprecision::cpp_int;
    cpp_int n = numerator(q), d = denominator(q);
    cpp_int f = n / d;
    if (n % d != 0 && n < 0) --f;
    return f.convert_to<long long>();
}

inline long long rational_ceil(const Rational& q) { return -rational_floor(-q); }

// Shared pentagrid dualization. When perturbed is set, every offset carries
// an implicit +eps for an infinitesimal eps > 0, which resolves ties in the
// ceiling indices by slope instead of failing.
inline PenrosePatch build_patch(const std::array<Rational, 5>& offsets, bool perturbed,
                                const std::vector<std::vector<long long>>& line_indices,
                                const std::optional<Rational>& radius) {
    PenrosePatch patch;
    std::map<ZTuple, std::array<long long, 5>> raw_of;  // canonical point -> grid tuple
    std::set<Edge> edge_set;
    std::set<RibbonLabel> line_set;

    const Real5 radius_sq = radius ? Real5(*radius * *radius, 0) : Real5();

    auto corner_id = [&](const std::array<long long, 5>& raw) -> VertexId {
        ZTuple t(raw);
        auto [it, inserted] = raw_of.emplace(t, raw);
        if (!inserted && it->second != raw)
            throw DomainError("pentagrid corner " + to_string(t) + " has ambiguous grid tuple");
        return to_string(t);
    };

    for (int fa = 0; fa < 5; ++fa) {
        for (int fb = fa + 1; fb < 5; ++fb) {
            // Intersection of <x, e_fa> = a and <x, e_fb> = b, written with
            // x and its conjugate: x*conj(e) + conj(x)*e = 2 Re(x conj(e)).
            Cyclotomic5 za = Cyclotomic5::zeta_pow(fa), zb = Cyclotomic5::zeta_pow(fb);
            Cyclotomic5 det = Cyclotomic5::zeta_pow(fb - fa) - Cyclotomic5::zeta_pow(fa - fb);
            Cyclotomic5 slope_pt;  // d(intersection)/d(eps)
            if (perturbed) slope_pt = (za * Cyclotomic5(2) - zb * Cyclotomic5(2)) / det;
            for (long long ka : line_indices[fa]) {
                for (long long kb : line_indices[fb]) {
                    Rational a = Rational(ka) - offsets[fa], b = Rational(kb) - offsets[fb];
                    Cyclotomic5 point =
                        (zb * Cyclotomic5(a * 2) - za * Cyclotomic5(b * 2)) / det;
                    if (radius && !(norm_squared(point) <= radius_sq)) continue;

                    std::array<long long, 5> base{};
                    bool degenerate_local = false;
                    for (int m = 0; m < 5 && !degenerate_local; ++m) {
                        if (m == fa) {
                            base[m] = ka;
                            continue;
                        }
                        if (m == fb) {
                            base[m] = kb;
                            continue;
                        }
                        Real5 value = (point * Cyclotomic5::zeta_pow(-m)).real_part();
                        value.a += offsets[m];
                        Real5 slope;
                        if (perturbed) {
                            slope = (slope_pt * Cyclotomic5::zeta_pow(-m)).real_part();
                            slope.a += 1;
                        }
                        base[m] = perturbed_ceil(value, slope, approx_point(point));
                    }

                    std::array<long long, 5> ca = base, cab = base, cb = base;
                    ca[fa] += 1;
                    cab[fa] += 1;
                    cab[fb] += 1;
                    cb[fb] += 1;
                    PenroseFace face;
                    face.cycle = {corner_id(base), corner_id(ca), corner_id(cab), corner_id(cb)};
                    face.line_a = {fa, ka};
                    face.line_b = {fb, kb};

                    auto label_edge = [&](const VertexId& u, const VertexId& v,
                                          const RibbonLabel& lbl) {
                        Edge e(u, v);
                        auto [it, inserted] = patch.ribbon_labels.emplace(e, lbl);
                        if (!inserted && it->second != lbl)
                            throw DomainError("pentagrid edge " + to_string(e) +
                                              " crosses two grid lines");
                        edge_set.insert(e);
                    };
                    label_edge(face.cycle[0], face.cycle[1], face.line_a);
                    label_edge(face.cycle[3], face.cycle[2], face.line_a);
                    label_edge(face.cycle[0], face.cycle[3], face.line_b);
                    label_edge(face.cycle[1], face.cycle[2], face.line_b);
                    line_set.insert(face.line_a);
                    line_set.insert(face.line_b);
                    patch.faces.push_back(std::move(face));
                }
            }
        }
    }

    if (patch.faces.empty()) throw DomainError("pentagrid window retains no faces");

    std::map<VertexId, ZTuple> exact;
    std::vector<VertexId> vertices;
    for (const auto& [tuple, raw] : raw_of) {
        VertexId id = to_string(tuple);
        exact.emplace(id, tuple);
        vertices.push_back(id);
    }
    Graph g(std::move(vertices), std::vector<Edge>(edge_set.begin(), edge_set.end()));
    patch.framework = make_framework(std::move(g), std::move(exact));
    patch.lines.assign(line_set.begin(), line_set.end());
    return patch;
}

}  // namespace detail

inline PenrosePatch generate_patch(const PentagridParams& params) {
    validate_pentagrid_params(params);
    std::vector<std::vector<long long>> line_indices(5);
    for (int m = 0; m < 5; ++m) {
        if (params.index_window) {
            for (long long k = params.index_window->first; k <= params.index_window->second; ++k)
                line_indices[m].push_back(k);
        } else {
            // A face inside the disk lies on both of its lines, so only
            // lines within distance radius of the origin can contribute.
            long long lo = detail::rational_ceil(params.offsets[m] - *params.radius);
            long long hi = detail::rational_floor(params.offsets[m] + *params.radius);
            for (long long k = lo; k <= hi; ++k) line_indices[m].push_back(k);
        }
    }
    return detail::build_patch(params.offsets, false, line_indices, params.radius);
}

// ---- bracing strategies ----

struct TwoRibbonBrace {
    RibbonLabel first, second;
};
struct TileClassBrace {
    TileType type;
};
// Braces every tile of the class except the orientation with the given
// unordered family pair.
struct OrientationExemptBrace {
    TileType type;
    std::pair<int, int> exempt;
};
struct RandomBrace {
    TileType type;
    double probability;
    std::uint64_t seed;
};
struct ExplicitBrace {
    std::vector<int> faces;
};
using BraceStrategy =
    std::variant<TwoRibbonBrace, TileClassBrace, OrientationExemptBrace, RandomBrace, ExplicitBrace>;

namespace detail {

inline std::pair<int, int> normalized_family_pair(std::pair<int, int> p) {
    if (p.first > p.second) std::swap(p.first, p.second);
    if (p.first < 0 || p.second > 4 || p.first == p.second)
        throw DomainError("orientation must name two distinct grid families");
    return p;
}

}  // namespace detail

inline std::vector<int> select_braced_faces(const PenrosePatch& patch,
                                            const BraceStrategy& strategy) {
    std::vector<int> selected;
    if (const auto* two = std::get_if<TwoRibbonBrace>(&strategy)) {
        for (const RibbonLabel& r : {two->first, two->second})
            if (!std::binary_search(patch.lines.begin(), patch.lines.end(), r))
                throw DomainError("unknown ribbon (" + std::to_string(r.first) + "," +
                                  std::to_string(r.second) + ")");
        if (two->first == two->second) throw DomainError("two distinct ribbons required");
        for (int i = 0; i < static_cast<int>(patch.faces.size()); ++i) {
            const PenroseFace& f = patch.faces[i];
            if (f.line_a == two->first || f.line_a == two->second || f.line_b == two->first ||
                f.line_b == two->second)
                selected.push_back(i);
        }
    } else if (const auto* cls = std::get_if<TileClassBrace>(&strategy)) {
        for (int i = 0; i < static_cast<int>(patch.faces.size()); ++i)
            if (tile_type(patch.faces[i]) == cls->type) selected.push_back(i);
    } else if (const auto* exempt = std::get_if<OrientationExemptBrace>(&strategy)) {
        std::pair<int, int> skip = detail::normalized_family_pair(exempt->exempt);
        if (tile_type_of(skip.first, skip.second) != exempt->type)
            throw DomainError("orientation does not match the tile class");
        for (int i = 0; i < static_cast<int>(patch.faces.size()); ++i) {
            const PenroseFace& f = patch.faces[i];
            if (tile_type(f) != exempt->type) continue;
            if (std::pair<int, int>{f.line_a.first, f.line_b.first} == skip) continue;
            selected.push_back(i);
        }
    } else if (const auto* rnd = std::get_if<RandomBrace>(&strategy)) {
        if (!(rnd->probability >= 0.0 && rnd->probability <= 1.0))
            throw DomainError("brace probability must lie in [0, 1]");
        for (int i = 0; i < static_cast<int>(patch.faces.size()); ++i) {
            if (tile_type(patch.faces[i]) != rnd->type) continue;
            if (detail::face_uniform(rnd->seed, static_cast<std::uint64_t>(i)) < rnd->probability)
                selected.push_back(i);
        }
    } else {
        const auto& expl = std::get<ExplicitBrace>(strategy);
        for (int i : expl.faces) {
            if (i < 0 || i >= static_cast<int>(patch.faces.size()))
                throw DomainError("face index " + std::to_string(i) + " out of range");
            selected.push_back(i);
        }
        std::sort(selected.begin(), selected.end());
        selected.erase(std::unique(selected.begin(), selected.end()), selected.end());
    }
    return selected;
}

// The brace joins cycle[1] and cycle[3]: the corners where the two edge
// directions meet at the acute angle of a thin tile and at the obtuse angle
// of a fat tile.
inline Edge brace_diagonal(const PenroseFace& f) { return Edge(f.cycle[1], f.cycle[3]); }

inline BracedGraph brace(const PenrosePatch& patch, const BraceStrategy& strategy) {
    std::vector<Edge> braces;
    for (int i : select_braced_faces(patch, strategy))
        braces.push_back(brace_diagonal(patch.faces[i]));
    return make_braced(patch.framework.graph, std::move(braces));
}

// ---- patch-level ribbon analysis ----

// A ribbon fully crosses the window when its intersection with every
// non-parallel participating line is a retained face. Verdicts at patch
// scale only consider these ribbons; boundary stubs are excluded.
inline std::vector<RibbonLabel> fully_crossing_ribbons(const PenrosePatch& patch) {
    std::set<std::pair<RibbonLabel, RibbonLabel>> met;
    for (const PenroseFace& f : patch.faces) met.insert({f.line_a, f.line_b});
    std::vector<RibbonLabel> out;
    for (const RibbonLabel& r : patch.lines) {
        bool full = true;
        for (const RibbonLabel& s : patch.lines) {
            if (s.first == r.first) continue;
            auto key = r < s ? std::pair{r, s} : std::pair{s, r};
            if (!met.count(key)) {
                full = false;
                break;
            }
        }
        if (full) out.push_back(r);
    }
    return out;
}

// Patch-level rigidity: the bracing graph restricted to fully crossing
// ribbons (one vertex per such ribbon, one edge per braced face whose two
// lines both fully cross) is connected.
inline bool patch_level_rigid(const PenrosePatch& patch, const std::vector<int>& braced_faces) {
    std::vector<RibbonLabel> full = fully_crossing_ribbons(patch);
    if (full.size() <= 1) return true;
    std::map<RibbonLabel, int> index;
    for (int i = 0; i < static_cast<int>(full.size()); ++i) index.emplace(full[i], i);

    std::vector<int> parent(full.size());
    for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
    std::function<int(int)> find = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    for (int fi : braced_faces) {
        if (fi < 0 || fi >= static_cast<int>(patch.faces.size()))
            throw DomainError("face index " + std::to_string(fi) + " out of range");
        auto a = index.find(patch.faces[fi].line_a), b = index.find(patch.faces[fi].line_b);
        if (a == index.end() || b == index.end()) continue;
        parent[find(a->second)] = find(b->second);
    }
    int root = find(0);
    for (std::size_t i = 1; i < parent.size(); ++i)
        if (find(static_cast<int>(i)) != root) return false;
    return true;
}

inline bool patch_level_rigid(const PenrosePatch& patch, const BraceStrategy& strategy) {
    return patch_level_rigid(patch, select_braced_faces(patch, strategy));
}

// Fraction of random bracings of the given tile class that are rigid at
// patch level. Trials share the face-indexed uniforms, so the outcome is
// monotone in the probability for a fixed seed.
inline double monte_carlo_rigidity(const PenrosePatch& patch, TileType type, double probability,
                                   int trials, std::uint64_t seed) {
    if (!(probability > 0.0 && probability <= 1.0))
        throw DomainError("brace probability must lie in (0, 1]");
    if (trials < 1) throw DomainError("trial count must be positive");
    int hits = 0;
    for (int t = 0; t < trials; ++t) {
        RandomBrace rb{type, probability, detail::mix_seed(seed, static_cast<std::uint64_t>(t))};
        if (patch_level_rigid(patch, select_braced_faces(patch, rb))) ++hits;
    }
    return static_cast<double>(hits) / trials;
}

// ---- structural verification ----

struct RibbonPropertyReport {
    // Among fully crossing ribbons: pairs share a face iff non-parallel.
    bool adjacency_matches_crossings = false;
    // Every labeled ribbon runs along one of the five unit directions, which
    // are pairwise separated by multiples of 72 degrees.
    bool five_direction_classes = false;
    // The 4-cycles of the patch graph alternate between two ribbon labels,
    // and each label pair spans exactly one 4-cycle per retained crossing.
    bool unique_crossing_face = false;
    // Each face's tile class agrees with the angle between its directions.
    bool crossing_types_match = false;
    // Ribbons recovered from connectivity alone refine the grid-line classes.
    bool combinatorial_refinement = false;
    // Statements about the infinite tiling that a finite patch cannot test.
    std::string not_checkable;

    bool ok() const {
        return adjacency_matches_crossings && five_direction_classes && unique_crossing_face &&
               crossing_types_match && combinatorial_refinement;
    }
};

inline RibbonPropertyReport verify_ribbon_properties(const PenrosePatch& patch) {
    if (!patch.framework.has_exact())
        throw DomainError("ribbon verification needs exact coordinates");
    RibbonPropertyReport report;
    report.not_checkable =
        "ribbon infinitude and tiling-wide crossing counts are not checkable at patch scale";
    const Graph& g = patch.framework.graph;

    report.five_direction_classes = true;
    for (const auto& [edge, label] : patch.ribbon_labels) {
        ZTuple d = patch.framework.exact.at(edge.a) - patch.framework.exact.at(edge.b);
        ZTuple u = ZTuple::unit(label.first);
        if (!(d == u || d == ZTuple() - u)) report.five_direction_classes = false;
    }
    const Real5 cos72(Rational(-1, 4), Rational(1, 4));
    const Real5 cos144(Rational(-1, 4), Rational(-1, 4));
    for (int m = 0; m < 5; ++m) {
        Cyclotomic5 em = ZTuple::unit(m).to_cyclotomic();
        Cyclotomic5 en = ZTuple::unit((m + 1) % 5).to_cyclotomic();
        if (!(norm_squared(em) == Real5(1)) || !(dot(em, en) == cos72))
            report.five_direction_classes = false;
    }

    std::map<std::pair<RibbonLabel, RibbonLabel>, int> crossings;
    for (const PenroseFace& f : patch.faces) ++crossings[{f.line_a, f.line_b}];

    // Every 4-cycle of the graph must alternate between two grid lines, and
    // the alternating-cycle count of a line pair must match its retained
    // crossings: exactly one shared face per crossing, none otherwise.
    report.unique_crossing_face = true;
    std::map<std::pair<RibbonLabel, RibbonLabel>, int> spanned;
    for (const std::array<VertexId, 4>& cyc : four_cycles(g)) {
        std::array<RibbonLabel, 4> lbl;
        for (int i = 0; i < 4; ++i) lbl[i] = patch.ribbon_labels.at(Edge(cyc[i], cyc[(i + 1) % 4]));
        if (lbl[0] != lbl[2] || lbl[1] != lbl[3] || lbl[0].first == lbl[1].first) {
            report.unique_crossing_face = false;
            continue;
        }
        ++spanned[lbl[0] < lbl[1] ? std::pair{lbl[0], lbl[1]} : std::pair{lbl[1], lbl[0]}];
    }
    if (spanned != crossings) report.unique_crossing_face = false;
    for (const auto& [pair, count] : crossings)
        if (count != 1) report.unique_crossing_face = false;

    report.crossing_types_match = true;
    for (const PenroseFace& f : patch.faces) {
        Real5 c = dot(ZTuple::unit(f.line_a.first).to_cyclotomic(),
                      ZTuple::unit(f.line_b.first).to_cyclotomic());
        if (!(c == cos72) && !(c == cos144))
            throw DomainError("unexpected angle between ribbon directions");
        TileType geometric = c == cos72 ? TileType::Fat : TileType::Thin;
        if (geometric != tile_type(f)) report.crossing_types_match = false;
    }

    // Fully crossing ribbons meet every non-parallel fully crossing ribbon
    // inside the window and never meet parallel ones.
    report.adjacency_matches_crossings = true;
    std::vector<RibbonLabel> full = fully_crossing_ribbons(patch);
    for (std::size_t i = 0; i < full.size(); ++i) {
        for (std::size_t j = i + 1; j < full.size(); ++j) {
            auto key = full[i] < full[j] ? std::pair{full[i], full[j]} : std::pair{full[j], full[i]};
            bool meet = crossings.count(key) > 0;
            if (meet != (full[i].first != full[j].first))
                report.adjacency_matches_crossings = false;
        }
    }

    report.combinatorial_refinement = true;
    RibbonDecomposition dec = compute_ribbons(g);
    for (const std::vector<Edge>& ribbon : dec.ribbons) {
        const RibbonLabel& first = patch.ribbon_labels.at(ribbon.front());
        for (const Edge& e : ribbon)
            if (patch.ribbon_labels.at(e) != first) report.combinatorial_refinement = false;
    }
    return report;
}

// ---- abstract direction-class bracing graphs ----

// Bracing every tile of one class joins ribbon direction classes whose
// angular separation matches that class: adjacent families for fat tiles,
// families two apart for thin ones. Vertices are the classes 0..4.
inline std::vector<std::pair<int, int>> direction_class_edges(TileType type) {
    int step = type == TileType::Fat ? 1 : 2;
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 5; ++i) {
        int j = (i + step) % 5;
        edges.push_back({std::min(i, j), std::max(i, j)});
    }
    std::sort(edges.begin(), edges.end());
    return edges;
}

inline std::vector<std::pair<int, int>> direction_class_edges_exempt(TileType type,
                                                                     std::pair<int, int> exempt) {
    exempt = detail::normalized_family_pair(exempt);
    if (tile_type_of(exempt.first, exempt.second) != type)
        throw DomainError("orientation does not match the tile class");
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : direction_class_edges(type))
        if (e != exempt) edges.push_back(e);
    return edges;
}

inline bool direction_classes_connected(const std::vector<std::pair<int, int>>& edges) {
    std::array<int, 5> parent{0, 1, 2, 3, 4};
    auto find = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    for (const auto& [a, b] : edges) parent[find(a)] = find(b);
    for (int v = 1; v < 5; ++v)
        if (find(v) != find(0)) return false;
    return true;
}

// ---- five-fold symmetric patches ----

enum class PatchVariant { Sun, Star };

struct SymmetricPatch {
    PenrosePatch patch;
    SymmetryAction action;  // order-5 rotation about the origin
};

inline SymmetricPatch symmetric_patch(const Rational& radius, PatchVariant variant) {
    if (!(radius > 0)) throw DomainError("pentagrid radius must be positive");
    // Equal offsets c with 5c a positive integer give the two rotationally
    // symmetric tilings; every intersection ceiling ties, so the grid is
    // evaluated under an infinitesimal positive shift of all offsets.
    Rational c(variant == PatchVariant::Sun ? 1 : 2, 5);
    std::array<Rational, 5> offsets{c, c, c, c, c};
    std::vector<std::vector<long long>> line_indices(5);
    long long lo = detail::rational_ceil(c - radius) - 1;
    long long hi = detail::rational_floor(c + radius) + 1;
    for (int m = 0; m < 5; ++m)
        for (long long k = lo; k <= hi; ++k) line_indices[m].push_back(k);

    SymmetricPatch out{detail::build_patch(offsets, true, line_indices, radius), {}};

    // Rotation by 72 degrees permutes equal-offset grid lines, so it maps
    // the patch to itself; on grid tuples it is a cyclic coordinate shift.
    out.action.k = 5;
    for (const auto& [id, tuple] : out.patch.framework.exact) {
        VertexId image = to_string(tuple.rotated_ccw());
        if (!out.patch.framework.graph.has_vertex(image))
            throw DomainError("symmetric patch construction failed at vertex " + to_string(id));
        out.action.generator[id] = image;
    }
    require_valid_action(out.patch.framework.graph, out.action);
    return out;
}

}  // namespace rigikit
