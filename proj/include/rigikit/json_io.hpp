#pragma once

#include <rigikit/dixon.hpp>
#include <rigikit/flex.hpp>
#include <rigikit/penrose.hpp>
#include <rigikit/tower.hpp>

#include <json.hpp>

#include <fstream>
#include <initializer_list>
#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace rigikit {

inline constexpr const char* kFormatTag = "rigidity-kit/1";

namespace detail {

inline void check_keys(const nlohmann::json& j, std::initializer_list<const char*> allowed,
                       const char* what) {
    if (!j.is_object()) throw DomainError(std::string(what) + " must be a JSON object");
    for (auto it = j.begin(); it != j.end(); ++it) {
        bool known = false;
        for (const char* k : allowed)
            if (it.key() == k) known = true;
        if (!known)
            throw DomainError("unknown field \"" + it.key() + "\" in " + what);
    }
}

inline const nlohmann::json& need(const nlohmann::json& j, const char* name, const char* what) {
    auto it = j.find(name);
    if (it == j.end())
        throw DomainError(std::string(what) + " is missing the \"" + name + "\" field");
    return *it;
}

inline void check_format(const nlohmann::json& j, const char* what) {
    const nlohmann::json& f = need(j, "format", what);
    if (!f.is_string() || f.get<std::string>() != kFormatTag)
        throw DomainError(std::string(what) + " has an unsupported format tag");
}

}  // namespace detail

inline nlohmann::json vertex_to_json(const VertexId& v) {
    if (std::holds_alternative<long long>(v)) return std::get<long long>(v);
    return std::get<std::string>(v);
}

inline VertexId vertex_from_json(const nlohmann::json& j) {
    if (j.is_number_integer()) return j.get<long long>();
    if (j.is_string()) return j.get<std::string>();
    throw DomainError("vertex ids must be integers or strings");
}

inline nlohmann::json edge_to_json(const Edge& e) {
    return nlohmann::json::array({vertex_to_json(e.a), vertex_to_json(e.b)});
}

inline Edge edge_from_json(const nlohmann::json& j) {
    if (!j.is_array() || j.size() != 2)
        throw DomainError("an edge must be a two-element array");
    return Edge(vertex_from_json(j[0]), vertex_from_json(j[1]));
}

inline nlohmann::json vec2_to_json(const Vec2& p) { return nlohmann::json::array({p.x, p.y}); }

inline Vec2 vec2_from_json(const nlohmann::json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw DomainError("a point must be a two-element numeric array");
    return {j[0].get<double>(), j[1].get<double>()};
}

namespace detail {

// Object keys are rendered vertex ids; resolving them back needs the vertex
// set and an injective rendering (an integer and a string id may not share
// the same spelling in one graph).
inline std::map<std::string, VertexId> key_table(const std::vector<VertexId>& vertices,
                                                 const char* what) {
    std::map<std::string, VertexId> table;
    for (const VertexId& v : vertices)
        if (!table.emplace(to_string(v), v).second)
            throw DomainError(std::string(what) + ": vertex ids collide as object keys (" +
                              to_string(v) + ")");
    return table;
}

inline VertexId resolve_key(const std::map<std::string, VertexId>& table, const std::string& key,
                            const char* what) {
    auto it = table.find(key);
    if (it == table.end())
        throw DomainError(std::string(what) + " names an unknown vertex \"" + key + "\"");
    return it->second;
}

}  // namespace detail

// ---- graphs and braced graphs ----------------------------------------

inline nlohmann::json graph_fields(const Graph& g) {
    nlohmann::json vs = nlohmann::json::array(), es = nlohmann::json::array();
    for (const VertexId& v : g.vertices()) vs.push_back(vertex_to_json(v));
    for (const Edge& e : g.edges()) es.push_back(edge_to_json(e));
    return {{"vertices", vs}, {"edges", es}};
}

inline Graph graph_from_fields(const nlohmann::json& j, const char* what = "graph") {
    detail::check_keys(j, {"vertices", "edges"}, what);
    std::vector<VertexId> vs;
    std::vector<Edge> es;
    for (const nlohmann::json& v : detail::need(j, "vertices", what))
        vs.push_back(vertex_from_json(v));
    for (const nlohmann::json& e : detail::need(j, "edges", what)) es.push_back(edge_from_json(e));
    return Graph(std::move(vs), std::move(es));
}

inline nlohmann::json graph_to_json(const Graph& g) {
    nlohmann::json j = graph_fields(g);
    j["format"] = kFormatTag;
    return j;
}

inline Graph graph_from_json(const nlohmann::json& j) {
    detail::check_format(j, "graph document");
    nlohmann::json rest = j;
    rest.erase("format");
    return graph_from_fields(rest, "graph document");
}

inline nlohmann::json braced_to_json(const BracedGraph& b) {
    nlohmann::json j = graph_fields(b.base);
    j["format"] = kFormatTag;
    nlohmann::json braces = nlohmann::json::array();
    for (const Edge& e : b.braces) braces.push_back(edge_to_json(e));
    j["braces"] = braces;
    return j;
}

inline BracedGraph braced_from_json(const nlohmann::json& j) {
    detail::check_keys(j, {"format", "vertices", "edges", "braces"}, "braced graph document");
    detail::check_format(j, "braced graph document");
    nlohmann::json core = {{"vertices", detail::need(j, "vertices", "braced graph document")},
                           {"edges", detail::need(j, "edges", "braced graph document")}};
    Graph g = graph_from_fields(core, "braced graph document");
    std::vector<Edge> braces;
    if (j.contains("braces"))
        for (const nlohmann::json& e : j["braces"]) braces.push_back(edge_from_json(e));
    return make_braced(std::move(g), std::move(braces));
}

// ---- colorings and symmetry actions ----------------------------------

inline nlohmann::json coloring_fields(const EdgeColoring& c) {
    nlohmann::json red = nlohmann::json::array(), blue = nlohmann::json::array();
    for (const Edge& e : c.red) red.push_back(edge_to_json(e));
    for (const Edge& e : c.blue) blue.push_back(edge_to_json(e));
    return {{"red", red}, {"blue", blue}};
}

inline EdgeColoring coloring_from_fields(const nlohmann::json& j, const char* what = "coloring") {
    detail::check_keys(j, {"red", "blue"}, what);
    std::vector<Edge> red, blue;
    for (const nlohmann::json& e : detail::need(j, "red", what)) red.push_back(edge_from_json(e));
    for (const nlohmann::json& e : detail::need(j, "blue", what)) blue.push_back(edge_from_json(e));
    return EdgeColoring(std::move(red), std::move(blue));
}

inline nlohmann::json coloring_to_json(const EdgeColoring& c) {
    nlohmann::json j = coloring_fields(c);
    j["format"] = kFormatTag;
    return j;
}

inline EdgeColoring coloring_from_json(const nlohmann::json& j) {
    detail::check_format(j, "coloring document");
    nlohmann::json rest = j;
    rest.erase("format");
    return coloring_from_fields(rest, "coloring document");
}

inline nlohmann::json action_fields(const SymmetryAction& a) {
    nlohmann::json gen = nlohmann::json::object();
    std::vector<VertexId> domain;
    for (const auto& [v, w] : a.generator) domain.push_back(v);
    detail::key_table(domain, "symmetry action");  // reject colliding keys
    for (const auto& [v, w] : a.generator) gen[to_string(v)] = vertex_to_json(w);
    return {{"k", a.k}, {"generator", gen}};
}

inline SymmetryAction action_from_fields(const nlohmann::json& j,
                                         const char* what = "symmetry action") {
    detail::check_keys(j, {"k", "generator"}, what);
    const nlohmann::json& k = detail::need(j, "k", what);
    if (!k.is_number_integer())
        throw DomainError(std::string(what) + ": \"k\" must be an integer");
    SymmetryAction a;
    a.k = k.get<int>();
    const nlohmann::json& gen = detail::need(j, "generator", what);
    if (!gen.is_object())
        throw DomainError(std::string(what) + ": \"generator\" must be an object");
    // The generator permutes the vertex set, so its values spell out the
    // domain and resolve the key types exactly.
    std::vector<VertexId> values;
    for (auto it = gen.begin(); it != gen.end(); ++it) values.push_back(vertex_from_json(*it));
    auto table = detail::key_table(values, what);
    for (auto it = gen.begin(); it != gen.end(); ++it)
        a.generator[detail::resolve_key(table, it.key(), what)] = vertex_from_json(*it);
    if (a.generator.size() != gen.size())
        throw DomainError(std::string(what) + ": generator keys collide");
    return a;
}

inline nlohmann::json action_to_json(const SymmetryAction& a) {
    nlohmann::json j = action_fields(a);
    j["format"] = kFormatTag;
    return j;
}

inline SymmetryAction action_from_json(const nlohmann::json& j) {
    detail::check_keys(j, {"format", "k", "generator"}, "symmetry action document");
    detail::check_format(j, "symmetry action document");
    nlohmann::json rest = j;
    rest.erase("format");
    return action_from_fields(rest, "symmetry action document");
}

// ---- frameworks -------------------------------------------------------

inline nlohmann::json framework_fields(const Framework& f) {
    nlohmann::json j;
    j["graph"] = graph_fields(f.graph);
    detail::key_table(f.graph.vertices(), "framework");  // reject colliding keys
    nlohmann::json placement = nlohmann::json::object();
    for (const auto& [v, p] : f.placement) placement[to_string(v)] = vec2_to_json(p);
    j["placement"] = placement;
    if (f.has_exact()) {
        nlohmann::json exact = nlohmann::json::object();
        for (const auto& [v, t] : f.exact) {
            nlohmann::json arr = nlohmann::json::array();
            for (long long c : t.k) arr.push_back(c);
            exact[to_string(v)] = arr;
        }
        j["exact"] = exact;
    }
    return j;
}

inline Framework framework_from_fields(const nlohmann::json& j,
                                       const char* what = "framework") {
    detail::check_keys(j, {"graph", "placement", "exact"}, what);
    Graph g = graph_from_fields(detail::need(j, "graph", what), what);
    auto table = detail::key_table(g.vertices(), what);
    const nlohmann::json& pj = detail::need(j, "placement", what);
    if (!pj.is_object()) throw DomainError(std::string(what) + ": placement must be an object");
    std::map<VertexId, Vec2> placement;
    for (auto it = pj.begin(); it != pj.end(); ++it)
        placement[detail::resolve_key(table, it.key(), what)] = vec2_from_json(*it);
    if (!j.contains("exact")) return make_framework(std::move(g), std::move(placement));

    const nlohmann::json& ej = j["exact"];
    if (!ej.is_object()) throw DomainError(std::string(what) + ": exact must be an object");
    std::map<VertexId, ZTuple> exact;
    for (auto it = ej.begin(); it != ej.end(); ++it) {
        if (!it->is_array() || it->size() != 5)
            throw DomainError(std::string(what) + ": exact coordinates are five-integer arrays");
        std::array<long long, 5> raw;
        for (int m = 0; m < 5; ++m) {
            if (!(*it)[m].is_number_integer())
                throw DomainError(std::string(what) +
                                  ": exact coordinates are five-integer arrays");
            raw[m] = (*it)[m].get<long long>();
        }
        exact[detail::resolve_key(table, it.key(), what)] = ZTuple(raw);
    }
    Framework f = make_framework(std::move(g), std::move(exact));
    // The float placement is derived; the serialized one must agree with it.
    for (const auto& [v, p] : f.placement) {
        auto it = placement.find(v);
        if (it == placement.end() || length(it->second - p) > kAdjacentTol)
            throw DomainError(std::string(what) +
                              ": placement disagrees with the exact coordinates at vertex " +
                              to_string(v));
    }
    if (placement.size() != f.placement.size())
        throw DomainError(std::string(what) + ": placement names a vertex outside the graph");
    return f;
}

inline nlohmann::json framework_to_json(const Framework& f) {
    nlohmann::json j = framework_fields(f);
    j["format"] = kFormatTag;
    return j;
}

inline Framework framework_from_json(const nlohmann::json& j) {
    detail::check_keys(j, {"format", "graph", "placement", "exact"}, "framework document");
    detail::check_format(j, "framework document");
    nlohmann::json rest = j;
    rest.erase("format");
    return framework_from_fields(rest, "framework document");
}

// ---- flexes -----------------------------------------------------------

inline nlohmann::json flex_to_json(const Flex& x) {
    nlohmann::json j;
    j["format"] = kFormatTag;
    j["graph"] = graph_fields(x.graph);
    detail::key_table(x.graph.vertices(), "flex");  // reject colliding keys
    j["base"] = vertex_to_json(x.base);
    nlohmann::json rot = nlohmann::json::object(), fix = nlohmann::json::object();
    for (const auto& [v, p] : x.rot_offset) rot[to_string(v)] = vec2_to_json(p);
    for (const auto& [v, p] : x.fix_offset) fix[to_string(v)] = vec2_to_json(p);
    j["rot_offset"] = rot;
    j["fix_offset"] = fix;
    j["rot_center"] = vec2_to_json(x.rot_center);
    j["fix_center"] = vec2_to_json(x.fix_center);
    j["domain"] = nlohmann::json::array({x.domain_lo, x.domain_hi});
    if (x.symmetry) {
        j["symmetry"] = action_fields(*x.symmetry);
        j["symmetry_angle"] = x.symmetry_angle;
    }
    return j;
}

inline Flex flex_from_json(const nlohmann::json& j) {
    const char* what = "flex document";
    detail::check_keys(j,
                       {"format", "graph", "base", "rot_offset", "fix_offset", "rot_center",
                        "fix_center", "domain", "symmetry", "symmetry_angle"},
                       what);
    detail::check_format(j, what);
    Flex x;
    x.graph = graph_from_fields(detail::need(j, "graph", what), what);
    auto table = detail::key_table(x.graph.vertices(), what);
    x.base = vertex_from_json(detail::need(j, "base", what));
    if (!x.graph.has_vertex(x.base)) throw DomainError("flex base vertex is not in the graph");
    auto read_offsets = [&](const char* name) {
        const nlohmann::json& oj = detail::need(j, name, what);
        if (!oj.is_object())
            throw DomainError(std::string(what) + ": offsets must be objects");
        std::map<VertexId, Vec2> out;
        for (auto it = oj.begin(); it != oj.end(); ++it)
            out[detail::resolve_key(table, it.key(), what)] = vec2_from_json(*it);
        if (out.size() != x.graph.vertices().size())
            throw DomainError(std::string(what) + ": " + name + " must cover every vertex");
        return out;
    };
    x.rot_offset = read_offsets("rot_offset");
    x.fix_offset = read_offsets("fix_offset");
    x.rot_center = vec2_from_json(detail::need(j, "rot_center", what));
    x.fix_center = vec2_from_json(detail::need(j, "fix_center", what));
    const nlohmann::json& dom = detail::need(j, "domain", what);
    Vec2 d = vec2_from_json(dom);
    x.domain_lo = d.x;
    x.domain_hi = d.y;
    if (j.contains("symmetry") != j.contains("symmetry_angle"))
        throw DomainError(std::string(what) +
                          ": symmetry and symmetry_angle come as a pair");
    if (j.contains("symmetry")) {
        x.symmetry = action_from_fields(j["symmetry"], what);
        x.symmetry_angle = j["symmetry_angle"].get<double>();
    }
    return x;
}

// ---- pentagrid patches -------------------------------------------------

inline nlohmann::json ribbon_label_to_json(const RibbonLabel& r) {
    return nlohmann::json::array({r.first, r.second});
}

inline RibbonLabel ribbon_label_from_json(const nlohmann::json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer())
        throw DomainError("a grid line label is a [family, index] integer pair");
    return {j[0].get<int>(), j[1].get<long long>()};
}

inline nlohmann::json patch_to_json(const PenrosePatch& patch) {
    nlohmann::json j = framework_fields(patch.framework);
    j["format"] = kFormatTag;
    nlohmann::json faces = nlohmann::json::array();
    for (const PenroseFace& f : patch.faces) {
        nlohmann::json cycle = nlohmann::json::array();
        for (const VertexId& v : f.cycle) cycle.push_back(vertex_to_json(v));
        faces.push_back({{"cycle", cycle},
                         {"lines", nlohmann::json::array({ribbon_label_to_json(f.line_a),
                                                          ribbon_label_to_json(f.line_b)})}});
    }
    j["faces"] = faces;
    nlohmann::json labels = nlohmann::json::array();
    for (const auto& [e, r] : patch.ribbon_labels)
        labels.push_back(nlohmann::json::array({edge_to_json(e), ribbon_label_to_json(r)}));
    j["ribbon_labels"] = labels;
    nlohmann::json lines = nlohmann::json::array();
    for (const RibbonLabel& r : patch.lines) lines.push_back(ribbon_label_to_json(r));
    j["lines"] = lines;
    return j;
}

// Accepts the patch document plus the optional extensions other tools add
// ("action" from the symmetric generator, "braces"/"braced_faces" from the
// bracing step); the extensions are read by their own helpers.
inline PenrosePatch patch_from_json(const nlohmann::json& j) {
    const char* what = "patch document";
    detail::check_keys(j,
                       {"format", "graph", "placement", "exact", "faces", "ribbon_labels",
                        "lines", "action", "braces", "braced_faces"},
                       what);
    detail::check_format(j, what);
    nlohmann::json core = {{"graph", detail::need(j, "graph", what)},
                           {"placement", detail::need(j, "placement", what)}};
    if (j.contains("exact")) core["exact"] = j["exact"];
    PenrosePatch patch;
    patch.framework = framework_from_fields(core, what);
    for (const nlohmann::json& fj : detail::need(j, "faces", what)) {
        detail::check_keys(fj, {"cycle", "lines"}, "patch face");
        const nlohmann::json& cyc = detail::need(fj, "cycle", "patch face");
        if (!cyc.is_array() || cyc.size() != 4)
            throw DomainError("a patch face cycle has four vertices");
        PenroseFace face;
        for (int i = 0; i < 4; ++i) {
            face.cycle[i] = vertex_from_json(cyc[i]);
            if (!patch.framework.graph.has_vertex(face.cycle[i]))
                throw DomainError("patch face names an unknown vertex");
        }
        const nlohmann::json& lines = detail::need(fj, "lines", "patch face");
        if (!lines.is_array() || lines.size() != 2)
            throw DomainError("a patch face crosses exactly two grid lines");
        face.line_a = ribbon_label_from_json(lines[0]);
        face.line_b = ribbon_label_from_json(lines[1]);
        patch.faces.push_back(std::move(face));
    }
    for (const nlohmann::json& lj : detail::need(j, "ribbon_labels", what)) {
        if (!lj.is_array() || lj.size() != 2)
            throw DomainError("ribbon label entries are [edge, label] pairs");
        Edge e = edge_from_json(lj[0]);
        if (!patch.framework.graph.has_edge(e))
            throw DomainError("ribbon label names an unknown edge " + to_string(e));
        patch.ribbon_labels[e] = ribbon_label_from_json(lj[1]);
    }
    for (const nlohmann::json& r : detail::need(j, "lines", what))
        patch.lines.push_back(ribbon_label_from_json(r));
    return patch;
}

inline nlohmann::json symmetric_patch_to_json(const SymmetricPatch& sp) {
    nlohmann::json j = patch_to_json(sp.patch);
    j["action"] = action_fields(sp.action);
    return j;
}

inline SymmetricPatch symmetric_patch_from_json(const nlohmann::json& j) {
    SymmetricPatch sp;
    sp.patch = patch_from_json(j);
    sp.action = action_from_fields(detail::need(j, "action", "symmetric patch document"),
                                   "symmetric patch document");
    return sp;
}

// ---- tower instances ----------------------------------------------------

inline nlohmann::json tower_to_json(const TowerInstance& t) {
    nlohmann::json levels = nlohmann::json::array();
    for (const Graph& g : t.levels) levels.push_back(graph_fields(g));
    return {{"format", kFormatTag},
            {"levels", levels},
            {"blue_pin", edge_to_json(t.blue_pin)},
            {"red_pin", edge_to_json(t.red_pin)}};
}

inline TowerInstance tower_from_json(const nlohmann::json& j) {
    const char* what = "tower document";
    detail::check_keys(j, {"format", "levels", "blue_pin", "red_pin"}, what);
    detail::check_format(j, what);
    TowerInstance t;
    for (const nlohmann::json& g : detail::need(j, "levels", what))
        t.levels.push_back(graph_from_fields(g, what));
    t.blue_pin = edge_from_json(detail::need(j, "blue_pin", what));
    t.red_pin = edge_from_json(detail::need(j, "red_pin", what));
    return t;
}

// ---- document plumbing ---------------------------------------------------

inline nlohmann::json json_from_string(const std::string& text, const char* what = "input") {
    nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
    if (j.is_discarded()) throw DomainError(std::string(what) + " is not valid JSON");
    return j;
}

inline nlohmann::json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return json_from_string(buf.str(), path.c_str());
}

inline void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw DomainError("cannot write " + path);
    out << text;
}

}  // namespace rigikit
