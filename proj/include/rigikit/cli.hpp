#pragma once

#include <rigikit/json_io.hpp>
#include <rigikit/svg.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace rigikit {

namespace detail {

inline Rational rational_arg(const std::string& text, const char* what) {
    try {
        Rational r(text);
        return r;
    } catch (const std::exception&) {
        throw DomainError(std::string(what) + " must be an integer or a p/q fraction, got \"" +
                          text + "\"");
    }
}

inline std::vector<double> double_list(const std::string& text, const char* what) {
    std::vector<double> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string item = text.substr(pos, comma - pos);
        try {
            std::size_t used = 0;
            out.push_back(std::stod(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw DomainError(std::string(what) + " must be a comma-separated number list");
        }
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

inline std::vector<int> int_list(const std::string& text, const char* what) {
    std::vector<int> out;
    for (double v : double_list(text, what)) {
        int i = static_cast<int>(v);
        if (static_cast<double>(i) != v)
            throw DomainError(std::string(what) + " must be a comma-separated integer list");
        out.push_back(i);
    }
    return out;
}

// Grid line labels are written family:index, e.g. 0:0 or 3:-2.
inline RibbonLabel label_arg(const std::string& text) {
    std::size_t colon = text.find(':');
    if (colon == std::string::npos)
        throw DomainError("ribbon labels are written family:index, got \"" + text + "\"");
    try {
        std::size_t ua = 0, ub = 0;
        std::string fam = text.substr(0, colon), idx = text.substr(colon + 1);
        int m = std::stoi(fam, &ua);
        long long k = std::stoll(idx, &ub);
        if (ua != fam.size() || ub != idx.size()) throw std::invalid_argument(text);
        return {m, k};
    } catch (const std::exception&) {
        throw DomainError("ribbon labels are written family:index, got \"" + text + "\"");
    }
}

inline TileType tile_arg(const std::string& text) {
    if (text == "fat") return TileType::Fat;
    if (text == "thin") return TileType::Thin;
    throw DomainError("tile class must be fat or thin");
}

inline VertexId vertex_arg(const Graph& g, const std::string& key) {
    return resolve_key(key_table(g.vertices(), "vertex argument"), key, "vertex argument");
}

// Accepts a plain graph, a braced graph, or a (braced) patch document.
inline BracedGraph braced_input(const nlohmann::json& j) {
    std::vector<Edge> braces;
    if (j.contains("braces"))
        for (const nlohmann::json& e : j["braces"]) braces.push_back(edge_from_json(e));
    if (j.contains("faces")) return make_braced(patch_from_json(j).framework.graph, braces);
    if (j.contains("braces")) return braced_from_json(j);
    return make_braced(graph_from_json(j), {});
}

// Accepts a framework or a patch document.
inline Framework framework_input(const nlohmann::json& j) {
    if (j.contains("faces")) return patch_from_json(j).framework;
    return framework_from_json(j);
}

// Same, but folds any braces into the edge set so colorings over the braced
// graph stay total.
inline Framework braced_framework_input(const nlohmann::json& j) {
    Framework f = framework_input(j);
    if (j.contains("braces")) {
        std::vector<Edge> edges = f.graph.edges();
        for (const nlohmann::json& e : j["braces"]) edges.push_back(edge_from_json(e));
        f.graph = Graph(f.graph.vertices(), edges);
    }
    return f;
}

// Accepts an action document or any document embedding one under "action".
inline SymmetryAction action_input(const nlohmann::json& j) {
    if (j.contains("generator")) return action_from_json(j);
    if (j.contains("action"))
        return action_from_fields(j["action"], "embedded symmetry action");
    throw DomainError("no symmetry action found in the given file");
}

inline nlohmann::json report_to_json(const FlexCheckReport& rep) {
    nlohmann::json j{{"format", kFormatTag},
                     {"lengths_ok", rep.lengths_ok},
                     {"max_length_deviation", rep.max_length_deviation},
                     {"max_base_deviation", rep.max_base_deviation},
                     {"nontrivial", rep.nontrivial},
                     {"max_angle_variation", rep.max_angle_variation},
                     {"witness", nlohmann::json::array({edge_to_json(rep.witness[0]),
                                                        edge_to_json(rep.witness[1])})}};
    if (rep.equivariance_residual) j["equivariance_residual"] = *rep.equivariance_residual;
    return j;
}

}  // namespace detail

// In-process entry point: parses the argument vector, writes JSON results to
// out and JSON error objects to err. Exit codes: 0 success, 1 usage error,
// 2 domain error.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"rigidity and flexibility of braced plane frameworks"};
    app.name("rigidity-kit");
    app.require_subcommand(1);

    auto print = [&out](const nlohmann::json& j) { out << j.dump(2) << "\n"; };
    auto emit_doc = [&out](const nlohmann::json& j, const std::string& path) {
        std::string text = j.dump(2) + "\n";
        if (!path.empty()) write_text_file(path, text);
        out << text;
    };

    // ---- nac ----
    CLI::App* nac = app.add_subcommand("nac", "NAC-coloring queries");
    nac->require_subcommand(1);

    struct {
        std::string graph, coloring, symmetry;
    } ncheck;
    CLI::App* nac_check = nac->add_subcommand("check", "test one coloring");
    nac_check->add_option("graph", ncheck.graph, "graph JSON file")->required();
    nac_check->add_option("--coloring", ncheck.coloring, "coloring JSON file")->required();
    nac_check->add_option("--symmetry", ncheck.symmetry, "symmetry action JSON file");
    nac_check->callback([&] {
        Graph g = graph_from_json(read_json_file(ncheck.graph));
        EdgeColoring c = coloring_from_json(read_json_file(ncheck.coloring));
        bool ok = is_nac(g, c);
        nlohmann::json j{
            {"format", kFormatTag}, {"nac", ok}, {"cartesian", ok && is_cartesian(g, c)}};
        if (!ncheck.symmetry.empty()) {
            SymmetryAction a = detail::action_input(read_json_file(ncheck.symmetry));
            j["symmetric_nac"] = ok && is_symmetric_nac(g, c, a);
        }
        print(j);
    });

    struct {
        std::string graph;
        long long limit = -1;
    } nenum;
    CLI::App* nac_enum = nac->add_subcommand("enumerate", "list NAC-colorings");
    nac_enum->add_option("graph", nenum.graph, "graph JSON file")->required();
    nac_enum->add_option("--limit", nenum.limit, "stop after this many colorings");
    nac_enum->callback([&] {
        Graph g = graph_from_json(read_json_file(nenum.graph));
        std::optional<std::size_t> limit;
        if (nenum.limit >= 0) limit = static_cast<std::size_t>(nenum.limit);
        std::vector<EdgeColoring> found = enumerate_nac(g, limit);
        nlohmann::json list = nlohmann::json::array();
        for (const EdgeColoring& c : found) list.push_back(coloring_fields(c));
        print({{"format", kFormatTag}, {"count", found.size()}, {"colorings", list}});
    });

    struct {
        std::string file, mode = "plain", symmetry;
    } ntower;
    CLI::App* nac_tower = nac->add_subcommand("tower", "chain NAC-colorings along a tower");
    nac_tower->add_option("file", ntower.file, "tower JSON file")->required();
    nac_tower->add_option("--mode", ntower.mode, "plain, ribbons or symmetric")
        ->check(CLI::IsMember({"plain", "ribbons", "symmetric"}));
    nac_tower->add_option("--symmetry", ntower.symmetry, "symmetry action JSON file");
    nac_tower->callback([&] {
        TowerInstance t = tower_from_json(read_json_file(ntower.file));
        TowerMode mode = TowerMode::Plain;
        if (ntower.mode == "ribbons") mode = TowerMode::MonochromaticRibbons;
        if (ntower.mode == "symmetric") mode = TowerMode::Symmetric;
        std::optional<SymmetryAction> action;
        if (!ntower.symmetry.empty())
            action = detail::action_input(read_json_file(ntower.symmetry));
        std::optional<std::vector<EdgeColoring>> chain = tower_chain(t, mode, action);
        nlohmann::json list = nlohmann::json::array();
        if (chain)
            for (const EdgeColoring& c : *chain) list.push_back(coloring_fields(c));
        print({{"format", kFormatTag}, {"found", chain.has_value()}, {"chain", list}});
    });

    // ---- ribbons ----
    CLI::App* ribbons = app.add_subcommand("ribbons", "ribbon decompositions");
    ribbons->require_subcommand(1);
    struct {
        std::string file;
    } rcomp;
    CLI::App* ribbons_compute = ribbons->add_subcommand("compute", "decompose into ribbons");
    ribbons_compute->add_option("file", rcomp.file, "graph or braced graph JSON file")
        ->required();
    ribbons_compute->callback([&] {
        BracedGraph b = detail::braced_input(read_json_file(rcomp.file));
        RibbonDecomposition dec = compute_ribbons(b.base);
        RibbonCutReport cut = is_ribbon_cutting(b.base);
        RibbonGraph rg = ribbon_graph(b);
        nlohmann::json ribbons_json = nlohmann::json::array();
        for (const auto& ribbon : dec.ribbons) {
            nlohmann::json one = nlohmann::json::array();
            for (const Edge& e : ribbon) one.push_back(edge_to_json(e));
            ribbons_json.push_back(one);
        }
        auto pairs = [](const std::vector<std::pair<int, int>>& es) {
            nlohmann::json j = nlohmann::json::array();
            for (const auto& [a, b2] : es) j.push_back(nlohmann::json::array({a, b2}));
            return j;
        };
        nlohmann::json j{{"format", kFormatTag},
                         {"ribbons", ribbons_json},
                         {"cutting", cut.cutting},
                         {"always_two_components", cut.always_two_components},
                         {"ribbon_graph", pairs(rg.edges)},
                         {"bracing_graph", pairs(rg.braced_edges)}};
        if (cut.witness) j["witness"] = *cut.witness;
        print(j);
    });

    // ---- rigidity ----
    CLI::App* rigidity = app.add_subcommand("rigidity", "decide rigidity of braced frameworks");
    rigidity->require_subcommand(1);
    struct {
        std::string file, symmetry;
    } rdec;
    CLI::App* rigidity_decide = rigidity->add_subcommand("decide", "rigid or flexible");
    rigidity_decide->add_option("file", rdec.file, "braced graph or patch JSON file")
        ->required();
    rigidity_decide->add_option("--symmetry", rdec.symmetry, "symmetry action JSON file");
    rigidity_decide->callback([&] {
        BracedGraph b = detail::braced_input(read_json_file(rdec.file));
        RigidityResult res;
        if (rdec.symmetry.empty()) {
            res = decide_rigidity(b);
        } else {
            SymmetryAction a = detail::action_input(read_json_file(rdec.symmetry));
            res = decide_symmetric_rigidity(b, a);
        }
        nlohmann::json j{{"format", kFormatTag},
                         {"verdict", res.rigid ? "rigid" : "flexible"}};
        if (res.rigid) {
            nlohmann::json tree = nlohmann::json::array();
            for (const auto& [x, y] : res.spanning_tree)
                tree.push_back(nlohmann::json::array({x, y}));
            j["spanning_tree"] = tree;
        }
        if (res.certificate) j["certificate"] = coloring_fields(*res.certificate);
        print(j);
    });

    // ---- penrose ----
    CLI::App* penrose = app.add_subcommand("penrose", "pentagrid patches");
    penrose->require_subcommand(1);

    struct {
        std::vector<std::string> gamma;
        std::vector<long long> window;
        std::string radius, output;
    } pgen;
    CLI::App* penrose_generate = penrose->add_subcommand("generate", "dualize a pentagrid");
    penrose_generate->add_option("--gamma", pgen.gamma, "five offsets, integers or p/q")
        ->required()
        ->expected(5);
    penrose_generate->add_option("--window", pgen.window, "index window lo hi")->expected(2);
    penrose_generate->add_option("--radius", pgen.radius, "disk radius, integer or p/q");
    penrose_generate->add_option("--output,-o", pgen.output, "also write the patch here");
    penrose_generate->callback([&] {
        PentagridParams p;
        for (int m = 0; m < 5; ++m)
            p.offsets[m] = detail::rational_arg(pgen.gamma[m], "--gamma");
        if (!pgen.window.empty()) p.index_window = {{pgen.window[0], pgen.window[1]}};
        if (!pgen.radius.empty()) p.radius = detail::rational_arg(pgen.radius, "--radius");
        emit_doc(patch_to_json(generate_patch(p)), pgen.output);
    });

    struct {
        std::string file, strategy, tile_class, exempt, faces, output;
        std::vector<std::string> ribbons;
        double probability = 1.0;
        std::uint64_t seed = 0;
    } pbrace;
    CLI::App* penrose_brace = penrose->add_subcommand("brace", "select and add face braces");
    penrose_brace->add_option("file", pbrace.file, "patch JSON file")->required();
    penrose_brace
        ->add_option("--strategy", pbrace.strategy,
                     "two-ribbon, tile, exempt, random or explicit")
        ->required()
        ->check(CLI::IsMember({"two-ribbon", "tile", "exempt", "random", "explicit"}));
    penrose_brace->add_option("--ribbon", pbrace.ribbons, "grid line family:index (twice)");
    penrose_brace->add_option("--class", pbrace.tile_class, "fat or thin");
    penrose_brace->add_option("--exempt", pbrace.exempt, "exempt orientation family:family");
    penrose_brace->add_option("--probability", pbrace.probability, "per-face brace chance");
    penrose_brace->add_option("--seed", pbrace.seed, "random strategy seed");
    penrose_brace->add_option("--faces", pbrace.faces, "explicit face indices, comma list");
    penrose_brace->add_option("--output,-o", pbrace.output, "also write the result here");
    penrose_brace->callback([&] {
        PenrosePatch patch = patch_from_json(read_json_file(pbrace.file));
        BraceStrategy strategy;
        if (pbrace.strategy == "two-ribbon") {
            if (pbrace.ribbons.size() != 2)
                throw DomainError("the two-ribbon strategy needs exactly two --ribbon labels");
            strategy = TwoRibbonBrace{detail::label_arg(pbrace.ribbons[0]),
                                      detail::label_arg(pbrace.ribbons[1])};
        } else if (pbrace.strategy == "tile") {
            strategy = TileClassBrace{detail::tile_arg(pbrace.tile_class)};
        } else if (pbrace.strategy == "exempt") {
            RibbonLabel pair = detail::label_arg(pbrace.exempt);
            strategy = OrientationExemptBrace{detail::tile_arg(pbrace.tile_class),
                                              {pair.first, static_cast<int>(pair.second)}};
        } else if (pbrace.strategy == "random") {
            strategy = RandomBrace{detail::tile_arg(pbrace.tile_class), pbrace.probability,
                                   pbrace.seed};
        } else {
            strategy = ExplicitBrace{detail::int_list(pbrace.faces, "--faces")};
        }
        BracedGraph braced = brace(patch, strategy);
        nlohmann::json j = patch_to_json(patch);
        nlohmann::json braces = nlohmann::json::array();
        for (const Edge& e : braced.braces) braces.push_back(edge_to_json(e));
        j["braces"] = braces;
        j["braced_faces"] = select_braced_faces(patch, strategy);
        emit_doc(j, pbrace.output);
    });

    struct {
        std::string variant, radius, output;
    } psym;
    CLI::App* penrose_symmetric =
        penrose->add_subcommand("symmetric", "five-fold symmetric patch");
    penrose_symmetric->add_option("--variant", psym.variant, "sun or star")
        ->required()
        ->check(CLI::IsMember({"sun", "star"}));
    penrose_symmetric->add_option("--radius", psym.radius, "disk radius, integer or p/q")
        ->required();
    penrose_symmetric->add_option("--output,-o", psym.output, "also write the patch here");
    penrose_symmetric->callback([&] {
        PatchVariant variant =
            psym.variant == "sun" ? PatchVariant::Sun : PatchVariant::Star;
        SymmetricPatch sp =
            symmetric_patch(detail::rational_arg(psym.radius, "--radius"), variant);
        emit_doc(symmetric_patch_to_json(sp), psym.output);
    });

    // ---- flex ----
    CLI::App* flex = app.add_subcommand("flex", "construct and check motions");
    flex->require_subcommand(1);

    struct {
        std::string file, coloring, symmetry, base, output;
    } fcon;
    CLI::App* flex_construct =
        flex->add_subcommand("construct", "motion from a cartesian coloring");
    flex_construct->add_option("file", fcon.file, "framework or patch JSON file")->required();
    flex_construct->add_option("--coloring", fcon.coloring, "coloring JSON file")->required();
    flex_construct->add_option("--symmetry", fcon.symmetry, "symmetry action JSON file");
    flex_construct->add_option("--base", fcon.base, "base vertex id");
    flex_construct->add_option("--output,-o", fcon.output, "also write the flex here");
    flex_construct->callback([&] {
        Framework f = detail::braced_framework_input(read_json_file(fcon.file));
        EdgeColoring c = coloring_from_json(read_json_file(fcon.coloring));
        std::optional<VertexId> base;
        if (!fcon.base.empty()) base = detail::vertex_arg(f.graph, fcon.base);
        Flex x;
        if (fcon.symmetry.empty()) {
            x = pframework_flex(f, c, base);
        } else {
            SymmetryAction a = detail::action_input(read_json_file(fcon.symmetry));
            x = symmetric_flex(f, a, c, base);
        }
        emit_doc(flex_to_json(x), fcon.output);
    });

    struct {
        std::string file, flex_file;
        int samples = 64;
    } fcheck;
    CLI::App* flex_check = flex->add_subcommand("check", "sample a motion against a framework");
    flex_check->add_option("file", fcheck.file, "framework or patch JSON file")->required();
    flex_check->add_option("--flex", fcheck.flex_file, "flex JSON file")->required();
    flex_check->add_option("--samples", fcheck.samples, "sample count");
    flex_check->callback([&] {
        Framework f = detail::braced_framework_input(read_json_file(fcheck.file));
        Flex x = flex_from_json(read_json_file(fcheck.flex_file));
        print(detail::report_to_json(check_flex(f, x, fcheck.samples)));
    });

    // ---- dixon ----
    CLI::App* dixon = app.add_subcommand("dixon", "bipartite axis linkages");
    dixon->require_subcommand(1);
    struct {
        std::string xs, ys;
        std::optional<double> tail_x, tail_y;
        int frames = 1;
    } dflex;
    CLI::App* dixon_flex_cmd = dixon->add_subcommand("flex", "axis-sliding motion");
    dixon_flex_cmd->add_option("--x", dflex.xs, "x-axis values, comma list")->required();
    dixon_flex_cmd->add_option("--y", dflex.ys, "y-axis values, comma list")->required();
    dixon_flex_cmd->add_option("--tail-inf-x", dflex.tail_x, "declared x tail infimum");
    dixon_flex_cmd->add_option("--tail-inf-y", dflex.tail_y, "declared y tail infimum");
    dixon_flex_cmd->add_option("--frames", dflex.frames, "sampled placements to emit");
    dixon_flex_cmd->callback([&] {
        if (dflex.frames < 1) throw DomainError("frame count must be at least 1");
        DixonLinkage d{detail::double_list(dflex.xs, "--x"),
                       detail::double_list(dflex.ys, "--y"), dflex.tail_x, dflex.tail_y};
        DixonFlex x = dixon_flex(d);
        nlohmann::json frames = nlohmann::json::array();
        for (int i = 0; i < dflex.frames; ++i) {
            double t = dflex.frames == 1 ? 0.0 : 1.0 * i / (dflex.frames - 1);
            nlohmann::json placement = nlohmann::json::object();
            for (const VertexId& v : x.graph.vertices())
                placement[to_string(v)] = vec2_to_json(x.position(v, t));
            frames.push_back({{"t", t}, {"placement", placement}});
        }
        print({{"format", kFormatTag},
               {"flexible", true},
               {"amplitude", x.amplitude},
               {"frames", frames}});
    });

    // ---- render ----
    CLI::App* render = app.add_subcommand("render", "SVG output");
    render->require_subcommand(1);

    struct {
        std::string file, coloring, output = "framework.svg";
        bool ribbons = false;
        double scale = 40.0;
    } rfw;
    CLI::App* render_framework = render->add_subcommand("framework", "draw one placement");
    render_framework->add_option("file", rfw.file, "framework or patch JSON file")->required();
    render_framework->add_option("--coloring", rfw.coloring, "coloring JSON file");
    render_framework->add_flag("--ribbons", rfw.ribbons, "overlay the ribbon chords");
    render_framework->add_option("--scale", rfw.scale, "pixels per unit length");
    render_framework->add_option("--output,-o", rfw.output, "SVG file to write");
    render_framework->callback([&] {
        nlohmann::json doc = read_json_file(rfw.file);
        RenderStyle style;
        style.scale = rfw.scale;
        style.ribbon_overlay = rfw.ribbons;
        RenderScene scene;
        if (doc.contains("faces")) {
            PenrosePatch patch = patch_from_json(doc);
            scene.framework = patch.framework;
            if (doc.contains("braces"))
                for (const nlohmann::json& e : doc["braces"])
                    scene.braces.push_back(edge_from_json(e));
            if (doc.contains("braced_faces"))
                for (const nlohmann::json& i : doc["braced_faces"]) {
                    int idx = i.get<int>();
                    if (idx < 0 || idx >= static_cast<int>(patch.faces.size()))
                        throw DomainError("braced face index out of range");
                    scene.filled.push_back(patch.faces[idx].cycle);
                }
            if (style.ribbon_overlay) {
                const auto& pos = patch.framework.placement;
                for (const PenroseFace& face : patch.faces) {
                    std::array<Vec2, 4> p;
                    for (int i = 0; i < 4; ++i) p[i] = pos.at(face.cycle[i]);
                    auto mid = [](Vec2 a, Vec2 b2) { return (a + b2) * 0.5; };
                    scene.overlay.push_back({mid(p[0], p[1]), mid(p[2], p[3])});
                    scene.overlay.push_back({mid(p[1], p[2]), mid(p[3], p[0])});
                }
            }
        } else {
            scene.framework = framework_from_json(doc);
        }
        if (!rfw.coloring.empty())
            scene.coloring = coloring_from_json(read_json_file(rfw.coloring));
        write_text_file(rfw.output, render_svg(scene, style));
        print({{"format", kFormatTag}, {"files", nlohmann::json::array({rfw.output})}});
    });

    struct {
        std::string file, coloring, output = "flex";
        int frames = 1;
        std::optional<double> t;
        double scale = 40.0;
    } rfx;
    CLI::App* render_flex = render->add_subcommand("flex", "draw sampled motion frames");
    render_flex->add_option("file", rfx.file, "flex JSON file")->required();
    render_flex->add_option("--coloring", rfx.coloring, "coloring JSON file");
    render_flex->add_option("--frames", rfx.frames, "frame count");
    render_flex->add_option("--t", rfx.t, "sample time for a single frame");
    render_flex->add_option("--scale", rfx.scale, "pixels per unit length");
    render_flex->add_option("--output,-o", rfx.output, "file name prefix");
    render_flex->callback([&] {
        Flex x = flex_from_json(read_json_file(rfx.file));
        RenderStyle style;
        style.frames = rfx.frames;
        style.scale = rfx.scale;
        std::optional<EdgeColoring> coloring;
        if (!rfx.coloring.empty())
            coloring = coloring_from_json(read_json_file(rfx.coloring));
        std::vector<std::string> docs;
        if (rfx.t) {
            if (rfx.frames != 1)
                throw DomainError("--t picks the single frame, use it with --frames 1");
            RenderScene scene{motion_frame(x, *rfx.t), coloring, {}, {}, {}};
            docs.push_back(render_svg(scene, style));
        } else {
            docs = render_flex_frames(x, style, coloring);
        }
        nlohmann::json files = nlohmann::json::array();
        for (std::size_t i = 0; i < docs.size(); ++i) {
            char name[512];
            std::snprintf(name, sizeof name, "%s-%03zu.svg", rfx.output.c_str(), i);
            write_text_file(name, docs[i]);
            files.push_back(std::string(name));
        }
        print({{"format", kFormatTag}, {"files", files}});
    });

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e, out, err);
        err << nlohmann::json{{"error", e.what()}}.dump() << "\n";
        return 1;
    } catch (const DomainError& e) {
        err << nlohmann::json{{"error", e.what()}}.dump() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << nlohmann::json{{"error", e.what()}}.dump() << "\n";
        return 2;
    }
    return 0;
}

}  // namespace rigikit
