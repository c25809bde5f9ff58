#include <rigikit/json_io.hpp>

#include <catch2/catch_amalgamated.hpp>

#include "fixtures.hpp"

using namespace rigikit;
using fixtures::V;
using nlohmann::json;

TEST_CASE("graph documents round-trip and reject malformed input") {
    Graph g({V(0), V(1), V("hub")}, {{V(0), V(1)}, {V(1), V("hub")}});
    json j = graph_to_json(g);
    CHECK(j["format"] == kFormatTag);

    Graph back = graph_from_json(j);
    CHECK(back.vertices() == g.vertices());
    CHECK(back.edges() == g.edges());

    json extra = j;
    extra["comment"] = "hi";
    CHECK_THROWS_AS(graph_from_json(extra), DomainError);

    json unversioned = j;
    unversioned.erase("format");
    CHECK_THROWS_AS(graph_from_json(unversioned), DomainError);

    json wrong = j;
    wrong["format"] = "rigidity-kit/2";
    CHECK_THROWS_AS(graph_from_json(wrong), DomainError);

    json fractional = j;
    fractional["vertices"].push_back(1.5);
    CHECK_THROWS_AS(graph_from_json(fractional), DomainError);

    json loop = j;
    loop["edges"].push_back(json::array({0, 0}));
    CHECK_THROWS_AS(graph_from_json(loop), DomainError);

    json stub = j;
    stub["edges"].push_back(json::array({0}));
    CHECK_THROWS_AS(graph_from_json(stub), DomainError);

    CHECK_THROWS_AS(json_from_string("{not json"), DomainError);
}

TEST_CASE("braced graph documents validate the braces") {
    fixtures::BracedFixture fx = fixtures::rigid_squares_tree();
    BracedGraph b = make_braced(fx.base, fx.braces);
    json j = braced_to_json(b);

    BracedGraph back = braced_from_json(j);
    CHECK(back.base.edges() == b.base.edges());
    CHECK(back.braces == b.braces);

    json bogus = j;
    bogus["braces"].push_back(json::array({"a", "f"}));
    CHECK_THROWS_WITH(braced_from_json(bogus),
                      Catch::Matchers::ContainsSubstring("not a diagonal"));

    json duplicate = j;
    duplicate["braces"].push_back(json::array({"a", "b"}));
    CHECK_THROWS_WITH(braced_from_json(duplicate),
                      Catch::Matchers::ContainsSubstring("base edge"));
}

TEST_CASE("coloring documents keep the red and blue split") {
    EdgeColoring c({{V(0), V(1)}, {V(2), V(3)}}, {{V(1), V(2)}, {V(0), V(3)}});
    json j = coloring_to_json(c);
    CHECK(coloring_from_json(j) == c);

    json overlap = j;
    overlap["blue"].push_back(json::array({0, 1}));
    CHECK_THROWS_AS(coloring_from_json(overlap), DomainError);

    json extra = j;
    extra["green"] = json::array();
    CHECK_THROWS_AS(coloring_from_json(extra), DomainError);
}

TEST_CASE("action documents resolve keys against the permutation values") {
    json j{{"format", kFormatTag},
           {"k", 4},
           {"generator", {{"0", 1}, {"1", 2}, {"2", 3}, {"3", 0}}}};
    SymmetryAction a = action_from_json(j);
    CHECK(a.k == 4);
    CHECK(a.apply(V(0)) == V(1));
    CHECK(a.apply(V(3)) == V(0));
    require_valid_action(fixtures::cycle_graph(4), a);

    SymmetryAction again = action_from_json(action_to_json(a));
    CHECK(again.k == a.k);
    CHECK(again.generator == a.generator);

    json named{{"format", kFormatTag}, {"k", 2}, {"generator", {{"a", "b"}, {"b", "a"}}}};
    SymmetryAction swap_ab = action_from_json(named);
    CHECK(swap_ab.apply(V("a")) == V("b"));

    // The value set decides whether keys are numeric, so mixing the integer 1
    // with the string "1" leaves the keys unreadable.
    json colliding{{"format", kFormatTag}, {"k", 2}, {"generator", {{"1", "1"}, {"x", 1}}}};
    CHECK_THROWS_AS(action_from_json(colliding), DomainError);

    json fractional_k = j;
    fractional_k["k"] = 2.5;
    CHECK_THROWS_AS(action_from_json(fractional_k), DomainError);
}

TEST_CASE("framework documents round-trip float and exact coordinates") {
    Graph g({V(0), V(1), V(2)}, {{V(0), V(1)}, {V(1), V(2)}});
    std::map<VertexId, ZTuple> exact;
    exact[V(0)] = ZTuple({0, 0, 0, 0, 0});
    exact[V(1)] = ZTuple::unit(0);
    exact[V(2)] = ZTuple::unit(0) + ZTuple::unit(1);
    Framework f = make_framework(g, exact);

    json j = framework_to_json(f);
    REQUIRE(j.contains("exact"));
    Framework back = framework_from_json(j);
    REQUIRE(back.has_exact());
    for (const VertexId& v : g.vertices()) {
        CHECK(back.exact.at(v).k == f.exact.at(v).k);
        CHECK(length(back.placement.at(v) - f.placement.at(v)) < kAdjacentTol);
    }

    json tampered = j;
    tampered["placement"]["1"][0] = tampered["placement"]["1"][0].get<double>() + 0.5;
    CHECK_THROWS_WITH(framework_from_json(tampered),
                      Catch::Matchers::ContainsSubstring("disagrees"));

    std::map<VertexId, Vec2> pos{{V(0), {0, 0}}, {V(1), {1, 0}}, {V(2), {1.5, 0.25}}};
    Framework plain = make_framework(g, pos);
    json pj = framework_to_json(plain);
    CHECK_FALSE(pj.contains("exact"));
    Framework plain_back = framework_from_json(pj);
    CHECK_FALSE(plain_back.has_exact());
    CHECK(plain_back.placement == plain.placement);

    json stranger = pj;
    stranger["placement"]["7"] = json::array({0.0, 0.0});
    CHECK_THROWS_AS(framework_from_json(stranger), DomainError);
}

TEST_CASE("flex documents carry the motion and the optional symmetry block") {
    Graph square = fixtures::cycle_graph(4);
    std::map<VertexId, Vec2> pos{{V(0), {0, 0}}, {V(1), {1, 0}}, {V(2), {1, 1}}, {V(3), {0, 1}}};
    Framework f = make_framework(square, pos);
    EdgeColoring c({{V(0), V(1)}, {V(2), V(3)}}, {{V(1), V(2)}, {V(0), V(3)}});

    Flex x = pframework_flex(f, c);
    json j = flex_to_json(x);
    Flex back = flex_from_json(j);
    for (double t : {0.0, 0.7, 3.1})
        for (const VertexId& v : square.vertices())
            CHECK(length(back.position(v, t) - x.position(v, t)) < 1e-15);
    CHECK(check_flex(f, back).lengths_ok);

    json lonely = j;
    lonely["symmetry"] = action_fields(SymmetryAction{
        2, {{V(0), V(2)}, {V(1), V(3)}, {V(2), V(0)}, {V(3), V(1)}}});
    CHECK_THROWS_WITH(flex_from_json(lonely),
                      Catch::Matchers::ContainsSubstring("pair"));

    json stray_base = j;
    stray_base["base"] = 77;
    CHECK_THROWS_AS(flex_from_json(stray_base), DomainError);

    json partial = j;
    partial["rot_offset"].erase("2");
    CHECK_THROWS_WITH(flex_from_json(partial),
                      Catch::Matchers::ContainsSubstring("cover every vertex"));
}

TEST_CASE("symmetric flexes keep their action through serialization") {
    Graph square = fixtures::cycle_graph(4);
    // Equivariant placements are centered at the origin.
    std::map<VertexId, Vec2> pos{
        {V(0), {-0.5, -0.5}}, {V(1), {0.5, -0.5}}, {V(2), {0.5, 0.5}}, {V(3), {-0.5, 0.5}}};
    Framework f = make_framework(square, pos);
    EdgeColoring c({{V(0), V(1)}, {V(2), V(3)}}, {{V(1), V(2)}, {V(0), V(3)}});
    SymmetryAction half_turn{2, {{V(0), V(2)}, {V(1), V(3)}, {V(2), V(0)}, {V(3), V(1)}}};
    REQUIRE(is_symmetric_nac(square, c, half_turn));

    Flex x = symmetric_flex(f, half_turn, c);
    Flex back = flex_from_json(flex_to_json(x));
    REQUIRE(back.symmetry);
    CHECK(back.symmetry->k == 2);
    CHECK(back.symmetry->generator == half_turn.generator);
    CHECK(back.symmetry_angle == x.symmetry_angle);

    FlexCheckReport rep = check_flex(f, back);
    CHECK(rep.lengths_ok);
    REQUIRE(rep.equivariance_residual);
    CHECK(*rep.equivariance_residual < 1e-9);
}

TEST_CASE("patch documents round-trip faces, ribbon labels and grid lines") {
    PentagridParams p;
    p.offsets = {Rational(13, 100), Rational(27, 100), Rational(1, 5), Rational(3, 20),
                 Rational(1, 4)};
    p.radius = Rational(1);
    PenrosePatch patch = generate_patch(p);
    REQUIRE(patch.faces.size() > 10);

    json j = patch_to_json(patch);
    PenrosePatch back = patch_from_json(j);
    CHECK(back.framework.graph.edges() == patch.framework.graph.edges());
    REQUIRE(back.faces.size() == patch.faces.size());
    for (std::size_t i = 0; i < patch.faces.size(); ++i) {
        CHECK(back.faces[i].cycle == patch.faces[i].cycle);
        CHECK(back.faces[i].line_a == patch.faces[i].line_a);
        CHECK(back.faces[i].line_b == patch.faces[i].line_b);
    }
    CHECK(back.ribbon_labels == patch.ribbon_labels);
    CHECK(back.lines == patch.lines);
    for (const auto& [v, z] : patch.framework.exact) CHECK(back.framework.exact.at(v).k == z.k);

    json ghost_face = j;
    ghost_face["faces"][0]["cycle"][0] = "(9,9,9,9,9)";
    CHECK_THROWS_WITH(patch_from_json(ghost_face),
                      Catch::Matchers::ContainsSubstring("unknown vertex"));

    json triangle = j;
    triangle["faces"][0]["cycle"].erase(3);
    CHECK_THROWS_WITH(patch_from_json(triangle),
                      Catch::Matchers::ContainsSubstring("four vertices"));

    json ghost_label = j;
    ghost_label["ribbon_labels"][0][0] = json::array({"(0,0,0,0,0)", "(9,9,9,9,9)"});
    CHECK_THROWS_WITH(patch_from_json(ghost_label),
                      Catch::Matchers::ContainsSubstring("unknown edge"));
}

TEST_CASE("symmetric patch documents embed the rotation action") {
    SymmetricPatch sp = symmetric_patch(Rational(1), PatchVariant::Sun);
    json j = symmetric_patch_to_json(sp);
    REQUIRE(j.contains("action"));

    SymmetricPatch back = symmetric_patch_from_json(j);
    CHECK(back.action.k == 5);
    CHECK(back.action.generator == sp.action.generator);
    CHECK(back.patch.faces.size() == sp.patch.faces.size());
    require_valid_action(back.patch.framework.graph, back.action);
}

TEST_CASE("tower documents round-trip levels and pins") {
    TowerInstance t;
    t.levels = {fixtures::path_graph(3), fixtures::cycle_graph(4)};
    t.blue_pin = Edge(V(0), V(1));
    t.red_pin = Edge(V(1), V(2));

    json j = tower_to_json(t);
    TowerInstance back = tower_from_json(j);
    REQUIRE(back.levels.size() == 2);
    CHECK(back.levels[0].edges() == t.levels[0].edges());
    CHECK(back.levels[1].vertices() == t.levels[1].vertices());
    CHECK(back.blue_pin == t.blue_pin);
    CHECK(back.red_pin == t.red_pin);

    json noisy = j;
    noisy["levels"][0]["weight"] = 3;
    CHECK_THROWS_AS(tower_from_json(noisy), DomainError);

    json pinless = j;
    pinless.erase("red_pin");
    CHECK_THROWS_AS(tower_from_json(pinless), DomainError);
}
