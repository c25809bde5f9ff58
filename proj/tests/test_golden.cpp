#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <string>

#include "rigikit/flex.hpp"
#include "rigikit/json_io.hpp"

using namespace rigikit;

namespace {
std::string data_path(const char* name) {
    return std::string(RIGIKIT_TEST_DATA_DIR) + "/" + name;
}
}  // namespace

// 126-vertex five-fold patch around a center vertex, stored with exact
// lattice coordinates together with a coloring and the order-5 rotation.
TEST_CASE("the pinwheel patch carries a symmetric cartesian coloring") {
    Framework f = framework_from_json(read_json_file(data_path("pinwheel-framework.json")));
    EdgeColoring c = coloring_from_json(read_json_file(data_path("pinwheel-coloring.json")));
    SymmetryAction a = action_from_json(read_json_file(data_path("pinwheel-action.json")));

    REQUIRE(f.graph.vertices().size() == 126);
    REQUIRE(f.graph.edge_count() == 230);
    REQUIRE(f.has_exact());
    require_valid_action(f.graph, a);
    CHECK(a.k == 5);

    for (const Edge& e : f.graph.edges())
        CHECK(std::abs(length(edge_vector(f, e)) - 1.0) < kGeometricTol);

    CHECK(is_nac(f.graph, c));
    CHECK(is_cartesian(f.graph, c));
    CHECK(is_symmetric_nac(f.graph, c, a));

    Flex x = symmetric_flex(f, a, c);
    FlexCheckReport rep = check_flex(f, x);
    CHECK(rep.lengths_ok);
    CHECK(rep.max_length_deviation < kGeometricTol);
    CHECK(rep.nontrivial);
    REQUIRE(rep.equivariance_residual);
    CHECK(*rep.equivariance_residual < 1e-9);
}
