#include <doctest.h>

#include "odyn/graph.hpp"

using namespace odyn;

namespace {

Graph step_graph() {
    return Graph{{"S", "T"}, {{"e", "S", "T"}}};
}

}  // namespace

TEST_CASE("validate_graph accepts a well-formed graph") {
    CHECK(validate_graph(step_graph()).empty());
}

TEST_CASE("validate_graph flags a dangling endpoint") {
    Graph g{{"S", "T"}, {{"e", "S", "U"}}};
    Diagnostics d = validate_graph(g);
    REQUIRE(d.size() == 1);
    CHECK(d[0].find("dangling-endpoint") != std::string::npos);
    CHECK(d[0].find("e") != std::string::npos);
}

TEST_CASE("validate_graph accepts the empty graph") {
    CHECK(validate_graph(Graph{}).empty());
}

TEST_CASE("validate_graph flags duplicate edge ids") {
    Graph g{{"S"}, {{"e", "S", "S"}, {"e", "S", "S"}}};
    Diagnostics d = validate_graph(g);
    REQUIRE(d.size() == 1);
    CHECK(d[0].find("duplicate-edge-id") != std::string::npos);
}

TEST_CASE("identity_morphism is the identity and validates") {
    Graph g = step_graph();
    GraphMorphism m = identity_morphism(g);
    CHECK(m.vertex_map == std::map<Id, Id>{{"S", "S"}, {"T", "T"}});
    CHECK(m.edge_map == std::map<Id, Id>{{"e", "e"}});
    CHECK(validate_graph_morphism(m).empty());
}

TEST_CASE("identity_morphism of the empty graph has empty maps") {
    GraphMorphism m = identity_morphism(Graph{});
    CHECK(m.vertex_map.empty());
    CHECK(m.edge_map.empty());
}

TEST_CASE("identity_morphism with no edges has an empty edge map") {
    GraphMorphism m = identity_morphism(Graph{{"S", "T"}, {}});
    CHECK(m.vertex_map.size() == 2);
    CHECK(m.edge_map.empty());
}

TEST_CASE("validate_graph_morphism flags dom/cod incoherence") {
    Graph g{{"S", "T"}, {{"e", "S", "T"}, {"f", "T", "S"}}};
    GraphMorphism m = identity_morphism(g);
    m.edge_map["e"] = "f";  // e:S->T mapped to f:T->S under identity vertices
    Diagnostics d = validate_graph_morphism(m);
    REQUIRE(!d.empty());
    CHECK(d[0].find("incoherent") != std::string::npos);
    CHECK(d[0].find("e") != std::string::npos);
}

TEST_CASE("validate_graph_morphism flags unmapped vertices and edges") {
    Graph g = step_graph();
    GraphMorphism m{{{"S", "S"}}, {}, g, g};
    Diagnostics d = validate_graph_morphism(m);
    CHECK(d.size() == 2);
}

TEST_CASE("composition of valid morphisms is valid, identity is a unit") {
    Graph g = step_graph();
    Graph h{{"U"}, {{"l", "U", "U"}}};
    GraphMorphism f{{{"S", "U"}, {"T", "U"}}, {{"e", "l"}}, g, h};
    REQUIRE(validate_graph_morphism(f).empty());

    GraphMorphism idg = identity_morphism(g);
    GraphMorphism idh = identity_morphism(h);
    GraphMorphism left = compose_morphisms(idh, f);
    GraphMorphism right = compose_morphisms(f, idg);
    CHECK(left.vertex_map == f.vertex_map);
    CHECK(left.edge_map == f.edge_map);
    CHECK(right.vertex_map == f.vertex_map);
    CHECK(right.edge_map == f.edge_map);

    GraphMorphism gg{{{"U", "U"}}, {{"l", "l"}}, h, h};
    GraphMorphism c = compose_morphisms(gg, f);
    CHECK(validate_graph_morphism(c).empty());
}
