#include <doctest.h>

#include "odyn/open_dyn.hpp"

using namespace odyn;

namespace {

Graph step_graph() {
    return Graph{{"S", "T"}, {{"e", "S", "T"}}};
}

Clock clock_h0() {
    Clock h;
    h.dyn.motor = step_graph();
    h.dyn.state_sets = {{"S", {"t0"}}, {"T", {"t1"}}};
    h.dyn.edge_trans["e"] = make_transition({"t0"}, {"t1"}, {{"t0", {"t1"}}});
    return h;
}

// First fixture component: params u,v; e_u: a->b, e_v: a->c.
OpenDynamics component_a0() {
    OpenDynamics a;
    a.multi.motor = step_graph();
    a.multi.params = {"u", "v"};
    a.multi.state_sets = {{"S", {"a"}}, {"T", {"b", "c"}}};
    a.multi.edge_trans[{"e", "u"}] = make_transition({"a"}, {"b", "c"}, {{"a", {"b"}}});
    a.multi.edge_trans[{"e", "v"}] = make_transition({"a"}, {"b", "c"}, {{"a", {"c"}}});
    a.clock = clock_h0();
    a.datation = {{"a", "t0"}, {"b", "t1"}, {"c", "t1"}};
    return a;
}

// Second fixture component: one param w; e_w: x -> {y,z}.
OpenDynamics component_a1() {
    OpenDynamics a;
    a.multi.motor = step_graph();
    a.multi.params = {"w"};
    a.multi.state_sets = {{"S", {"x"}}, {"T", {"y", "z"}}};
    a.multi.edge_trans[{"e", "w"}] = make_transition({"x"}, {"y", "z"}, {{"x", {"y", "z"}}});
    a.clock = clock_h0();
    a.datation = {{"x", "t0"}, {"y", "t1"}, {"z", "t1"}};
    return a;
}

}  // namespace

TEST_CASE("slice extracts the mono dynamics") {
    OpenDynamics a = component_a0();
    Dynamics du = slice(a.multi, "u");
    CHECK(du.edge_trans.at("e").at("a") == IdSet{"b"});
    CHECK_THROWS_AS(slice(a.multi, "q"), error);
}

TEST_CASE("validate_open accepts the fixture components") {
    CHECK(validate_open(component_a0()).empty());
    CHECK(validate_open(component_a1()).empty());
}

TEST_CASE("validate_open reports a broken datation law") {
    OpenDynamics a = component_a0();
    a.datation["b"] = "t0";
    Diagnostics d = validate_open(a);
    REQUIRE(!d.empty());
    bool found = false;
    for (const auto& msg : d) found |= msg.find("datation-law") != std::string::npos;
    CHECK(found);
}

TEST_CASE("single-param open dynamics matches the scanned validator") {
    OpenDynamics a = component_a1();
    CHECK(validate_open(a).empty());
    CHECK(validate_scanned(scanned_slice(a, "w")).empty());
}

TEST_CASE("parametric_quotient by the discrete partition is the identity") {
    OpenDynamics a = component_a0();
    OpenDynamics q = parametric_quotient(a, {{"u"}, {"v"}});
    CHECK(q.multi.params == IdSet{"~u", "~v"});
    CHECK(q.multi.edge_trans.at({"e", "~u"}) == a.multi.edge_trans.at({"e", "u"}));
    CHECK(q.multi.edge_trans.at({"e", "~v"}) == a.multi.edge_trans.at({"e", "v"}));
}

TEST_CASE("parametric_quotient by the total partition unions transitions") {
    OpenDynamics a = component_a0();
    OpenDynamics q = parametric_quotient(a, {{"u", "v"}});
    CHECK(q.multi.params == IdSet{"~u"});
    CHECK(q.multi.edge_trans.at({"e", "~u"}).at("a") == IdSet{"b", "c"});
    CHECK(validate_open(q).empty());
}

TEST_CASE("merging params with equal slices leaves the slice unchanged") {
    OpenDynamics a = component_a0();
    a.multi.edge_trans[{"e", "v"}] = a.multi.edge_trans.at({"e", "u"});
    OpenDynamics q = parametric_quotient(a, {{"u", "v"}});
    CHECK(q.multi.edge_trans.at({"e", "~u"}) == a.multi.edge_trans.at({"e", "u"}));
}

TEST_CASE("parametric_quotient rejects non-partitions") {
    OpenDynamics a = component_a0();
    CHECK_THROWS_AS(parametric_quotient(a, {{"u"}}), error);
    CHECK_THROWS_AS(parametric_quotient(a, {{"u"}, {"u", "v"}}), error);
}

TEST_CASE("enumerate_open_realizations on the fixture components") {
    std::vector<OpenRealization> r0 = enumerate_open_realizations(component_a0());
    CHECK(r0.size() == 6);  // 3 under u, 3 under v
    int under_u = 0, under_v = 0;
    for (const OpenRealization& r : r0) (r.param == "u" ? under_u : under_v)++;
    CHECK(under_u == 3);
    CHECK(under_v == 3);

    std::vector<OpenRealization> r1 = enumerate_open_realizations(component_a1());
    CHECK(r1.size() == 4);
    for (const OpenRealization& r : r1) CHECK(r.param == "w");
}

TEST_CASE("every enumerated open realization is date-respecting") {
    for (const OpenDynamics& a : {component_a0(), component_a1()}) {
        for (const OpenRealization& r : enumerate_open_realizations(a)) {
            CHECK(is_realization(a.clock, slice(a.multi, r.param), r.assignment));
            for (const auto& [t, s] : r.assignment) CHECK(a.datation.at(s) == t);
        }
    }
}

TEST_CASE("passes_through") {
    OpenDynamics a = component_a0();
    OpenRealization r{"u", {{"t0", "a"}, {"t1", "b"}}};
    CHECK(passes_through(a, r, "a"));
    CHECK(passes_through(a, r, "b"));
    CHECK(!passes_through(a, r, "c"));
    OpenRealization empty{"u", {}};
    CHECK(!passes_through(a, empty, "a"));
    CHECK_THROWS_AS(passes_through(a, r, "q"), error);
}

TEST_CASE("passes_then") {
    OpenDynamics a = component_a0();
    OpenRealization r{"u", {{"t0", "a"}, {"t1", "b"}}};
    CHECK(passes_then(a, r, "a", "b"));
    CHECK(!passes_then(a, r, "b", "a"));  // t0 does not succeed t1
    CHECK(!passes_then(a, r, "a", "c"));  // c is not hit
}

TEST_CASE("passes_then implies passes_through on both ends") {
    OpenDynamics a = component_a0();
    for (const OpenRealization& r : enumerate_open_realizations(a)) {
        for (const Id& s1 : open_states(a)) {
            for (const Id& s2 : open_states(a)) {
                if (passes_then(a, r, s1, s2)) {
                    CHECK(passes_through(a, r, s1));
                    CHECK(passes_through(a, r, s2));
                }
            }
        }
    }
}

TEST_CASE("validate_multi_dynamorphism") {
    OpenDynamics a = component_a0();

    MultiDynamorphism id;
    id.param_map = {{"u", "u"}, {"v", "v"}};
    id.graph_part = identity_morphism(a.multi.motor);
    id.trans_part["S"] = identity_transition(a.multi.state_sets.at("S"));
    id.trans_part["T"] = identity_transition(a.multi.state_sets.at("T"));
    CHECK(validate_multi_dynamorphism(id, a.multi, a.multi).empty());

    // theta collapsing two equal slices
    OpenDynamics b = a;
    b.multi.edge_trans[{"e", "v"}] = b.multi.edge_trans.at({"e", "u"});
    MultiDynamorphism collapse = id;
    collapse.param_map = {{"u", "u"}, {"v", "u"}};
    CHECK(validate_multi_dynamorphism(collapse, b.multi, b.multi).empty());

    // collapsing genuinely different slices fails with a diagnostic
    Diagnostics d = validate_multi_dynamorphism(collapse, a.multi, a.multi);
    CHECK(!d.empty());
}
