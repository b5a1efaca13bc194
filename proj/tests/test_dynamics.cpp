#include <doctest.h>

#include "odyn/dynamics.hpp"

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

// The u-slice of the first fixture component: a -> b.
Dynamics a0_slice_u() {
    Dynamics d;
    d.motor = step_graph();
    d.state_sets = {{"S", {"a"}}, {"T", {"b", "c"}}};
    d.edge_trans["e"] = make_transition({"a"}, {"b", "c"}, {{"a", {"b"}}});
    return d;
}

ScannedDynamics scanned_a0_u() {
    return ScannedDynamics{a0_slice_u(), clock_h0(), {{"a", "t0"}, {"b", "t1"}, {"c", "t1"}}};
}

}  // namespace

TEST_CASE("state_type finds the unique vertex") {
    Dynamics d = a0_slice_u();
    CHECK(state_type(d, "a") == "S");
    CHECK(state_type(d, "b") == "T");
    CHECK_THROWS_AS(state_type(d, "q"), error);
}

TEST_CASE("validate_dynamics flags overlapping state sets") {
    Dynamics d = a0_slice_u();
    CHECK(validate_dynamics(d).empty());
    d.state_sets["S"].insert("b");
    d.edge_trans["e"] = make_transition({"a", "b"}, {"b", "c"}, {{"a", {"b"}}});
    CHECK(!validate_dynamics(d).empty());
}

TEST_CASE("is_clock") {
    CHECK(is_clock(clock_h0().dyn));
    Dynamics d = a0_slice_u();
    d.edge_trans["e"] = make_transition({"a"}, {"b", "c"}, {{"a", {"b", "c"}}});
    CHECK(!is_clock(d));
    Dynamics no_edges;
    no_edges.motor.vertices = {"S"};
    no_edges.state_sets = {{"S", {"s"}}};
    CHECK(is_clock(no_edges));
}

TEST_CASE("essential_clock") {
    Clock h = essential_clock(step_graph());
    CHECK(h.dyn.state_sets.at("S") == IdSet{essential_instant("S")});
    CHECK(h.dyn.state_sets.at("T") == IdSet{essential_instant("T")});
    CHECK(h.dyn.edge_trans.at("e").at(essential_instant("S")) ==
          IdSet{essential_instant("T")});
    CHECK(is_clock(h.dyn));

    Clock loop = essential_clock(Graph{{"U"}, {{"l", "U", "U"}}});
    CHECK(loop.dyn.state_sets.at("U").size() == 1);
    CHECK(succeeds(loop, essential_instant("U"), essential_instant("U")));

    Clock empty = essential_clock(Graph{});
    CHECK(empty.dyn.state_sets.empty());
}

TEST_CASE("succeeds") {
    Clock h = clock_h0();
    CHECK(succeeds(h, "t0", "t1"));
    CHECK(!succeeds(h, "t1", "t0"));
}

TEST_CASE("validate_dynamorphism") {
    Dynamics d = a0_slice_u();
    Clock h = clock_h0();

    // identity on the dynamics itself
    Dynamorphism id;
    id.graph_part = identity_morphism(d.motor);
    id.trans_part["S"] = identity_transition(d.state_sets.at("S"));
    id.trans_part["T"] = identity_transition(d.state_sets.at("T"));
    CHECK(validate_dynamorphism(id, d, d).empty());

    // the fixture datation viewed as a dynamorphism into the clock
    Dynamorphism tau;
    tau.graph_part = identity_morphism(d.motor);
    tau.trans_part["S"] = make_transition({"a"}, {"t0"}, {{"a", {"t0"}}});
    tau.trans_part["T"] = make_transition({"b", "c"}, {"t1"}, {{"b", {"t1"}}, {"c", {"t1"}}});
    CHECK(validate_dynamorphism(tau, d, h.dyn).empty());

    // empty left side: delta_T(b) = {} makes the inclusion vacuous
    Dynamorphism partial = tau;
    partial.trans_part["T"] = make_transition({"b", "c"}, {"t1"}, {{"b", {}}, {"c", {}}});
    CHECK(validate_dynamorphism(partial, d, h.dyn).empty());

    // a genuinely failing inclusion is reported with the edge
    Dynamics bad = h.dyn;
    bad.edge_trans["e"] = make_transition({"t0"}, {"t1"}, {{"t0", {}}});
    Diagnostics diag = validate_dynamorphism(tau, d, bad);
    REQUIRE(!diag.empty());
    CHECK(diag[0].find("e") != std::string::npos);
}

TEST_CASE("canonical_essential_scansion") {
    Dynamics d = a0_slice_u();
    ScannedDynamics s = canonical_essential_scansion(d);
    CHECK(s.datation.at("a") == essential_instant("S"));
    CHECK(s.datation.at("b") == essential_instant("T"));
    CHECK(s.datation.at("c") == essential_instant("T"));
    CHECK(validate_scanned(s).empty());

    ScannedDynamics empty = canonical_essential_scansion(Dynamics{});
    CHECK(empty.datation.empty());
}

TEST_CASE("is_realization") {
    Clock h = clock_h0();
    Dynamics d = a0_slice_u();
    CHECK(is_realization(h, d, {}));
    CHECK(is_realization(h, d, {{"t0", "a"}}));
    CHECK(is_realization(h, d, {{"t0", "a"}, {"t1", "b"}}));
    CHECK(!is_realization(h, d, {{"t1", "b"}}));
    CHECK(!is_realization(h, d, {{"t0", "a"}, {"t1", "c"}}));
}

TEST_CASE("enumerate_realizations on the fixture slice") {
    Clock h = clock_h0();
    Dynamics d = a0_slice_u();
    std::vector<Assignment> r = enumerate_realizations(h, d);
    std::vector<Assignment> want = {{}, {{"t0", "a"}}, {{"t0", "a"}, {"t1", "b"}}};
    CHECK(r == want);
}

TEST_CASE("enumerate_realizations with a single instant") {
    Clock h;
    h.dyn.motor.vertices = {"S"};
    h.dyn.state_sets = {{"S", {"t"}}};
    Dynamics d;
    d.motor.vertices = {"S"};
    d.state_sets = {{"S", {"a", "b"}}};
    std::vector<Assignment> r = enumerate_realizations(h, d);
    std::vector<Assignment> want = {{}, {{"t", "a"}}, {{"t", "b"}}};
    CHECK(r == want);
}

TEST_CASE("enumerate_realizations of an empty dynamics") {
    Clock h;
    Dynamics d;
    std::vector<Assignment> r = enumerate_realizations(h, d);
    CHECK(r == std::vector<Assignment>{{}});
}

TEST_CASE("enumerate_scanned_realizations") {
    ScannedDynamics s = scanned_a0_u();
    std::vector<Assignment> r = enumerate_scanned_realizations(s);
    std::vector<Assignment> want = {{}, {{"t0", "a"}}, {{"t0", "a"}, {"t1", "b"}}};
    CHECK(r == want);

    // a state dated t0 but only reachable at t1 is excluded
    ScannedDynamics skew = s;
    skew.datation["b"] = "t0";
    for (const Assignment& x : enumerate_scanned_realizations(skew))
        for (const auto& [t, a] : x) CHECK(a != "b");

    // the empty assignment is always there, and members are injective
    for (const Assignment& x : r) {
        IdSet seen;
        for (const auto& [t, a] : x) CHECK(seen.insert(a).second);
    }
}

TEST_CASE("removing the maximal dated point keeps a scanned realization") {
    ScannedDynamics s = scanned_a0_u();
    for (const Assignment& x : enumerate_scanned_realizations(s)) {
        if (x.empty()) continue;
        Assignment shorter = x;
        shorter.erase(std::prev(shorter.end()));  // t1 before t0 never happens here
        CHECK(is_realization(s.clock, s.dyn, shorter));
    }
}

TEST_CASE("validate_scanned_dynamorphism") {
    ScannedDynamics s = scanned_a0_u();
    ScannedDynamorphism id;
    id.graph_part = identity_morphism(s.dyn.motor);
    id.trans_part["S"] = identity_transition(s.dyn.state_sets.at("S"));
    id.trans_part["T"] = identity_transition(s.dyn.state_sets.at("T"));
    id.clock_part["S"] = identity_transition(s.clock.dyn.state_sets.at("S"));
    id.clock_part["T"] = identity_transition(s.clock.dyn.state_sets.at("T"));
    CHECK(validate_scanned_dynamorphism(id, s, s).empty());

    // all-empty delta: left side of the synchronization inclusion is empty
    ScannedDynamorphism none = id;
    none.trans_part["S"] = make_transition({"a"}, {"a"}, {{"a", {}}});
    none.trans_part["T"] = make_transition({"b", "c"}, {"b", "c"}, {{"b", {}}, {"c", {}}});
    CHECK(validate_scanned_dynamorphism(none, s, s).empty());
}

TEST_CASE("assignment_less orders by size then pairs") {
    Assignment a{{"t0", "a"}};
    Assignment b{{"t0", "a"}, {"t1", "b"}};
    Assignment c{{"t1", "b"}};
    CHECK(assignment_less(a, b));
    CHECK(assignment_less(a, c));
    CHECK(!assignment_less(b, c));
}
