#pragma once

#include "odyn/graph.hpp"
#include "odyn/transition.hpp"

namespace odyn {

// A graphic dynamics: disjoint state sets on the motor's vertices and a
// set-valued transition on each edge.
struct Dynamics {
    Graph motor;
    std::map<Id, IdSet> state_sets;
    std::map<Id, Transition> edge_trans;
};

// A deterministic dynamics; its states are instants.
struct Clock {
    Dynamics dyn;
};

// (Delta, delta): a graph morphism between motors plus a per-vertex
// transition between state sets.
struct Dynamorphism {
    GraphMorphism graph_part;
    std::map<Id, Transition> trans_part;
};

// A dynamics packaged with a clock on the same motor and a datation
// assigning an instant to every state.
struct ScannedDynamics {
    Dynamics dyn;
    Clock clock;
    std::map<Id, Id> datation;
};

// Partial map from instants to states; the external part of a realization.
using Assignment = std::map<Id, Id>;

// Canonical order: by domain size, then lexicographic on (instant, state)
// pairs.
bool assignment_less(const Assignment& a, const Assignment& b);

IdSet all_states(const Dynamics& d);

Diagnostics validate_dynamics(const Dynamics& d);

// The unique vertex whose state set contains s.
Id state_type(const Dynamics& d, const Id& s);

bool is_clock(const Dynamics& d);

Diagnostics validate_clock(const Clock& h);

// States of the essential clock reuse vertex ids suffixed to keep the
// instant namespace separate from other dynamics on the same motor.
Id essential_instant(const Id& vertex);

Clock essential_clock(const Graph& g);

// The image of instant s under edge e's clock transition (a singleton).
Id clock_step(const Clock& h, const Edge& e, const Id& s);

bool succeeds(const Clock& h, const Id& s, const Id& t);

Diagnostics validate_dynamorphism(const Dynamorphism& m, const Dynamics& a, const Dynamics& b);

Diagnostics validate_scanned(const ScannedDynamics& a);

ScannedDynamics canonical_essential_scansion(const Dynamics& d);

bool is_realization(const Clock& h, const Dynamics& d, const Assignment& x);

std::vector<Assignment> enumerate_realizations(const Clock& h, const Dynamics& d);

std::vector<Assignment> enumerate_scanned_realizations(const ScannedDynamics& a);

// Scanned dynamorphism (Delta, delta, d) between two scanned dynamics.
struct ScannedDynamorphism {
    GraphMorphism graph_part;
    std::map<Id, Transition> trans_part;   // per source vertex, states to states
    std::map<Id, Transition> clock_part;   // per source vertex, instants to instants
};

Diagnostics validate_scanned_dynamorphism(const ScannedDynamorphism& m, const ScannedDynamics& a,
                                          const ScannedDynamics& b);

}  // namespace odyn
