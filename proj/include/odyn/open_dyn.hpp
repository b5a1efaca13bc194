#pragma once

#include "odyn/dynamics.hpp"

namespace odyn {

// Parameter-indexed family of dynamics sharing motor and state sets.
struct MultiDynamics {
    Graph motor;
    IdSet params;
    std::map<Id, IdSet> state_sets;
    std::map<std::pair<Id, Id>, Transition> edge_trans;  // (edge, param)
};

// A scanned multi-dynamics: multi-dynamics plus clock and datation.
struct OpenDynamics {
    MultiDynamics multi;
    Clock clock;
    std::map<Id, Id> datation;
};

struct OpenRealization {
    Id param;
    Assignment assignment;

    friend bool operator==(const OpenRealization&, const OpenRealization&) = default;
};

// Partition of a parameter set into nonempty, disjoint, covering classes.
using ParamEquivalence = std::vector<IdSet>;

// The mono dynamics at one parameter value.
Dynamics slice(const MultiDynamics& m, const Id& param);

ScannedDynamics scanned_slice(const OpenDynamics& a, const Id& param);

IdSet open_states(const OpenDynamics& a);

Diagnostics validate_multi(const MultiDynamics& m);

Diagnostics validate_open(const OpenDynamics& a);

Diagnostics validate_partition(const ParamEquivalence& q, const IdSet& params);

// Class label for quotient parameters: "~" + least member.
Id class_label(const IdSet& cls);

OpenDynamics parametric_quotient(const OpenDynamics& a, const ParamEquivalence& q);

std::vector<OpenRealization> enumerate_open_realizations(const OpenDynamics& a);

bool passes_through(const OpenDynamics& a, const OpenRealization& r, const Id& s);

// True iff the dates succeed one another and r passes through both states.
bool passes_then(const OpenDynamics& a, const OpenRealization& r, const Id& s1, const Id& s2);

struct MultiDynamorphism {
    std::map<Id, Id> param_map;  // theta: params of source -> params of target
    GraphMorphism graph_part;
    std::map<Id, Transition> trans_part;
};

Diagnostics validate_multi_dynamorphism(const MultiDynamorphism& m, const MultiDynamics& a,
                                        const MultiDynamics& b);

}  // namespace odyn
