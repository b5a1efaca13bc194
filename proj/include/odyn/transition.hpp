#pragma once

#include "odyn/base.hpp"

namespace odyn {

// Set-valued transition A ~> B. The map is total on the source set;
// undefinedness is encoded as the empty image.
struct Transition {
    IdSet source;
    IdSet target;
    std::map<Id, IdSet> map;

    const IdSet& at(const Id& a) const;

    friend bool operator==(const Transition&, const Transition&) = default;
};

enum class Determinism { deterministic, quasi_deterministic, general };

// Parameter-indexed family of transitions sharing one source and target.
struct TransitionFamily {
    IdSet params;
    IdSet source;
    IdSet target;
    std::map<Id, Transition> per_param;
};

// Builds a transition, filling missing source entries with empty images,
// and checks the invariants.
Transition make_transition(IdSet source, IdSet target, std::map<Id, IdSet> map);

// Identity transition a |-> {a}.
Transition identity_transition(const IdSet& states);

Diagnostics validate_transition(const Transition& f);

// g after f, (g . f)(a) = union of g(b) over b in f(a).
Transition compose(const Transition& g, const Transition& f);

IdSet image(const Transition& f);

Determinism classify(const Transition& f);

// Pointwise inclusion f(a) subset of g(a); requires equal contexts.
bool pointwise_subset(const Transition& f, const Transition& g);

TransitionFamily compose_family(const TransitionFamily& g, const TransitionFamily& f);

}  // namespace odyn
