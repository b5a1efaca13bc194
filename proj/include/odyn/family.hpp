#pragma once

#include "odyn/multirel.hpp"
#include "odyn/open_dyn.hpp"

namespace odyn {

// Synchronization (Delta_i, delta_i): graph morphism from the
// synchronizer's motor plus a deterministic clock map (instant -> instant).
struct Synchronization {
    GraphMorphism graph;
    std::map<Id, Id> clock_map;
};

// Family of open dynamics coupled by a realizations/parameters relation.
// Interaction slots are the component indexes; in-values are canonical
// assignment handles, out-values are component parameters.
struct DynamicFamily {
    IdSet index;
    Id sync;
    std::map<Id, OpenDynamics> components;
    BinaryMultipleRelation interaction;
    std::map<Id, Synchronization> syncs;  // for every i != sync
};

// Per-component subset of the parameter set.
using HeapFamily = std::map<Id, IdSet>;

enum class GenMode { primo, functional, flexible, mono };

// Caps the exponential heap and generation searches; exceeding it throws
// budget_exceeded instead of approximating.
struct Budget {
    std::size_t max_combinations = 1'000'000;
};

// Canonical text handle of an assignment: "{t0:a,t1:b}".
Id encode_assignment(const Assignment& a);

// Canonical id of an index-ordered tuple of values: "(v0,v1)".
Id encode_tuple(const Tuple& t);

// Per-component realization enumeration, shared by validation and
// generation.
struct FamilyAnalysis {
    // handle -> external part
    std::map<Id, std::map<Id, Assignment>> by_handle;
    // handle -> parameters under which it is a realization
    std::map<Id, std::map<Id, IdSet>> handle_params;
    // all handles of component i, canonical order
    std::map<Id, std::vector<Id>> handles;
};

FamilyAnalysis analyze_components(const DynamicFamily& f);

Diagnostics validate_family(const DynamicFamily& f);

Diagnostics validate_interaction(const DynamicFamily& f);

OpenDynamics primo_generated(const DynamicFamily& f, bool strict_edge = false,
                             Budget budget = {});

ParamEquivalence heap_equivalence(const std::set<Tuple>& m, const HeapFamily& n);

HeapFamily functional_heaps(const DynamicFamily& f, Budget budget = {});

HeapFamily flexible_heaps(const DynamicFamily& f, Budget budget = {});

OpenDynamics generate(const DynamicFamily& f, GenMode mode, bool strict_edge = false,
                      Budget budget = {});

std::vector<IdSet> family_connective_structure(const DynamicFamily& f,
                                               bool include_empty = false);

}  // namespace odyn
