#pragma once

#include <utility>

#include "odyn/base.hpp"

namespace odyn {

// Total tuple over an index: slot -> value.
using Tuple = std::map<Id, Id>;

// Relation with an arbitrary finite index of slots; the graph is a set of
// total, context-respecting tuples.
struct MultipleRelation {
    IdSet index;
    std::map<Id, IdSet> contexts;
    std::set<Tuple> graph;
};

using PairTuple = std::map<Id, std::pair<Id, Id>>;

// Relation whose slot values are (in, out) pairs.
struct BinaryMultipleRelation {
    IdSet index;
    std::map<Id, IdSet> in_contexts;
    std::map<Id, IdSet> out_contexts;
    std::set<PairTuple> graph;
};

// A slot of the doubled index 2I: (component, 0) carries an in-value,
// (component, 1) an out-value.
using Slot2 = std::pair<Id, int>;

// Partial assignment over a subset of 2I.
using PartialFamily = std::map<Slot2, Id>;

// Doubled-index slot ids used by rd(); in/out sides stay distinct.
Id doubled_slot(const Id& slot, int side);

enum class ConstantKind { zero, one };

Diagnostics validate_multirel(const MultipleRelation& r);
Diagnostics validate_binary_multirel(const BinaryMultipleRelation& c);

MultipleRelation constant_relation(const IdSet& index, const std::map<Id, IdSet>& contexts,
                                   ConstantKind kind);

MultipleRelation restrict_relation(const MultipleRelation& r, const IdSet& slots);

// Disjoint-support product: all tuples whose restrictions fall in the
// operands' graphs.
MultipleRelation tensor(const MultipleRelation& rk, const MultipleRelation& rl);

MultipleRelation rd(const BinaryMultipleRelation& c);

MultipleRelation rm(const BinaryMultipleRelation& c);

std::set<Tuple> rb_image(const BinaryMultipleRelation& c);

std::set<Tuple> rb_preimage(const BinaryMultipleRelation& c, const Tuple& mu);

PartialFamily join(const PartialFamily& q, const PartialFamily& r);

// True iff some tuple of rd(c) restricts to p.
bool is_compatible(const BinaryMultipleRelation& c, const PartialFamily& p);

bool is_splittable(const MultipleRelation& r, const IdSet& j, const IdSet& k, const IdSet& l);

// All non-splittable subsets of the index, ordered by size then
// lexicographically. Singletons are always included; the empty set only
// when include_empty is set.
std::vector<IdSet> connective_structure(const BinaryMultipleRelation& c,
                                        bool include_empty = false);

}  // namespace odyn
