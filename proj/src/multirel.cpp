#include "odyn/multirel.hpp"

#include <algorithm>

namespace odyn {

Id doubled_slot(const Id& slot, int side) { return slot + (side == 0 ? "/in" : "/out"); }

namespace {

Id encode_pair(const Id& in, const Id& out) { return "(" + in + "," + out + ")"; }

// All total tuples over the given contexts, in canonical order.
std::vector<Tuple> product_tuples(const std::map<Id, IdSet>& contexts) {
    std::vector<Tuple> out{Tuple{}};
    for (const auto& [slot, values] : contexts) {
        std::vector<Tuple> next;
        for (const Tuple& t : out) {
            for (const Id& v : values) {
                Tuple u = t;
                u[slot] = v;
                next.push_back(std::move(u));
            }
        }
        out = std::move(next);
    }
    return out;
}

}  // namespace

Diagnostics validate_multirel(const MultipleRelation& r) {
    Diagnostics out;
    for (const Id& i : r.index) {
        auto it = r.contexts.find(i);
        if (it == r.contexts.end())
            out.push_back("missing-context " + i);
        else if (it->second.empty())
            out.push_back("empty-context " + i);
    }
    for (const Tuple& t : r.graph) {
        for (const Id& i : r.index) {
            auto it = t.find(i);
            if (it == t.end()) {
                out.push_back("non-total-tuple (missing slot " + i + ")");
            } else if (r.contexts.count(i) && !r.contexts.at(i).count(it->second)) {
                out.push_back("value-outside-context " + i + " -> " + it->second);
            }
        }
        if (t.size() != r.index.size()) out.push_back("tuple-with-alien-slot");
    }
    return out;
}

Diagnostics validate_binary_multirel(const BinaryMultipleRelation& c) {
    Diagnostics out;
    for (const Id& i : c.index) {
        if (!c.in_contexts.count(i) || c.in_contexts.at(i).empty())
            out.push_back("missing-or-empty-in-context " + i);
        if (!c.out_contexts.count(i) || c.out_contexts.at(i).empty())
            out.push_back("missing-or-empty-out-context " + i);
    }
    for (const PairTuple& t : c.graph) {
        if (t.size() != c.index.size()) out.push_back("tuple-arity-mismatch");
        for (const auto& [i, ab] : t) {
            if (!c.index.count(i)) {
                out.push_back("tuple-with-alien-slot " + i);
            } else {
                if (!c.in_contexts.at(i).count(ab.first))
                    out.push_back("in-value-outside-context " + i + " -> " + ab.first);
                if (!c.out_contexts.at(i).count(ab.second))
                    out.push_back("out-value-outside-context " + i + " -> " + ab.second);
            }
        }
    }
    return out;
}

MultipleRelation constant_relation(const IdSet& index, const std::map<Id, IdSet>& contexts,
                                   ConstantKind kind) {
    MultipleRelation r{index, contexts, {}};
    for (const Id& i : index) {
        auto it = contexts.find(i);
        if (it == contexts.end() || it->second.empty())
            throw error("constant_relation: empty context at slot " + i);
    }
    if (kind == ConstantKind::one) {
        std::map<Id, IdSet> on_index;
        for (const Id& i : index) on_index[i] = contexts.at(i);
        for (Tuple& t : product_tuples(on_index)) r.graph.insert(std::move(t));
    }
    return r;
}

MultipleRelation restrict_relation(const MultipleRelation& r, const IdSet& slots) {
    for (const Id& i : slots)
        if (!r.index.count(i)) throw error("restrict: slot " + i + " not in index");
    MultipleRelation out;
    out.index = slots;
    for (const Id& i : slots) out.contexts[i] = r.contexts.at(i);
    for (const Tuple& t : r.graph) {
        Tuple p;
        for (const Id& i : slots) p[i] = t.at(i);
        out.graph.insert(std::move(p));
    }
    return out;
}

MultipleRelation tensor(const MultipleRelation& rk, const MultipleRelation& rl) {
    for (const Id& i : rk.index)
        if (rl.index.count(i)) throw error("tensor: overlapping slot " + i);
    MultipleRelation out;
    out.index = rk.index;
    out.index.insert(rl.index.begin(), rl.index.end());
    out.contexts = rk.contexts;
    out.contexts.insert(rl.contexts.begin(), rl.contexts.end());
    for (const Tuple& a : rk.graph) {
        for (const Tuple& b : rl.graph) {
            Tuple t = a;
            t.insert(b.begin(), b.end());
            out.graph.insert(std::move(t));
        }
    }
    return out;
}

MultipleRelation rd(const BinaryMultipleRelation& c) {
    MultipleRelation out;
    for (const Id& i : c.index) {
        out.index.insert(doubled_slot(i, 0));
        out.index.insert(doubled_slot(i, 1));
        out.contexts[doubled_slot(i, 0)] = c.in_contexts.at(i);
        out.contexts[doubled_slot(i, 1)] = c.out_contexts.at(i);
    }
    for (const PairTuple& t : c.graph) {
        Tuple u;
        for (const auto& [i, ab] : t) {
            u[doubled_slot(i, 0)] = ab.first;
            u[doubled_slot(i, 1)] = ab.second;
        }
        out.graph.insert(std::move(u));
    }
    return out;
}

MultipleRelation rm(const BinaryMultipleRelation& c) {
    MultipleRelation out;
    out.index = c.index;
    for (const Id& i : c.index) {
        IdSet pairs;
        for (const Id& a : c.in_contexts.at(i))
            for (const Id& b : c.out_contexts.at(i)) pairs.insert(encode_pair(a, b));
        out.contexts[i] = std::move(pairs);
    }
    for (const PairTuple& t : c.graph) {
        Tuple u;
        for (const auto& [i, ab] : t) u[i] = encode_pair(ab.first, ab.second);
        out.graph.insert(std::move(u));
    }
    return out;
}

std::set<Tuple> rb_image(const BinaryMultipleRelation& c) {
    std::set<Tuple> out;
    for (const PairTuple& t : c.graph) {
        Tuple b;
        for (const auto& [i, ab] : t) b[i] = ab.second;
        out.insert(std::move(b));
    }
    return out;
}

std::set<Tuple> rb_preimage(const BinaryMultipleRelation& c, const Tuple& mu) {
    if (mu.size() != c.index.size()) throw error("rb_preimage: malformed out-tuple");
    for (const auto& [i, b] : mu) {
        if (!c.index.count(i)) throw error("rb_preimage: alien slot " + i);
        if (!c.out_contexts.at(i).count(b))
            throw error("rb_preimage: value outside out-context at " + i);
    }
    std::set<Tuple> out;
    for (const PairTuple& t : c.graph) {
        bool match = true;
        Tuple a;
        for (const auto& [i, ab] : t) {
            if (ab.second != mu.at(i)) {
                match = false;
                break;
            }
            a[i] = ab.first;
        }
        if (match) out.insert(std::move(a));
    }
    return out;
}

PartialFamily join(const PartialFamily& q, const PartialFamily& r) {
    PartialFamily out = q;
    for (const auto& [slot, v] : r) {
        auto [it, fresh] = out.emplace(slot, v);
        if (!fresh && it->second != v)
            throw error("join: conflicting value at slot " + slot.first);
    }
    return out;
}

bool is_compatible(const BinaryMultipleRelation& c, const PartialFamily& p) {
    for (const auto& [slot, v] : p) {
        if (!c.index.count(slot.first))
            throw error("is_compatible: alien slot " + slot.first);
    }
    for (const PairTuple& t : c.graph) {
        bool match = true;
        for (const auto& [slot, v] : p) {
            const auto& ab = t.at(slot.first);
            const Id& have = slot.second == 0 ? ab.first : ab.second;
            if (have != v) {
                match = false;
                break;
            }
        }
        if (match) return true;
    }
    return false;
}

bool is_splittable(const MultipleRelation& r, const IdSet& j, const IdSet& k, const IdSet& l) {
    if (k.empty() || l.empty()) throw error("is_splittable: parts must be nonempty");
    IdSet uni = k;
    uni.insert(l.begin(), l.end());
    if (uni != j || uni.size() != k.size() + l.size())
        throw error("is_splittable: (K, L) is not a bipartition of J");
    MultipleRelation rj = restrict_relation(r, j);
    MultipleRelation prod = tensor(restrict_relation(r, k), restrict_relation(r, l));
    return rj.graph == prod.graph;
}

std::vector<IdSet> connective_structure(const BinaryMultipleRelation& c, bool include_empty) {
    MultipleRelation r = rm(c);
    std::vector<Id> slots(c.index.begin(), c.index.end());
    std::size_t n = slots.size();
    std::vector<IdSet> out;
    if (include_empty) out.push_back({});
    for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
        IdSet j;
        std::vector<Id> members;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (std::size_t{1} << i)) {
                j.insert(slots[i]);
                members.push_back(slots[i]);
            }
        bool splittable = false;
        // bipartitions: proper nonempty sub-masks containing the first member
        for (std::size_t sub = (mask - 1) & mask; sub != 0 && !splittable; sub = (sub - 1) & mask) {
            if ((sub & (mask & ~(mask - 1))) == 0) continue;  // skip mirrored bipartitions
            IdSet k, l;
            for (std::size_t i = 0; i < n; ++i) {
                if (!(mask & (std::size_t{1} << i))) continue;
                if (sub & (std::size_t{1} << i))
                    k.insert(slots[i]);
                else
                    l.insert(slots[i]);
            }
            if (k.empty() || l.empty()) continue;
            if (is_splittable(r, j, k, l)) splittable = true;
        }
        if (!splittable) out.push_back(std::move(j));
    }
    std::sort(out.begin(), out.end(), [](const IdSet& a, const IdSet& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return out;
}

}  // namespace odyn
