#include "odyn/family.hpp"

#include <algorithm>

namespace odyn {

Id encode_assignment(const Assignment& a) {
    Id out = "{";
    bool first = true;
    for (const auto& [t, s] : a) {
        if (!first) out += ",";
        out += t + ":" + s;
        first = false;
    }
    return out + "}";
}

Id encode_tuple(const Tuple& t) {
    Id out = "(";
    bool first = true;
    for (const auto& [i, v] : t) {
        if (!first) out += ",";
        out += v;
        first = false;
    }
    return out + ")";
}

FamilyAnalysis analyze_components(const DynamicFamily& f) {
    FamilyAnalysis out;
    for (const auto& [i, a] : f.components) {
        auto& by_handle = out.by_handle[i];
        auto& handle_params = out.handle_params[i];
        for (const OpenRealization& r : enumerate_open_realizations(a)) {
            Id h = encode_assignment(r.assignment);
            by_handle.emplace(h, r.assignment);
            handle_params[h].insert(r.param);
        }
        std::vector<Assignment> parts;
        parts.reserve(by_handle.size());
        for (const auto& [h, x] : by_handle) parts.push_back(x);
        std::sort(parts.begin(), parts.end(), assignment_less);
        auto& hs = out.handles[i];
        for (const Assignment& x : parts) hs.push_back(encode_assignment(x));
    }
    return out;
}

Diagnostics validate_family(const DynamicFamily& f) {
    Diagnostics out;
    if (f.index.empty()) out.push_back("empty-index");
    if (!f.index.count(f.sync)) out.push_back("sync-index-not-in-index " + f.sync);
    for (const Id& i : f.index) {
        auto it = f.components.find(i);
        if (it == f.components.end()) {
            out.push_back("missing-component " + i);
            continue;
        }
        for (const auto& diag : validate_open(it->second))
            out.push_back("component " + i + ": " + diag);
    }
    if (!out.empty()) return out;
    const OpenDynamics& a0 = f.components.at(f.sync);
    for (const Id& i : f.index) {
        if (i == f.sync) continue;
        auto it = f.syncs.find(i);
        if (it == f.syncs.end()) {
            out.push_back("missing-synchronization " + i);
            continue;
        }
        const Synchronization& s = it->second;
        const OpenDynamics& ai = f.components.at(i);
        Dynamorphism m{s.graph, {}};
        for (const Id& v : a0.multi.motor.vertices) {
            Transition t{a0.clock.dyn.state_sets.at(v),
                         ai.clock.dyn.state_sets.at(s.graph.vertex_map.at(v)), {}};
            for (const Id& inst : t.source) {
                auto cit = s.clock_map.find(inst);
                if (cit == s.clock_map.end()) {
                    out.push_back("synchronization " + i + ": unmapped-instant " + inst);
                    t.map[inst] = {};
                } else {
                    t.map[inst] = {cit->second};
                }
            }
            m.trans_part[v] = std::move(t);
        }
        for (const auto& diag : validate_dynamorphism(m, a0.clock.dyn, ai.clock.dyn))
            out.push_back("synchronization " + i + ": " + diag);
    }
    if (f.interaction.index != f.index) out.push_back("interaction-index-mismatch");
    return out;
}

Diagnostics validate_interaction(const DynamicFamily& f) {
    Diagnostics out;
    if (f.interaction.graph.empty()) out.push_back("empty-interaction");
    FamilyAnalysis an = analyze_components(f);
    std::size_t n = 0;
    for (const PairTuple& t : f.interaction.graph) {
        for (const Id& i : f.index) {
            auto it = t.find(i);
            if (it == t.end()) {
                out.push_back("tuple " + std::to_string(n) + ": missing slot " + i);
                continue;
            }
            const auto& [handle, param] = it->second;
            auto hp = an.handle_params.at(i).find(handle);
            if (hp == an.handle_params.at(i).end() || !hp->second.count(param))
                out.push_back("incoherence at slot " + i + " (" + handle + "," + param + ")");
        }
        ++n;
    }
    return out;
}

namespace {

struct GenContext {
    const DynamicFamily& f;
    FamilyAnalysis an;
    std::vector<Id> others;  // index \ {sync}, canonical order

    explicit GenContext(const DynamicFamily& fam) : f(fam), an(analyze_components(fam)) {
        for (const Id& i : f.index)
            if (i != f.sync) others.push_back(i);
    }

    const OpenDynamics& comp(const Id& i) const { return f.components.at(i); }

    Id mapped_vertex(const Id& i, const Id& v) const {
        return i == f.sync ? v : f.syncs.at(i).graph.vertex_map.at(v);
    }

    Id mapped_edge(const Id& i, const Id& e) const {
        return i == f.sync ? e : f.syncs.at(i).graph.edge_map.at(e);
    }

    Id mapped_instant(const Id& i, const Id& t) const {
        return i == f.sync ? t : f.syncs.at(i).clock_map.at(t);
    }
};

// States of the generated dynamic at vertex v: index-tuples of component
// states whose dates agree through the synchronizations.
std::vector<Tuple> generated_states(const GenContext& cx, const Id& v) {
    std::vector<Tuple> out;
    const OpenDynamics& a0 = cx.comp(cx.f.sync);
    for (const Id& s0 : a0.multi.state_sets.at(v)) {
        std::vector<Tuple> partials{{{cx.f.sync, s0}}};
        Id date0 = a0.datation.at(s0);
        for (const Id& i : cx.others) {
            const OpenDynamics& ai = cx.comp(i);
            Id vi = cx.mapped_vertex(i, v);
            Id want = cx.mapped_instant(i, date0);
            std::vector<Tuple> next;
            for (const Id& si : ai.multi.state_sets.at(vi)) {
                if (ai.datation.at(si) != want) continue;
                for (const Tuple& p : partials) {
                    Tuple q = p;
                    q[i] = si;
                    next.push_back(std::move(q));
                }
            }
            partials = std::move(next);
        }
        out.insert(out.end(), partials.begin(), partials.end());
    }
    return out;
}

// "a_i passes then b_i" inside the generated-transition formula, for the
// realization with external part x and parameter mu_i of component i.
bool component_step(const GenContext& cx, const Id& i, const Id& mu_i, const Assignment& x,
                    const Id& a_i, const Id& b_i, const Id& edge, bool strict_edge) {
    const OpenDynamics& ai = cx.comp(i);
    OpenRealization r{mu_i, x};
    Id ta = ai.datation.at(a_i);
    Id tb = ai.datation.at(b_i);
    if (strict_edge) {
        const Edge& ce = ai.clock.dyn.motor.edge(cx.mapped_edge(i, edge));
        if (ai.clock.dyn.state_sets.at(ce.dom).count(ta) == 0) return false;
        if (clock_step(ai.clock, ce, ta) != tb) return false;
    } else if (!succeeds(ai.clock, ta, tb)) {
        return false;
    }
    return passes_through(ai, r, a_i) && passes_through(ai, r, b_i);
}

}  // namespace

OpenDynamics primo_generated(const DynamicFamily& f, bool strict_edge, Budget budget) {
    Diagnostics d = validate_family(f);
    if (!d.empty()) throw error("primo_generated: " + d.front());
    d = validate_interaction(f);
    if (!d.empty()) throw error("primo_generated: " + d.front());

    GenContext cx(f);
    const OpenDynamics& a0 = cx.comp(f.sync);
    std::set<Tuple> m = rb_image(f.interaction);
    if (m.empty()) throw error("primo_generated: empty parameter set");

    OpenDynamics out;
    out.multi.motor = a0.multi.motor;
    out.clock = a0.clock;
    for (const Tuple& mu : m) out.multi.params.insert(encode_tuple(mu));

    std::map<Id, std::vector<Tuple>> states;  // per vertex
    for (const Id& v : a0.multi.motor.vertices) {
        states[v] = generated_states(cx, v);
        IdSet& ss = out.multi.state_sets[v];
        for (const Tuple& t : states[v]) {
            Id id = encode_tuple(t);
            ss.insert(id);
            out.datation[id] = a0.datation.at(t.at(f.sync));
        }
    }

    std::size_t work = 0;
    for (const Edge& e : a0.multi.motor.edges) {
        for (const Tuple& mu : m) {
            std::set<Tuple> preimage = rb_preimage(f.interaction, mu);
            Transition tr{out.multi.state_sets.at(e.dom), out.multi.state_sets.at(e.cod), {}};
            for (const Tuple& a : states.at(e.dom)) {
                IdSet& img = tr.map[encode_tuple(a)];
                Id want0 = clock_step(a0.clock, e, a0.datation.at(a.at(f.sync)));
                for (const Tuple& b : states.at(e.cod)) {
                    if (a0.datation.at(b.at(f.sync)) != want0) continue;
                    bool found = false;
                    for (const Tuple& handles : preimage) {
                        if (++work > budget.max_combinations)
                            throw budget_exceeded("primo_generated: budget exceeded");
                        bool all = true;
                        for (const Id& i : f.index) {
                            const Assignment& x = cx.an.by_handle.at(i).at(handles.at(i));
                            if (!component_step(cx, i, mu.at(i), x, a.at(i), b.at(i), e.id,
                                                strict_edge)) {
                                all = false;
                                break;
                            }
                        }
                        if (all) {
                            found = true;
                            break;
                        }
                    }
                    if (found) img.insert(encode_tuple(b));
                }
            }
            out.multi.edge_trans[{e.id, encode_tuple(mu)}] = std::move(tr);
        }
    }
    return out;
}

ParamEquivalence heap_equivalence(const std::set<Tuple>& m, const HeapFamily& n) {
    // key: per coordinate, the value itself or a heap marker
    std::map<std::vector<Id>, IdSet> classes;
    for (const Tuple& mu : m) {
        std::vector<Id> key;
        for (const auto& [i, v] : mu) {
            auto it = n.find(i);
            bool pooled = it != n.end() && it->second.count(v);
            key.push_back(pooled ? Id("\x01") : v);
        }
        classes[std::move(key)].insert(encode_tuple(mu));
    }
    ParamEquivalence out;
    for (auto& [key, cls] : classes) out.push_back(std::move(cls));
    return out;
}

namespace {

// All index-tuples over the given per-slot candidate lists.
bool next_choice(std::vector<std::size_t>& pos, const std::vector<std::size_t>& sizes) {
    for (std::size_t k = 0; k < pos.size(); ++k) {
        if (++pos[k] < sizes[k]) return true;
        pos[k] = 0;
    }
    return false;
}

struct HeapContext {
    GenContext cx;
    IdSet compatible_params(const Id& k) const {
        IdSet out;
        for (const Id& l : cx.comp(k).multi.params)
            if (is_compatible(cx.f.interaction, {{{k, 1}, l}})) out.insert(l);
        return out;
    }
};

}  // namespace

HeapFamily functional_heaps(const DynamicFamily& f, Budget budget) {
    HeapContext hx{GenContext(f)};
    HeapFamily out;
    std::size_t work = 0;
    for (const Id& k : f.index) {
        IdSet& heap = out[k];
        IdSet candidates = hx.compatible_params(k);
        std::vector<Id> other(f.index.begin(), f.index.end());
        std::erase(other, k);
        std::vector<std::size_t> sizes;
        for (const Id& i : other) sizes.push_back(hx.cx.an.handles.at(i).size());
        for (const Id& lk : candidates) {
            bool determined = true;
            std::vector<std::size_t> pos(other.size(), 0);
            do {
                if (++work > budget.max_combinations)
                    throw budget_exceeded("functional_heaps: budget exceeded");
                PartialFamily ext;
                for (std::size_t j = 0; j < other.size(); ++j)
                    ext[{other[j], 0}] = hx.cx.an.handles.at(other[j])[pos[j]];
                if (!is_compatible(f.interaction, join(ext, {{{k, 1}, lk}}))) continue;
                for (const Id& lam : hx.cx.comp(k).multi.params) {
                    if (lam == lk) continue;
                    if (is_compatible(f.interaction, join(ext, {{{k, 1}, lam}}))) {
                        determined = false;
                        break;
                    }
                }
            } while (determined && next_choice(pos, sizes));
            if (determined) heap.insert(lk);
        }
    }
    return out;
}

HeapFamily flexible_heaps(const DynamicFamily& f, Budget budget) {
    HeapContext hx{GenContext(f)};
    HeapFamily out;
    std::size_t work = 0;
    for (const Id& k : f.index) {
        IdSet& heap = out[k];
        std::vector<Id> other(f.index.begin(), f.index.end());
        std::erase(other, k);
        // choices: a_k, then per j != k a parameter mu_j and a realization b_j
        std::vector<std::vector<Id>> pools;
        pools.push_back(hx.cx.an.handles.at(k));
        for (const Id& j : other) {
            pools.emplace_back(hx.cx.comp(j).multi.params.begin(),
                               hx.cx.comp(j).multi.params.end());
            pools.push_back(hx.cx.an.handles.at(j));
        }
        std::vector<std::size_t> sizes;
        for (const auto& p : pools) sizes.push_back(p.size());
        for (const Id& lk : hx.compatible_params(k)) {
            bool free = true;
            std::vector<std::size_t> pos(pools.size(), 0);
            do {
                if (++work > budget.max_combinations)
                    throw budget_exceeded("flexible_heaps: budget exceeded");
                PartialFamily ak{{{k, 0}, pools[0][pos[0]]}};
                PartialFamily mu, bs;
                for (std::size_t j = 0; j < other.size(); ++j) {
                    mu[{other[j], 1}] = pools[1 + 2 * j][pos[1 + 2 * j]];
                    bs[{other[j], 0}] = pools[2 + 2 * j][pos[2 + 2 * j]];
                }
                PartialFamily lk_slot{{{k, 1}, lk}};
                if (!is_compatible(f.interaction, join(join(lk_slot, ak), mu))) continue;
                if (!is_compatible(f.interaction, join(mu, bs))) continue;
                if (!is_compatible(f.interaction, join(join(join(lk_slot, mu), ak), bs))) {
                    free = false;
                }
            } while (free && next_choice(pos, sizes));
            if (!free) heap.insert(lk);
        }
    }
    return out;
}

OpenDynamics generate(const DynamicFamily& f, GenMode mode, bool strict_edge, Budget budget) {
    OpenDynamics primo = primo_generated(f, strict_edge, budget);
    if (mode == GenMode::primo) return primo;
    std::set<Tuple> m = rb_image(f.interaction);
    HeapFamily heaps;
    switch (mode) {
        case GenMode::functional:
            heaps = functional_heaps(f, budget);
            break;
        case GenMode::flexible:
            heaps = flexible_heaps(f, budget);
            break;
        case GenMode::mono:
            for (const Id& i : f.index) heaps[i] = f.components.at(i).multi.params;
            break;
        default:
            break;
    }
    return parametric_quotient(primo, heap_equivalence(m, heaps));
}

std::vector<IdSet> family_connective_structure(const DynamicFamily& f, bool include_empty) {
    return connective_structure(f.interaction, include_empty);
}

}  // namespace odyn
