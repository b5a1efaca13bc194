#include "odyn/dynamics.hpp"

#include <algorithm>

namespace odyn {

bool assignment_less(const Assignment& a, const Assignment& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

IdSet all_states(const Dynamics& d) {
    IdSet out;
    for (const auto& [v, ss] : d.state_sets) out.insert(ss.begin(), ss.end());
    return out;
}

Diagnostics validate_dynamics(const Dynamics& d) {
    Diagnostics out;
    for (const auto& diag : validate_graph(d.motor)) out.push_back("motor: " + diag);
    for (const auto& [v, ss] : d.state_sets) {
        if (!d.motor.has_vertex(v)) out.push_back("state-set-on-unknown-vertex " + v);
    }
    for (const Id& v : d.motor.vertices) {
        if (!d.state_sets.count(v)) out.push_back("missing-state-set " + v);
    }
    // disjointness across vertices
    std::map<Id, Id> owner;
    for (const auto& [v, ss] : d.state_sets) {
        for (const Id& s : ss) {
            auto [it, fresh] = owner.emplace(s, v);
            if (!fresh) out.push_back("state-shared-between-vertices " + s + " (" + it->second + ", " + v + ")");
        }
    }
    for (const Edge& e : d.motor.edges) {
        auto it = d.edge_trans.find(e.id);
        if (it == d.edge_trans.end()) {
            out.push_back("missing-transition " + e.id);
            continue;
        }
        const Transition& f = it->second;
        auto src = d.state_sets.find(e.dom);
        auto dst = d.state_sets.find(e.cod);
        if (src != d.state_sets.end() && f.source != src->second)
            out.push_back("transition-source-mismatch " + e.id);
        if (dst != d.state_sets.end() && f.target != dst->second)
            out.push_back("transition-target-mismatch " + e.id);
        for (const auto& diag : validate_transition(f)) out.push_back(e.id + ": " + diag);
    }
    return out;
}

Id state_type(const Dynamics& d, const Id& s) {
    for (const auto& [v, ss] : d.state_sets)
        if (ss.count(s)) return v;
    throw error("unknown state " + s);
}

bool is_clock(const Dynamics& d) {
    for (const Edge& e : d.motor.edges) {
        if (classify(d.edge_trans.at(e.id)) != Determinism::deterministic) return false;
    }
    return true;
}

Diagnostics validate_clock(const Clock& h) {
    Diagnostics out = validate_dynamics(h.dyn);
    for (const Edge& e : h.dyn.motor.edges) {
        auto it = h.dyn.edge_trans.find(e.id);
        if (it != h.dyn.edge_trans.end() && classify(it->second) != Determinism::deterministic)
            out.push_back("non-deterministic-clock-edge " + e.id);
    }
    return out;
}

Id essential_instant(const Id& vertex) { return vertex + "•"; }

Clock essential_clock(const Graph& g) {
    if (!validate_graph(g).empty()) throw error("essential_clock: invalid graph");
    Clock h;
    h.dyn.motor = g;
    for (const Id& v : g.vertices) h.dyn.state_sets[v] = {essential_instant(v)};
    for (const Edge& e : g.edges) {
        Transition f{{essential_instant(e.dom)}, {essential_instant(e.cod)}, {}};
        f.map[essential_instant(e.dom)] = {essential_instant(e.cod)};
        h.dyn.edge_trans[e.id] = f;
    }
    return h;
}

Id clock_step(const Clock& h, const Edge& e, const Id& s) {
    const IdSet& img = h.dyn.edge_trans.at(e.id).at(s);
    if (img.size() != 1) throw error("clock_step: non-deterministic edge " + e.id);
    return *img.begin();
}

bool succeeds(const Clock& h, const Id& s, const Id& t) {
    Id typ_s = state_type(h.dyn, s);
    (void)state_type(h.dyn, t);
    for (const Edge& e : h.dyn.motor.edges) {
        if (e.dom != typ_s) continue;
        if (clock_step(h, e, s) == t) return true;
    }
    return false;
}

namespace {

// One witness per failing edge: a source state where the inclusion breaks.
void check_inclusion(const Id& edge_id, const Transition& lhs, const Transition& rhs,
                     Diagnostics& out) {
    for (const Id& a : lhs.source) {
        const IdSet& la = lhs.at(a);
        const IdSet& ra = rhs.at(a);
        for (const Id& b : la) {
            if (!ra.count(b)) {
                out.push_back("inclusion-fails-at " + edge_id + " state " + a + " image " + b);
                return;
            }
        }
    }
}

}  // namespace

Diagnostics validate_dynamorphism(const Dynamorphism& m, const Dynamics& a, const Dynamics& b) {
    Diagnostics out;
    for (const auto& diag : validate_graph_morphism(m.graph_part))
        out.push_back("graph-part: " + diag);
    if (!out.empty()) return out;
    for (const Edge& e : a.motor.edges) {
        const Transition& delta_s = m.trans_part.at(e.dom);
        const Transition& delta_t = m.trans_part.at(e.cod);
        const Edge& img = b.motor.edge(m.graph_part.edge_map.at(e.id));
        Transition lhs = compose(delta_t, a.edge_trans.at(e.id));
        Transition rhs = compose(b.edge_trans.at(img.id), delta_s);
        check_inclusion(e.id, lhs, rhs, out);
    }
    return out;
}

namespace {

// Datation of vertex v as a deterministic transition S^a -> S^h.
Transition datation_transition(const ScannedDynamics& a, const Id& v) {
    Transition f{a.dyn.state_sets.at(v), a.clock.dyn.state_sets.at(v), {}};
    for (const Id& s : f.source) {
        auto it = a.datation.find(s);
        if (it == a.datation.end())
            throw error("datation undefined on state " + s);
        f.map[s] = {it->second};
    }
    return f;
}

}  // namespace

Diagnostics validate_scanned(const ScannedDynamics& a) {
    Diagnostics out = validate_dynamics(a.dyn);
    for (const auto& diag : validate_clock(a.clock)) out.push_back("clock: " + diag);
    if (!out.empty()) return out;
    for (const Id& v : a.dyn.motor.vertices) {
        for (const Id& s : a.dyn.state_sets.at(v)) {
            auto it = a.datation.find(s);
            if (it == a.datation.end()) {
                out.push_back("undated-state " + s);
            } else if (!a.clock.dyn.state_sets.at(v).count(it->second)) {
                out.push_back("date-outside-vertex-instants " + s + " -> " + it->second);
            }
        }
    }
    if (!out.empty()) return out;
    // the datation must be a dynamorphism dyn -> clock with identity graph part
    for (const Edge& e : a.dyn.motor.edges) {
        Transition lhs = compose(datation_transition(a, e.cod), a.dyn.edge_trans.at(e.id));
        Transition rhs = compose(a.clock.dyn.edge_trans.at(e.id), datation_transition(a, e.dom));
        check_inclusion(e.id, lhs, rhs, out);
    }
    return out;
}

ScannedDynamics canonical_essential_scansion(const Dynamics& d) {
    ScannedDynamics out;
    out.dyn = d;
    out.clock = essential_clock(d.motor);
    for (const auto& [v, ss] : d.state_sets)
        for (const Id& s : ss) out.datation[s] = essential_instant(v);
    return out;
}

bool is_realization(const Clock& h, const Dynamics& d, const Assignment& x) {
    for (const auto& [t, s] : x) {
        if (state_type(h.dyn, t) != state_type(d, s)) return false;
    }
    for (const Edge& e : d.motor.edges) {
        for (const Id& t : h.dyn.state_sets.at(e.dom)) {
            Id tp = clock_step(h, e, t);
            auto it_tp = x.find(tp);
            if (it_tp == x.end()) continue;
            auto it_t = x.find(t);
            if (it_t == x.end()) return false;
            if (!d.edge_trans.at(e.id).at(it_t->second).count(it_tp->second)) return false;
        }
    }
    return true;
}

namespace {

struct RealizationSearch {
    const Clock& h;
    const Dynamics& d;
    std::vector<Id> instants;                  // decision order
    std::vector<std::vector<Id>> choices;      // candidate states per instant
    // constraints (t_pos, tp_pos, edge) indexed by the later decision step
    std::vector<std::vector<std::size_t>> checks_at;
    std::vector<const Transition*> check_edge;
    std::vector<std::pair<std::size_t, std::size_t>> check_ends;
    Assignment partial;
    std::vector<Assignment> out;

    RealizationSearch(const Clock& h_, const Dynamics& d_) : h(h_), d(d_) {
        std::map<Id, Id> inst_type;
        for (const auto& [v, ts] : h.dyn.state_sets)
            for (const Id& t : ts) {
                instants.push_back(t);
                inst_type[t] = v;
            }
        std::sort(instants.begin(), instants.end());
        std::map<Id, std::size_t> pos;
        for (std::size_t i = 0; i < instants.size(); ++i) pos[instants[i]] = i;
        choices.resize(instants.size());
        for (std::size_t i = 0; i < instants.size(); ++i) {
            const IdSet& ss = d.state_sets.at(inst_type[instants[i]]);
            choices[i].assign(ss.begin(), ss.end());
        }
        checks_at.resize(instants.size());
        for (const Edge& e : d.motor.edges) {
            for (const Id& t : h.dyn.state_sets.at(e.dom)) {
                Id tp = clock_step(h, e, t);
                std::size_t a = pos.at(t), b = pos.at(tp);
                std::size_t k = check_edge.size();
                check_edge.push_back(&d.edge_trans.at(e.id));
                check_ends.emplace_back(a, b);
                checks_at[std::max(a, b)].push_back(k);
            }
        }
    }

    bool check(std::size_t k) const {
        for (std::size_t c : checks_at[k]) {
            auto [t_pos, tp_pos] = check_ends[c];
            auto it_tp = partial.find(instants[tp_pos]);
            if (it_tp == partial.end()) continue;
            auto it_t = partial.find(instants[t_pos]);
            if (it_t == partial.end()) return false;
            if (!check_edge[c]->at(it_t->second).count(it_tp->second)) return false;
        }
        return true;
    }

    void run(std::size_t k) {
        if (k == instants.size()) {
            out.push_back(partial);
            return;
        }
        if (check(k)) run(k + 1);  // instant left undefined
        for (const Id& s : choices[k]) {
            partial[instants[k]] = s;
            if (check(k)) run(k + 1);
            partial.erase(instants[k]);
        }
    }
};

}  // namespace

std::vector<Assignment> enumerate_realizations(const Clock& h, const Dynamics& d) {
    if (h.dyn.motor.vertices != d.motor.vertices)
        throw error("enumerate_realizations: motor mismatch");
    RealizationSearch search(h, d);
    search.run(0);
    std::sort(search.out.begin(), search.out.end(), assignment_less);
    return search.out;
}

std::vector<Assignment> enumerate_scanned_realizations(const ScannedDynamics& a) {
    std::vector<Assignment> out;
    for (const Assignment& x : enumerate_realizations(a.clock, a.dyn)) {
        bool ok = true;
        for (const auto& [t, s] : x) {
            if (a.datation.at(s) != t) {
                ok = false;
                break;
            }
        }
        if (ok) out.push_back(x);
    }
    return out;
}

Diagnostics validate_scanned_dynamorphism(const ScannedDynamorphism& m, const ScannedDynamics& a,
                                          const ScannedDynamics& b) {
    Diagnostics out;
    Dynamorphism dyn_part{m.graph_part, m.trans_part};
    for (const auto& diag : validate_dynamorphism(dyn_part, a.dyn, b.dyn))
        out.push_back("dynamics-part: " + diag);
    Dynamorphism clk_part{m.graph_part, m.clock_part};
    for (const auto& diag : validate_dynamorphism(clk_part, a.clock.dyn, b.clock.dyn))
        out.push_back("clock-part: " + diag);
    if (!out.empty()) return out;
    // synchronization: tau_{Delta S} . delta_S  subset  d_S . rho_S
    for (const Id& v : a.dyn.motor.vertices) {
        Id w = m.graph_part.vertex_map.at(v);
        Transition lhs = compose(datation_transition(b, w), m.trans_part.at(v));
        Transition rhs = compose(m.clock_part.at(v), datation_transition(a, v));
        check_inclusion("sync@" + v, lhs, rhs, out);
    }
    return out;
}

}  // namespace odyn
