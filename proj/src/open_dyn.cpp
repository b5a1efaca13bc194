#include "odyn/open_dyn.hpp"

#include <algorithm>

namespace odyn {

Dynamics slice(const MultiDynamics& m, const Id& param) {
    if (!m.params.count(param)) throw error("slice: unknown parameter " + param);
    Dynamics d;
    d.motor = m.motor;
    d.state_sets = m.state_sets;
    for (const Edge& e : m.motor.edges) d.edge_trans[e.id] = m.edge_trans.at({e.id, param});
    return d;
}

ScannedDynamics scanned_slice(const OpenDynamics& a, const Id& param) {
    return {slice(a.multi, param), a.clock, a.datation};
}

IdSet open_states(const OpenDynamics& a) {
    IdSet out;
    for (const auto& [v, ss] : a.multi.state_sets) out.insert(ss.begin(), ss.end());
    return out;
}

Diagnostics validate_multi(const MultiDynamics& m) {
    Diagnostics out;
    if (m.params.empty()) out.push_back("empty-parameter-set");
    for (const auto& [key, f] : m.edge_trans) {
        if (!m.params.count(key.second)) out.push_back("transition-for-unknown-param " + key.second);
        if (!m.motor.find_edge(key.first)) out.push_back("transition-for-unknown-edge " + key.first);
    }
    for (const Id& mu : m.params) {
        bool complete = true;
        for (const Edge& e : m.motor.edges)
            if (!m.edge_trans.count({e.id, mu})) {
                out.push_back("missing-transition (" + e.id + ", " + mu + ")");
                complete = false;
            }
        if (!complete) continue;
        for (const auto& diag : validate_dynamics(slice(m, mu)))
            out.push_back("slice " + mu + ": " + diag);
    }
    return out;
}

Diagnostics validate_open(const OpenDynamics& a) {
    Diagnostics out = validate_multi(a.multi);
    if (!out.empty()) return out;
    for (const Id& mu : a.multi.params) {
        for (const auto& diag : validate_scanned(scanned_slice(a, mu)))
            out.push_back("slice " + mu + ": " + diag);
    }
    // forced datation law: b in e(a) implies date(b) = e^h(date(a)).
    // Reported as its own diagnostic even when the scanned check above
    // already failed; dates the clock cannot step are skipped (the scanned
    // validation covers those).
    for (const Edge& e : a.multi.motor.edges) {
        const IdSet& dom_instants = a.clock.dyn.state_sets.at(e.dom);
        for (const Id& mu : a.multi.params) {
            const Transition& f = a.multi.edge_trans.at({e.id, mu});
            for (const auto& [s, img] : f.map) {
                auto ds = a.datation.find(s);
                if (ds == a.datation.end() || !dom_instants.count(ds->second)) continue;
                auto step = a.clock.dyn.edge_trans.at(e.id).map.find(ds->second);
                if (step == a.clock.dyn.edge_trans.at(e.id).map.end() ||
                    step->second.size() != 1)
                    continue;
                for (const Id& b : img) {
                    Id want = *step->second.begin();
                    auto db = a.datation.find(b);
                    if (db == a.datation.end() || db->second != want)
                        out.push_back("datation-law violation at (" + e.id + "," + mu + "," + s +
                                      "," + b + ")");
                }
            }
        }
    }
    return out;
}

Diagnostics validate_partition(const ParamEquivalence& q, const IdSet& params) {
    Diagnostics out;
    IdSet seen;
    for (const IdSet& cls : q) {
        if (cls.empty()) out.push_back("empty-class");
        for (const Id& p : cls) {
            if (!params.count(p)) out.push_back("class-member-outside-params " + p);
            if (!seen.insert(p).second) out.push_back("overlapping-classes-at " + p);
        }
    }
    for (const Id& p : params)
        if (!seen.count(p)) out.push_back("uncovered-param " + p);
    return out;
}

Id class_label(const IdSet& cls) {
    if (cls.empty()) throw error("class_label: empty class");
    return "~" + *cls.begin();
}

OpenDynamics parametric_quotient(const OpenDynamics& a, const ParamEquivalence& q) {
    Diagnostics d = validate_partition(q, a.multi.params);
    if (!d.empty()) throw error("parametric_quotient: " + d.front());
    OpenDynamics out;
    out.multi.motor = a.multi.motor;
    out.multi.state_sets = a.multi.state_sets;
    out.clock = a.clock;
    out.datation = a.datation;
    for (const IdSet& cls : q) {
        Id label = class_label(cls);
        out.multi.params.insert(label);
        for (const Edge& e : a.multi.motor.edges) {
            Transition merged{a.multi.state_sets.at(e.dom), a.multi.state_sets.at(e.cod), {}};
            for (const Id& s : merged.source) merged.map[s];
            for (const Id& mu : cls) {
                const Transition& f = a.multi.edge_trans.at({e.id, mu});
                for (const auto& [s, img] : f.map) merged.map[s].insert(img.begin(), img.end());
            }
            out.multi.edge_trans[{e.id, label}] = std::move(merged);
        }
    }
    return out;
}

std::vector<OpenRealization> enumerate_open_realizations(const OpenDynamics& a) {
    std::vector<OpenRealization> out;
    for (const Id& mu : a.multi.params) {
        for (Assignment& x : enumerate_scanned_realizations(scanned_slice(a, mu)))
            out.push_back({mu, std::move(x)});
    }
    return out;
}

bool passes_through(const OpenDynamics& a, const OpenRealization& r, const Id& s) {
    auto it = a.datation.find(s);
    if (it == a.datation.end()) throw error("passes_through: unknown state " + s);
    auto hit = r.assignment.find(it->second);
    return hit != r.assignment.end() && hit->second == s;
}

bool passes_then(const OpenDynamics& a, const OpenRealization& r, const Id& s1, const Id& s2) {
    if (!a.datation.count(s1) || !a.datation.count(s2))
        throw error("passes_then: unknown state");
    if (!succeeds(a.clock, a.datation.at(s1), a.datation.at(s2))) return false;
    return passes_through(a, r, s1) && passes_through(a, r, s2);
}

Diagnostics validate_multi_dynamorphism(const MultiDynamorphism& m, const MultiDynamics& a,
                                        const MultiDynamics& b) {
    Diagnostics out;
    for (const Id& lambda : a.params) {
        auto it = m.param_map.find(lambda);
        if (it == m.param_map.end()) {
            out.push_back("unmapped-param " + lambda);
            continue;
        }
        if (!b.params.count(it->second)) {
            out.push_back("param-image-outside-target " + lambda + " -> " + it->second);
            continue;
        }
        Dynamorphism part{m.graph_part, m.trans_part};
        for (const auto& diag : validate_dynamorphism(part, slice(a, lambda), slice(b, it->second)))
            out.push_back("param " + lambda + ": " + diag);
    }
    return out;
}

}  // namespace odyn
