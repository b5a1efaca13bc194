#include "odyn/transition.hpp"

namespace odyn {

const IdSet& Transition::at(const Id& a) const {
    auto it = map.find(a);
    if (it == map.end()) throw error("transition undefined on state " + a);
    return it->second;
}

Transition make_transition(IdSet source, IdSet target, std::map<Id, IdSet> map) {
    Transition f{std::move(source), std::move(target), std::move(map)};
    for (const Id& a : f.source) f.map.try_emplace(a);
    Diagnostics d = validate_transition(f);
    if (!d.empty()) throw error("make_transition: " + d.front());
    return f;
}

Transition identity_transition(const IdSet& states) {
    Transition f{states, states, {}};
    for (const Id& a : states) f.map[a] = {a};
    return f;
}

Diagnostics validate_transition(const Transition& f) {
    Diagnostics out;
    for (const Id& a : f.source) {
        if (!f.map.count(a)) out.push_back("map-not-total-at " + a);
    }
    for (const auto& [a, bs] : f.map) {
        if (!f.source.count(a)) out.push_back("map-outside-source " + a);
        for (const Id& b : bs) {
            if (!f.target.count(b)) out.push_back("image-outside-target " + a + " -> " + b);
        }
    }
    return out;
}

Transition compose(const Transition& g, const Transition& f) {
    if (f.target != g.source) throw error("compose: middle sets differ");
    Transition r{f.source, g.target, {}};
    for (const Id& a : f.source) {
        IdSet& out = r.map[a];
        for (const Id& b : f.at(a)) {
            const IdSet& gb = g.at(b);
            out.insert(gb.begin(), gb.end());
        }
    }
    return r;
}

IdSet image(const Transition& f) {
    IdSet out;
    for (const auto& [a, bs] : f.map) out.insert(bs.begin(), bs.end());
    return out;
}

Determinism classify(const Transition& f) {
    bool all_singleton = true;
    for (const Id& a : f.source) {
        std::size_t n = f.at(a).size();
        if (n > 1) return Determinism::general;
        if (n == 0) all_singleton = false;
    }
    return all_singleton ? Determinism::deterministic : Determinism::quasi_deterministic;
}

bool pointwise_subset(const Transition& f, const Transition& g) {
    if (f.source != g.source || f.target != g.target)
        throw error("pointwise_subset: mismatched contexts");
    for (const Id& a : f.source) {
        const IdSet& fa = f.at(a);
        const IdSet& ga = g.at(a);
        for (const Id& b : fa)
            if (!ga.count(b)) return false;
    }
    return true;
}

TransitionFamily compose_family(const TransitionFamily& g, const TransitionFamily& f) {
    if (f.params != g.params) throw error("compose_family: param sets differ");
    if (f.target != g.source) throw error("compose_family: middle sets differ");
    TransitionFamily r{f.params, f.source, g.target, {}};
    for (const Id& mu : f.params)
        r.per_param[mu] = compose(g.per_param.at(mu), f.per_param.at(mu));
    return r;
}

}  // namespace odyn
