#include "odyn/graph.hpp"

namespace odyn {

const Edge* Graph::find_edge(const Id& eid) const {
    for (const Edge& e : edges) {
        if (e.id == eid) return &e;
    }
    return nullptr;
}

const Edge& Graph::edge(const Id& eid) const {
    if (const Edge* e = find_edge(eid)) return *e;
    throw error("unknown edge id: " + eid);
}

Diagnostics validate_graph(const Graph& g) {
    Diagnostics out;
    IdSet seen;
    for (const Edge& e : g.edges) {
        if (!seen.insert(e.id).second)
            out.push_back("duplicate-edge-id " + e.id);
        if (!g.has_vertex(e.dom))
            out.push_back("dangling-endpoint " + e.id + " (dom " + e.dom + ")");
        if (!g.has_vertex(e.cod))
            out.push_back("dangling-endpoint " + e.id + " (cod " + e.cod + ")");
    }
    return out;
}

GraphMorphism identity_morphism(const Graph& g) {
    if (!validate_graph(g).empty()) throw error("identity_morphism: invalid graph");
    GraphMorphism m;
    m.source = g;
    m.target = g;
    for (const Id& v : g.vertices) m.vertex_map[v] = v;
    for (const Edge& e : g.edges) m.edge_map[e.id] = e.id;
    return m;
}

Diagnostics validate_graph_morphism(const GraphMorphism& m) {
    Diagnostics out;
    for (const Id& v : m.source.vertices) {
        auto it = m.vertex_map.find(v);
        if (it == m.vertex_map.end())
            out.push_back("unmapped-vertex " + v);
        else if (!m.target.has_vertex(it->second))
            out.push_back("vertex-image-outside-target " + v + " -> " + it->second);
    }
    for (const Edge& e : m.source.edges) {
        auto it = m.edge_map.find(e.id);
        if (it == m.edge_map.end()) {
            out.push_back("unmapped-edge " + e.id);
            continue;
        }
        const Edge* img = m.target.find_edge(it->second);
        if (!img) {
            out.push_back("edge-image-outside-target " + e.id + " -> " + it->second);
            continue;
        }
        auto dv = m.vertex_map.find(e.dom);
        auto cv = m.vertex_map.find(e.cod);
        if (dv == m.vertex_map.end() || cv == m.vertex_map.end()) continue;
        if (img->dom != dv->second || img->cod != cv->second)
            out.push_back("incoherent " + e.id);
    }
    return out;
}

GraphMorphism compose_morphisms(const GraphMorphism& g, const GraphMorphism& f) {
    GraphMorphism m;
    m.source = f.source;
    m.target = g.target;
    for (const auto& [v, w] : f.vertex_map) {
        auto it = g.vertex_map.find(w);
        if (it == g.vertex_map.end()) throw error("compose_morphisms: vertex " + w + " not in middle map");
        m.vertex_map[v] = it->second;
    }
    for (const auto& [e, a] : f.edge_map) {
        auto it = g.edge_map.find(a);
        if (it == g.edge_map.end()) throw error("compose_morphisms: edge " + a + " not in middle map");
        m.edge_map[e] = it->second;
    }
    return m;
}

}  // namespace odyn
