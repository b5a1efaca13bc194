#pragma once

#include <optional>

#include "odyn/base.hpp"

namespace odyn {

struct Edge {
    Id id;
    Id dom;
    Id cod;

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Finite directed multigraph. Parallel edges and loops are allowed; the
// empty graph is allowed.
struct Graph {
    IdSet vertices;
    std::vector<Edge> edges;

    const Edge* find_edge(const Id& eid) const;
    const Edge& edge(const Id& eid) const;
    bool has_vertex(const Id& vid) const { return vertices.count(vid) != 0; }
};

// Structure-preserving map between graphs: total on vertices and edges,
// coherent with dom and cod.
struct GraphMorphism {
    std::map<Id, Id> vertex_map;
    std::map<Id, Id> edge_map;
    Graph source;
    Graph target;
};

Diagnostics validate_graph(const Graph& g);

GraphMorphism identity_morphism(const Graph& g);

Diagnostics validate_graph_morphism(const GraphMorphism& m);

// Composes two morphisms g after f; requires f.target and g.source to be
// the same graph.
GraphMorphism compose_morphisms(const GraphMorphism& g, const GraphMorphism& f);

}  // namespace odyn
