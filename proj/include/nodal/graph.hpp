#pragma once

#include <string>
#include <utility>
#include <vector>

namespace nodal {

// An edge of a dual graph. Endpoints are dense vertex indices; loops (u == v)
// and parallel edges are allowed. The id is stable across contraction and
// deletion, so derived graphs can refer back to edges of their source.
struct Edge {
    int id;
    int u;
    int v;
};

// Weighted multigraph with loops: the dual graph of a nodal curve. Vertices
// carry a nonnegative weight (the geometric genus of the component).
// Immutable after construction; all operations below are pure.
class DualGraph {
public:
    DualGraph() = default;

    // weights[i] is the weight of vertex i; edges are (u, v) endpoint pairs.
    // Vertex ids default to 0..n-1 and edge ids to 0..m-1.
    DualGraph(std::vector<int> weights, const std::vector<std::pair<int, int>>& edges);

    // Explicit ids, as read from graph files. Ids must be distinct.
    DualGraph(std::vector<int> vertex_ids, std::vector<int> weights, std::vector<Edge> edges);

    int vertex_count() const { return static_cast<int>(weights_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    int weight(int v) const { return weights_[v]; }
    int vertex_id(int v) const { return vertex_ids_[v]; }
    const Edge& edge(int i) const { return edges_[i]; }
    const std::vector<Edge>& edges() const { return edges_; }

    // Dense index of the vertex/edge with the given id; throws if unknown.
    int vertex_by_id(int id) const;
    int edge_by_id(int id) const;

    // Incident edge positions at v, with loops listed twice.
    const std::vector<int>& incident(int v) const { return incident_[v]; }

    // Number of incident edge endpoints; loops count twice.
    int valence(int v) const;

    int component(int v) const { return component_[v]; }
    int component_count() const { return component_count_; }
    bool is_connected() const { return component_count_ <= 1; }

    // 1 - |V| + |E| + sum of weights, summed per connected component.
    long long genus() const;

private:
    void validate_and_index();

    std::vector<int> weights_;
    std::vector<int> vertex_ids_;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> incident_;
    std::vector<int> component_;
    int component_count_ = 0;
};

// val(v) >= 2 on every weight-0 vertex.
bool is_semistable(const DualGraph& g);

// val(v) >= 3 on weight-0 vertices and val(v) >= 1 on weight-1 vertices.
bool is_stable(const DualGraph& g);

// Edge ids whose removal increases the number of connected components,
// by low-link depth-first traversal. Loops are never bridges.
std::vector<int> bridges(const DualGraph& g);

// Contraction of all non-bridge edges: the forest of 2-edge-connected
// components. Forest edges keep the ids of the bridges they came from.
struct BridgeForest {
    DualGraph forest;
    std::vector<int> component_of;          // source vertex -> forest vertex
    std::vector<std::vector<int>> members;  // forest vertex -> source vertices
};

BridgeForest bridge_forest(const DualGraph& g);

// Leaves of the forest; a single-vertex tree counts as 2, components sum.
int leaf_count(const BridgeForest& f);

struct InducedSubgraph {
    DualGraph graph;
    int boundary_edges;          // edges with exactly one endpoint inside
    std::vector<int> vertex_of;  // sub vertex -> source vertex
    std::vector<int> edge_of;    // sub edge position -> source edge position
};

// Subgraph induced by the nonempty vertex set S (dense indices), together
// with the count of edges crossing its boundary. Ids are preserved.
InducedSubgraph induced_subgraph(const DualGraph& g, const std::vector<int>& S);

struct StabilizeResult {
    DualGraph graph;
    std::vector<int> contracted_edge_ids;
    std::vector<int> vertex_image;  // source vertex -> vertex of the result
};

// Contracts edges at 2-valent weight-0 vertices, one at a time in ascending
// edge-id order, until the graph is stable. Requires a connected semistable
// graph of genus >= 2.
StabilizeResult stabilize(const DualGraph& g);

// Graph with the given edge removed; ids preserved.
DualGraph remove_edge(const DualGraph& g, int edge_pos);

// Canonical form of the labeled multigraph, usable as a key for isomorphism
// deduplication of small graphs (minimizes over all vertex permutations).
std::string canonical_key(const DualGraph& g);

}  // namespace nodal
