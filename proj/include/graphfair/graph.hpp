#ifndef GRAPHFAIR_GRAPH_HPP
#define GRAPHFAIR_GRAPH_HPP

#include <span>
#include <utility>
#include <vector>

#include "graphfair/types.hpp"

namespace graphfair {

using Edge = std::pair<Vertex, Vertex>;

// Simple undirected graph on vertices 0..n-1. Immutable after construction.
class ItemGraph {
public:
    ItemGraph() = default;
    // Throws InvalidInput on self-loops, duplicate edges or out-of-range endpoints.
    ItemGraph(std::size_t n_vertices, std::span<const Edge> edges);
    ItemGraph(std::size_t n_vertices, std::initializer_list<Edge> edges)
        : ItemGraph(n_vertices, std::span<const Edge>(edges.begin(), edges.size())) {}

    static ItemGraph path(std::size_t n);
    static ItemGraph cycle(std::size_t n);
    // Vertex 0 is the centre.
    static ItemGraph star(std::size_t leaves);

    std::size_t size() const { return adjacency_.size(); }
    std::size_t edge_count() const { return edges_.size(); }
    // Edges as (a, b) with a < b, sorted.
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<Vertex>& neighbors(Vertex v) const { return adjacency_.at(static_cast<std::size_t>(v)); }
    bool adjacent(Vertex a, Vertex b) const;
    std::size_t degree(Vertex v) const { return neighbors(v).size(); }

    // Neighbourhood bitmask; only for graphs with at most 64 vertices.
    VertexMask neighbor_mask(Vertex v) const { return masks_.at(static_cast<std::size_t>(v)); }
    VertexMask all_mask() const;
    Bundle all_vertices() const;
    bool fits_mask() const { return size() <= 64; }

    // Induced subgraph on `bundle` (sorted); new vertex i is bundle[i].
    ItemGraph induced(const Bundle& bundle) const;

    ItemGraph without_edge(Edge e) const;

    bool is_tree() const;
    bool is_path() const;
    // Vertices of a path graph in order from the lower-index endpoint.
    std::vector<Vertex> path_order() const;

    friend bool operator==(const ItemGraph& a, const ItemGraph& b) {
        return a.size() == b.size() && a.edges_ == b.edges_;
    }

private:
    std::vector<std::vector<Vertex>> adjacency_;
    std::vector<Edge> edges_;
    std::vector<VertexMask> masks_;
};

// True iff G[bundle] is connected. The empty bundle is connected.
bool is_connected(const ItemGraph& graph, const Bundle& bundle);
bool is_connected(const ItemGraph& graph);
// Mask version; graph must fit a mask.
bool is_connected_mask(const ItemGraph& graph, VertexMask mask);

// Connected components of G[bundle], each sorted, ordered by smallest vertex.
std::vector<Bundle> components(const ItemGraph& graph, const Bundle& bundle);

}  // namespace graphfair

#endif
