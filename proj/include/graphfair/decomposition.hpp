#ifndef GRAPHFAIR_DECOMPOSITION_HPP
#define GRAPHFAIR_DECOMPOSITION_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "graphfair/graph.hpp"
#include "graphfair/instance.hpp"
#include "graphfair/utility.hpp"

namespace graphfair {

// Blocks (maximal biconnected subgraphs), cut vertices and the bipartite
// block/cut-vertex tree. Block ids follow discovery order.
struct BlockCutTree {
    std::vector<Bundle> blocks;
    Bundle cut_vertices;
    // (block id, cut vertex), sorted.
    std::vector<std::pair<std::size_t, Vertex>> tree_edges;

    bool is_cut(Vertex v) const;
    // Cut vertices of a block, ascending.
    Bundle cuts_of(std::size_t block) const;
    bool incident(std::size_t block, Vertex cut) const;
};

BlockCutTree block_cut_tree(const ItemGraph& graph);

// Connected with no cut vertex. A single vertex or a single edge counts.
bool is_biconnected(const ItemGraph& graph);

struct BipolarOrdering {
    std::vector<Vertex> sequence;
    Vertex source = 0;
    Vertex sink = 0;
};

// Throws PreconditionViolated("not biconnected") when the graph has a cut vertex.
BipolarOrdering bipolar_ordering(const ItemGraph& graph, Vertex source, Vertex sink);

// Every prefix and suffix connected, sequence a permutation of the vertices,
// endpoints as given.
bool is_bipolar_ordering(const ItemGraph& graph, const std::vector<Vertex>& sequence, Vertex source, Vertex sink);

struct SidePartition {
    std::size_t block = 0;
    Vertex cut = 0;
    // X(B,c): the block's side without c. Y(B,c): everything else, with c.
    Bundle x_side;
    Bundle y_side;
};

SidePartition side_partition(const ItemGraph& graph, const BlockCutTree& tree, std::size_t block, Vertex cut);

// G[B] where every cut vertex c of B carries all of Y(B,c).
struct MergedGraph {
    ItemGraph graph;
    UtilityFunction utility;
    // origin[i]: original vertices merged into vertex i (sorted).
    std::vector<Bundle> origin;

    Bundle lift(const Bundle& merged_bundle) const;
};

MergedGraph merge_exterior(const ItemGraph& graph, const UtilityFunction& u, const BlockCutTree& tree,
                           std::size_t block);

}  // namespace graphfair

#endif
