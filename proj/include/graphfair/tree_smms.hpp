#ifndef GRAPHFAIR_TREE_SMMS_HPP
#define GRAPHFAIR_TREE_SMMS_HPP

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "graphfair/instance.hpp"

namespace graphfair {

// mu^n(V) on a tree: binary search on the threshold with greedy bottom-up cutting.
Value tree_mms_value(const ItemGraph& tree, const UtilityFunction& u, std::size_t n);

// For every vertex i and 0 <= j, l <= n: a partition (B_1..B_j, B_{j+1}) of the
// subtree of i where B_{j+1} is empty or holds i, every B_t (t <= j) reaches
// mms, at most l of them equal it, and u(B_{j+1}) is as large as possible.
class SubtreeTable {
public:
    // mms must be positive.
    SubtreeTable(const ItemGraph& tree, const UtilityFunction& u, std::size_t n, Value mms, Vertex root = 0);

    std::size_t agents() const { return n_; }
    Value mms() const { return mms_; }
    Vertex root() const { return root_; }
    const std::vector<Vertex>& children(Vertex v) const { return children_[static_cast<std::size_t>(v)]; }
    // Vertices of the subtree rooted at v, sorted.
    Bundle subtree(Vertex v) const;

    bool exists(Vertex i, std::size_t j, std::size_t l) const;
    // u(B_{j+1}); requires exists().
    Value value(Vertex i, std::size_t j, std::size_t l) const;
    // j closed bundles followed by B_{j+1} (possibly empty); requires exists().
    std::vector<Bundle> partition(Vertex i, std::size_t j, std::size_t l) const;

private:
    enum class Kind : unsigned char { none, open, closed_more, closed_exact };

    struct Cell {
        Value value = 0;
        Kind kind = Kind::none;
    };

    std::size_t index(Vertex i, std::size_t j, std::size_t l) const;
    void build_vertex(Vertex v);
    void rebuild(Vertex i, std::size_t j, std::size_t l, std::vector<Bundle>& closed, Bundle& open) const;
    void rebuild_open(Vertex i, std::size_t j, std::size_t l, std::vector<Bundle>& closed, Bundle& open) const;

    std::size_t n_;
    Value mms_;
    Vertex root_;
    std::vector<Value> weight_;
    std::vector<std::vector<Vertex>> children_;
    std::vector<Vertex> post_order_;
    // Best B_{j+1} containing i (value of the child knapsack plus u(i)).
    std::vector<Value> open_;
    std::vector<Cell> full_;
    // choice_[i][k] holds, for the k-th child of i and each (j, l) reached after
    // k+1 children, the pair (j_h, l_h) taken by that child.
    std::vector<std::vector<std::vector<std::pair<std::size_t, std::size_t>>>> choice_;
};

struct SmmsResult {
    Allocation allocation;
    Value mms = 0;
    std::size_t losers = 0;
};

std::size_t count_losers(const UtilityFunction& u, const Allocation& alloc, Value mms);

SmmsResult smms_tree(const ItemGraph& tree, const UtilityFunction& u, std::size_t n);

using SmmsSolver = std::function<SmmsResult(const ItemGraph&, const UtilityFunction&, std::size_t)>;

// Recursive freeze-the-losers procedure on any connected graph, given an SMMS
// solver for the graphs it meets.
Allocation pmms_smms(const ItemGraph& graph, const UtilityFunction& u, std::size_t n, const SmmsSolver& solver);

Allocation pmms_smms_tree(const ItemGraph& tree, const UtilityFunction& u, std::size_t n);

bool is_unicyclic(const ItemGraph& graph);
// Edges on the unique cycle, sorted.
std::vector<Edge> cycle_edges(const ItemGraph& graph);

SmmsResult smms_unicyclic(const ItemGraph& graph, const UtilityFunction& u, std::size_t n);

// Trees and unicyclic graphs.
SmmsResult smms_tree_or_unicyclic(const ItemGraph& graph, const UtilityFunction& u, std::size_t n);
Allocation pmms_smms_unicyclic(const ItemGraph& graph, const UtilityFunction& u, std::size_t n);

}  // namespace graphfair

#endif
