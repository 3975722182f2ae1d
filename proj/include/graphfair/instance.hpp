#ifndef GRAPHFAIR_INSTANCE_HPP
#define GRAPHFAIR_INSTANCE_HPP

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "graphfair/graph.hpp"
#include "graphfair/utility.hpp"

namespace graphfair {

// Bundles indexed by agent. Bundles are kept sorted; empty bundles are allowed.
struct Allocation {
    std::vector<Bundle> bundles;

    Allocation() = default;
    explicit Allocation(std::vector<Bundle> b);

    std::size_t agents() const { return bundles.size(); }
    const Bundle& operator[](std::size_t i) const { return bundles[i]; }

    friend auto operator<=>(const Allocation&, const Allocation&) = default;
};

struct Instance {
    ItemGraph graph;
    std::vector<UtilityFunction> agents;

    std::size_t n_agents() const { return agents.size(); }
    // True when every agent has the same utility function.
    bool identical() const;
};

// Problems found by validate_instance, one message per violated invariant.
std::vector<std::string> instance_issues(const Instance& instance);
// Throws InvalidInput listing every issue.
void validate_instance(const Instance& instance);

// Throws InvalidInput unless the bundles are disjoint and cover every vertex.
void validate_allocation(const ItemGraph& graph, const Allocation& alloc);
bool is_connected_allocation(const ItemGraph& graph, const Allocation& alloc);

using AgentPair = std::pair<std::size_t, std::size_t>;

// Unordered agent pairs (i < j) that are adjacent under the allocation, plus
// every pair in which one of the bundles is empty.
std::set<AgentPair> neighbors_under_allocation(const ItemGraph& graph, const Allocation& alloc);

// Agent pairs whose bundles share an edge (no empty-bundle clause).
bool bundles_adjacent(const ItemGraph& graph, const Bundle& a, const Bundle& b);

Bundle merge_bundles(const Bundle& a, const Bundle& b);

}  // namespace graphfair

#endif
