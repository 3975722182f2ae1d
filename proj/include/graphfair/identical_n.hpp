#ifndef GRAPHFAIR_IDENTICAL_N_HPP
#define GRAPHFAIR_IDENTICAL_N_HPP

#include <cstddef>
#include <vector>

#include "graphfair/instance.hpp"

namespace graphfair {

struct LocalImprovementResult {
    Allocation allocation;
    std::size_t iterations = 0;
    // Sum of squared bundle values, before the first step and after each one.
    std::vector<Value> potential;
};

// Leaf peeling of a BFS spanning tree from vertex 0: agents 0..n-2 each take the
// smallest-index leaf left, the last agent keeps the rest.
Allocation leaf_peeling_allocation(const ItemGraph& graph, std::size_t n);

Value potential(const UtilityFunction& u, const Allocation& alloc);

// Local improvement with the two-agent 3/4 split, for identical additive agents.
LocalImprovementResult local_improvement_34pmms(const ItemGraph& graph, const UtilityFunction& u, std::size_t n);
LocalImprovementResult local_improvement_34pmms(const ItemGraph& graph, const UtilityFunction& u,
                                                Allocation start);

}  // namespace graphfair

#endif
