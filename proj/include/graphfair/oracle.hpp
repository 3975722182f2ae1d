#ifndef GRAPHFAIR_ORACLE_HPP
#define GRAPHFAIR_ORACLE_HPP

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "graphfair/instance.hpp"

namespace graphfair {

// Largest bundle the partition enumerator accepts.
inline constexpr std::size_t kMaxEnumerationVertices = 18;
// Limits for searches over whole allocations.
inline constexpr std::size_t kMaxBruteVertices = 12;
inline constexpr std::size_t kMaxBruteAgents = 4;

using PartitionVisitor = std::function<void(std::span<const VertexMask>)>;

// Calls visit once per unordered partition of `mask` into exactly k nonempty
// parts, each connected in the induced subgraph. The part holding the lowest
// vertex of the remainder comes first.
void for_each_connected_partition(const ItemGraph& graph, VertexMask mask, std::size_t k,
                                  const PartitionVisitor& visit);

// Partitions of G[bundle] into k connected parts. With allow_empty, partitions
// with fewer nonempty parts are padded with empty parts (placed first).
std::vector<std::vector<Bundle>> enumerate_connected_partitions(const ItemGraph& graph, const Bundle& bundle,
                                                                std::size_t k, bool allow_empty);

// Max over connected k-partitions of the bundle of the minimum part value; 0
// if there is none.
Value mu_k(const UtilityFunction& u, const ItemGraph& graph, const Bundle& bundle, std::size_t k);
Value mu_k_mask(const UtilityFunction& u, const ItemGraph& graph, VertexMask mask, std::size_t k);
inline Value pmms_value(const UtilityFunction& u, const ItemGraph& graph, const Bundle& bundle) {
    return mu_k(u, graph, bundle, 2);
}

// Leximin-best connected n-partition that is PMMS for u whichever part the
// agent gets. Parts are returned sorted, empty parts first.
Allocation pmms_partition_of_agent(const UtilityFunction& u, const ItemGraph& graph, std::size_t n);

// True when every part of the partition is at least mu_2 of its union with
// every part it is compared to (adjacent, or either one empty).
bool is_pmms_partition_for(const UtilityFunction& u, const ItemGraph& graph, const Allocation& parts);

enum class CriterionKind { pmms, mms, ef1, efx };

struct FairnessCriterion {
    CriterionKind kind = CriterionKind::pmms;
    FairnessRatio ratio{1, 1};

    static FairnessCriterion parse(const std::string& kind, const FairnessRatio& ratio);
};

std::string to_string(CriterionKind kind);

struct Witness {
    std::size_t agent = 0;
    // -1 for MMS, which compares against no other agent.
    long long other = -1;
    // ratio.num * rhs - ratio.den * lhs, positive on failure.
    Value deficit = 0;
    Value lhs = 0;
    Value rhs = 0;
};

struct FairnessReport {
    bool pass = true;
    std::optional<Witness> witness;
};

// Witness is the first violation in ascending (agent, other) order.
FairnessReport check_fairness(const Instance& instance, const Allocation& alloc, const FairnessCriterion& criterion);

enum class Objective { mnw, leximin, smms, mms };

struct BruteResult {
    Objective objective = Objective::mnw;
    // Sorted by bundle lists.
    std::vector<Allocation> allocations;
    // MNW: positive agents and product of positive utilities.
    std::size_t positive_agents = 0;
    __int128 nash_product = 0;
    // Leximin: sorted utility vector of the optimum.
    std::vector<Value> profile;
    // SMMS / MMS: the shared MMS value (per-agent values for MMS).
    std::vector<Value> mms;
    // SMMS: agents at exactly MMS.
    std::size_t losers = 0;
};

void for_each_connected_allocation(const ItemGraph& graph, std::size_t n,
                                   const std::function<void(const std::vector<VertexMask>&)>& visit);

BruteResult brute_optimal(const Instance& instance, Objective objective, bool all = true);

bool is_pareto_optimal(const Instance& instance, const Allocation& alloc);

std::string int128_to_string(__int128 x);

}  // namespace graphfair

#endif
