#ifndef GRAPHFAIR_PATH_HPP
#define GRAPHFAIR_PATH_HPP

#include <array>
#include <cstddef>
#include <vector>

#include "graphfair/instance.hpp"

namespace graphfair {

// Items 0..m-1 along a path; cut positions are 0..m. [lo, hi) in item terms.
struct PathInterval {
    std::size_t lo = 0;
    std::size_t hi = 0;

    PathInterval() = default;
    PathInterval(std::size_t l, std::size_t h);
    bool empty() const { return lo == hi; }
    Bundle items() const;
    friend auto operator<=>(const PathInterval&, const PathInterval&) = default;
};

struct CutPair {
    std::size_t c1 = 0;
    std::size_t c2 = 0;

    CutPair() = default;
    CutPair(std::size_t a, std::size_t b);
    // The three parts [0,c1], [c1,c2], [c2,m].
    std::array<PathInterval, 3> parts(std::size_t m) const;
    friend auto operator<=>(const CutPair&, const CutPair&) = default;
};

// Prefix sums of an additive utility over the items in path order.
class PathPrefix {
public:
    PathPrefix(const UtilityFunction& u, std::size_t m);
    explicit PathPrefix(std::vector<Value> values);

    std::size_t items() const { return prefix_.size() - 1; }
    Value of(std::size_t lo, std::size_t hi) const { return prefix_[hi] - prefix_[lo]; }
    Value of(const PathInterval& b) const { return of(b.lo, b.hi); }
    // Largest a in [x, y) with u[x,a] < u[x,y]; y when u[x,y] = 0.
    std::size_t largest_below(std::size_t x, std::size_t y) const;
    // Smallest b in (y, z] with u[b,z] < u[y,z]; y when u[y,z] = 0.
    std::size_t smallest_below(std::size_t y, std::size_t z) const;
    // mu_2([x,z]) from the balance point of the prefix sums.
    Value pmms(std::size_t x, std::size_t z) const;

private:
    std::vector<Value> prefix_;
};

// Whether ([x,y],[y,z]) is a PMMS split of [x,z], by the two closed-form
// conditions on the largest/smallest strictly lighter cut.
bool is_pmms_split(const PathPrefix& p, std::size_t x, std::size_t y, std::size_t z);

// Leximin k-partition of the path, ties to the lexicographically smallest cuts.
// Returns the k-1 cuts.
std::vector<std::size_t> path_pmms_partition(const UtilityFunction& u, std::size_t m, std::size_t k);
CutPair path_pmms_cuts3(const UtilityFunction& u, std::size_t m);

// Whether the part (0, 1 or 2) of the partition caused by cuts is good for u:
// a nonempty part must reach mu_2 with each adjacent nonempty part, an empty
// part must reach mu_2 of every other part.
bool is_good_bundle(const UtilityFunction& u, const CutPair& cuts, std::size_t part_index, std::size_t m);
bool is_good_bundle(const PathPrefix& p, const CutPair& cuts, std::size_t part_index);

struct PathResult {
    // Bundles in agent order, items numbered along the path.
    Allocation allocation;
    // 1..7, and 'a'/'b' for the two refinements of case 4 (0 otherwise).
    int case_tag = 0;
    char refinement = 0;
    // Set when the case's partition had empty parts that left no good
    // assignment and the cut pair came from a scan of all pairs instead.
    bool scanned = false;
    // Per-agent PMMS partitions, in the input agent order.
    std::array<CutPair, 3> agent_cuts;
    CutPair final_cuts;
};

// Three agents with additive utilities over items 0..m-1 of a path.
PathResult three_agents_path_pmms(const UtilityFunction& u1, const UtilityFunction& u2, const UtilityFunction& u3,
                                  std::size_t m);

// Graph-level wrapper: relabels through ItemGraph::path_order.
PathResult three_agents_path_pmms(const Instance& instance);

struct MovingKnifeResult {
    Allocation allocation;
    std::size_t transfers = 0;
};

// n identical agents with monotone u on items 0..m-1 of a path; m >= n.
MovingKnifeResult moving_knife_identical(const UtilityFunction& u, std::size_t m, std::size_t n);

// Graph-level wrapper for a path graph and identical agents.
MovingKnifeResult moving_knife_identical(const Instance& instance);

}  // namespace graphfair

#endif
