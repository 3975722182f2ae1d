#include "graphfair/oracle.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <map>

namespace graphfair {

namespace {

Vertex lowest(VertexMask mask) { return static_cast<Vertex>(std::countr_zero(mask)); }

std::size_t component_count(const ItemGraph& graph, VertexMask mask) {
    std::size_t count = 0;
    while (mask != 0) {
        VertexMask reached = mask & (~mask + 1);
        VertexMask frontier = reached;
        while (frontier != 0) {
            VertexMask next = 0;
            for (VertexMask f = frontier; f != 0; f &= f - 1) {
                next |= graph.neighbor_mask(lowest(f));
            }
            next &= mask & ~reached;
            reached |= next;
            frontier = next;
        }
        mask &= ~reached;
        ++count;
    }
    return count;
}

// Every connected S with seed ⊆ S ⊆ within, grown by include/exclude decisions
// so each set is produced once.
template <typename Fn>
void grow_connected(const ItemGraph& graph, VertexMask within, VertexMask set, VertexMask ext, VertexMask excluded,
                    Fn& fn) {
    fn(set);
    while (ext != 0) {
        const Vertex w = lowest(ext);
        ext &= ext - 1;
        const VertexMask added = graph.neighbor_mask(w) & within & ~set & ~excluded & ~ext & ~bit(w);
        grow_connected(graph, within, set | bit(w), ext | added, excluded, fn);
        excluded |= bit(w);
    }
}

template <typename Fn>
void for_each_connected_subset_with(const ItemGraph& graph, VertexMask within, Vertex seed, Fn& fn) {
    grow_connected(graph, within, bit(seed), graph.neighbor_mask(seed) & within, bit(seed), fn);
}

void check_mask_guard(const ItemGraph& graph, VertexMask mask) {
    if (graph.size() > 64) {
        throw SizeGuardExceeded("graph has more than 64 vertices");
    }
    if (static_cast<std::size_t>(std::popcount(mask)) > kMaxEnumerationVertices) {
        throw SizeGuardExceeded("bundle of " + std::to_string(std::popcount(mask)) +
                                " vertices exceeds the enumeration limit of " +
                                std::to_string(kMaxEnumerationVertices));
    }
}

void check_brute_guard(const Instance& instance) {
    if (instance.graph.size() > kMaxBruteVertices || instance.n_agents() > kMaxBruteAgents) {
        throw SizeGuardExceeded("exhaustive search is limited to " + std::to_string(kMaxBruteVertices) +
                                " vertices and " + std::to_string(kMaxBruteAgents) + " agents");
    }
}

void partitions_rec(const ItemGraph& graph, VertexMask rest, std::size_t k, std::vector<VertexMask>& parts,
                    const PartitionVisitor& visit) {
    if (k == 1) {
        if (is_connected_mask(graph, rest)) {
            parts.push_back(rest);
            visit(parts);
            parts.pop_back();
        }
        return;
    }
    if (static_cast<std::size_t>(std::popcount(rest)) < k) {
        return;
    }
    auto on_part = [&](VertexMask part) {
        const VertexMask remainder = rest & ~part;
        if (remainder == 0 || static_cast<std::size_t>(std::popcount(remainder)) < k - 1 ||
            component_count(graph, remainder) > k - 1) {
            return;
        }
        parts.push_back(part);
        partitions_rec(graph, remainder, k - 1, parts, visit);
        parts.pop_back();
    };
    for_each_connected_subset_with(graph, rest, lowest(rest), on_part);
}

struct MuSearch {
    const UtilityFunction& u;
    const ItemGraph& graph;
    Value best = 0;

    void run(VertexMask rest, std::size_t k, Value current) {
        if (current <= best) {
            return;
        }
        if (u.is_monotone() && u.of_mask(rest) <= best) {
            return;
        }
        if (k == 1) {
            if (is_connected_mask(graph, rest)) {
                best = std::max(best, std::min(current, u.of_mask(rest)));
            }
            return;
        }
        if (static_cast<std::size_t>(std::popcount(rest)) < k) {
            return;
        }
        auto on_part = [&](VertexMask part) {
            const Value value = u.of_mask(part);
            if (value <= best) {
                return;
            }
            const VertexMask remainder = rest & ~part;
            if (remainder == 0 || static_cast<std::size_t>(std::popcount(remainder)) < k - 1 ||
                component_count(graph, remainder) > k - 1) {
                return;
            }
            run(remainder, k - 1, std::min(current, value));
        };
        for_each_connected_subset_with(graph, rest, lowest(rest), on_part);
    }
};

std::vector<Value> sorted_profile(const Instance& instance, const std::vector<VertexMask>& bundles) {
    std::vector<Value> out(bundles.size());
    for (std::size_t i = 0; i < bundles.size(); ++i) {
        out[i] = instance.agents[i].of_mask(bundles[i]);
    }
    std::sort(out.begin(), out.end());
    return out;
}

Allocation to_allocation(const std::vector<VertexMask>& bundles) {
    std::vector<Bundle> out;
    out.reserve(bundles.size());
    for (VertexMask m : bundles) {
        out.push_back(from_mask(m));
    }
    return Allocation(std::move(out));
}

// Memoized mu_2 per agent and union.
class PairwiseCache {
public:
    PairwiseCache(const ItemGraph& graph) : graph_(graph) {}

    Value pmms(const UtilityFunction& u, std::size_t agent, VertexMask mask) {
        auto key = std::make_pair(agent, mask);
        if (auto it = cache_.find(key); it != cache_.end()) {
            return it->second;
        }
        const Value v = mu_k_mask(u, graph_, mask, 2);
        cache_.emplace(key, v);
        return v;
    }

private:
    const ItemGraph& graph_;
    std::map<std::pair<std::size_t, VertexMask>, Value> cache_;
};

}  // namespace

void for_each_connected_partition(const ItemGraph& graph, VertexMask mask, std::size_t k,
                                  const PartitionVisitor& visit) {
    if (k == 0) {
        throw InvalidInput("part count must be at least 1");
    }
    check_mask_guard(graph, mask);
    if (mask == 0) {
        return;
    }
    std::vector<VertexMask> parts;
    partitions_rec(graph, mask, k, parts, visit);
}

std::vector<std::vector<Bundle>> enumerate_connected_partitions(const ItemGraph& graph, const Bundle& bundle,
                                                                std::size_t k, bool allow_empty) {
    if (k == 0) {
        throw InvalidInput("part count must be at least 1");
    }
    const VertexMask mask = to_mask(bundle);
    check_mask_guard(graph, mask);
    std::vector<std::vector<Bundle>> out;
    const std::size_t lo = allow_empty ? 1 : k;
    if (mask == 0) {
        if (allow_empty) {
            out.emplace_back(k);
        }
        return out;
    }
    for (std::size_t parts = lo; parts <= k; ++parts) {
        for_each_connected_partition(graph, mask, parts, [&](std::span<const VertexMask> p) {
            std::vector<Bundle> row(k - parts);
            for (VertexMask m : p) {
                row.push_back(from_mask(m));
            }
            out.push_back(std::move(row));
        });
    }
    return out;
}

Value mu_k_mask(const UtilityFunction& u, const ItemGraph& graph, VertexMask mask, std::size_t k) {
    if (k == 0) {
        throw InvalidInput("part count must be at least 1");
    }
    check_mask_guard(graph, mask);
    if (k == 1) {
        return u.of_mask(mask);
    }
    MuSearch search{u, graph};
    if (mask != 0) {
        search.run(mask, k, std::numeric_limits<Value>::max());
    }
    return search.best;
}

Value mu_k(const UtilityFunction& u, const ItemGraph& graph, const Bundle& bundle, std::size_t k) {
    return mu_k_mask(u, graph, to_mask(bundle), k);
}

bool is_pmms_partition_for(const UtilityFunction& u, const ItemGraph& graph, const Allocation& parts) {
    const auto pairs = neighbors_under_allocation(graph, parts);
    for (auto [i, j] : pairs) {
        const VertexMask joint = to_mask(parts[i]) | to_mask(parts[j]);
        const Value share = mu_k_mask(u, graph, joint, 2);
        if (u.of(parts[i]) < share || u.of(parts[j]) < share) {
            return false;
        }
    }
    return true;
}

Allocation pmms_partition_of_agent(const UtilityFunction& u, const ItemGraph& graph, std::size_t n) {
    if (graph.size() > kMaxBruteVertices) {
        throw SizeGuardExceeded("PMMS partition search is limited to " + std::to_string(kMaxBruteVertices) +
                                " vertices");
    }
    if (n == 0) {
        throw InvalidInput("part count must be at least 1");
    }
    std::optional<Allocation> best;
    std::vector<Value> best_profile;
    for (auto& parts : enumerate_connected_partitions(graph, graph.all_vertices(), n, true)) {
        std::sort(parts.begin(), parts.end());
        Allocation candidate(std::move(parts));
        std::vector<Value> profile;
        for (const auto& b : candidate.bundles) {
            profile.push_back(u.of(b));
        }
        std::sort(profile.begin(), profile.end());
        if (best && (profile < best_profile || (profile == best_profile && !(candidate < *best)))) {
            continue;
        }
        if (!is_pmms_partition_for(u, graph, candidate)) {
            continue;
        }
        best = std::move(candidate);
        best_profile = std::move(profile);
    }
    if (!best) {
        throw PreconditionViolated("no PMMS partition exists for this utility");
    }
    return *best;
}

FairnessCriterion FairnessCriterion::parse(const std::string& kind, const FairnessRatio& ratio) {
    if (kind == "pmms") {
        return {CriterionKind::pmms, ratio};
    }
    if (kind == "mms") {
        return {CriterionKind::mms, ratio};
    }
    if (kind == "ef1") {
        return {CriterionKind::ef1, ratio};
    }
    if (kind == "efx") {
        return {CriterionKind::efx, FairnessRatio(1, 1)};
    }
    throw InvalidInput("unknown criterion '" + kind + "'");
}

std::string to_string(CriterionKind kind) {
    switch (kind) {
        case CriterionKind::pmms:
            return "pmms";
        case CriterionKind::mms:
            return "mms";
        case CriterionKind::ef1:
            return "ef1";
        case CriterionKind::efx:
            return "efx";
    }
    return "?";
}

FairnessReport check_fairness(const Instance& instance, const Allocation& alloc, const FairnessCriterion& criterion) {
    validate_allocation(instance.graph, alloc);
    if (alloc.agents() != instance.n_agents()) {
        throw InvalidInput("allocation has " + std::to_string(alloc.agents()) + " bundles for " +
                           std::to_string(instance.n_agents()) + " agents");
    }
    const auto& ratio = criterion.kind == CriterionKind::efx ? FairnessRatio(1, 1) : criterion.ratio;
    const std::size_t n = instance.n_agents();
    std::vector<VertexMask> masks;
    for (const auto& b : alloc.bundles) {
        masks.push_back(to_mask(b));
    }
    auto fail = [&](std::size_t i, long long j, Value lhs, Value rhs) {
        return FairnessReport{false, Witness{i, j, ratio.deficit(lhs, rhs), lhs, rhs}};
    };

    switch (criterion.kind) {
        case CriterionKind::pmms: {
            const auto pairs = neighbors_under_allocation(instance.graph, alloc);
            PairwiseCache cache(instance.graph);
            for (std::size_t i = 0; i < n; ++i) {
                for (std::size_t j = 0; j < n; ++j) {
                    if (i == j || !pairs.contains({std::min(i, j), std::max(i, j)})) {
                        continue;
                    }
                    // Empty bundles compare against everyone; nonempty ones only against neighbours.
                    if (masks[i] != 0 && masks[j] == 0) {
                        continue;
                    }
                    const auto& u = instance.agents[i];
                    const Value lhs = u.of_mask(masks[i]);
                    const Value rhs = cache.pmms(u, i, masks[i] | masks[j]);
                    if (!ratio.satisfied(lhs, rhs)) {
                        return fail(i, static_cast<long long>(j), lhs, rhs);
                    }
                }
            }
            break;
        }
        case CriterionKind::mms: {
            for (std::size_t i = 0; i < n; ++i) {
                const auto& u = instance.agents[i];
                const Value lhs = u.of_mask(masks[i]);
                const Value rhs = mu_k_mask(u, instance.graph, instance.graph.all_mask(), n);
                if (!ratio.satisfied(lhs, rhs)) {
                    return fail(i, -1, lhs, rhs);
                }
            }
            break;
        }
        case CriterionKind::ef1:
        case CriterionKind::efx: {
            const bool any = criterion.kind == CriterionKind::ef1;
            for (std::size_t i = 0; i < n; ++i) {
                const auto& u = instance.agents[i];
                const Value lhs = u.of_mask(masks[i]);
                for (std::size_t j = 0; j < n; ++j) {
                    if (i == j || masks[j] == 0) {
                        continue;
                    }
                    // EF1 needs the best single removal, EFX the worst.
                    Value rhs = any ? std::numeric_limits<Value>::max() : std::numeric_limits<Value>::min();
                    for (VertexMask m = masks[j]; m != 0; m &= m - 1) {
                        const Value rest = u.of_mask(masks[j] & ~(m & (~m + 1)));
                        rhs = any ? std::min(rhs, rest) : std::max(rhs, rest);
                    }
                    if (!ratio.satisfied(lhs, rhs)) {
                        return fail(i, static_cast<long long>(j), lhs, rhs);
                    }
                }
            }
            break;
        }
    }
    return {};
}

void for_each_connected_allocation(const ItemGraph& graph, std::size_t n,
                                   const std::function<void(const std::vector<VertexMask>&)>& visit) {
    if (graph.size() > kMaxBruteVertices || n > kMaxBruteAgents) {
        throw SizeGuardExceeded("exhaustive search is limited to " + std::to_string(kMaxBruteVertices) +
                                " vertices and " + std::to_string(kMaxBruteAgents) + " agents");
    }
    if (n == 0) {
        throw InvalidInput("need at least one agent");
    }
    const VertexMask all = graph.all_mask();
    std::vector<VertexMask> bundles(n);
    for (std::size_t k = 1; k <= std::min(n, graph.size()); ++k) {
        for_each_connected_partition(graph, all, k, [&](std::span<const VertexMask> parts) {
            std::vector<int> slot(n, -1);
            for (std::size_t p = 0; p < k; ++p) {
                slot[n - k + p] = static_cast<int>(p);
            }
            do {
                for (std::size_t i = 0; i < n; ++i) {
                    bundles[i] = slot[i] < 0 ? 0 : parts[static_cast<std::size_t>(slot[i])];
                }
                visit(bundles);
            } while (std::next_permutation(slot.begin(), slot.end()));
        });
    }
}

BruteResult brute_optimal(const Instance& instance, Objective objective, bool all) {
    validate_instance(instance);
    check_brute_guard(instance);
    const std::size_t n = instance.n_agents();
    BruteResult result;
    result.objective = objective;
    std::vector<std::vector<VertexMask>> best;

    auto consider = [&](int cmp, const std::vector<VertexMask>& bundles) {
        if (cmp > 0) {
            best.clear();
        }
        if (cmp >= 0 && (all || best.empty())) {
            best.push_back(bundles);
        }
    };

    switch (objective) {
        case Objective::mnw: {
            for (const auto& u : instance.agents) {
                if (u.total() >= (Value{1} << 31)) {
                    throw SizeGuardExceeded("Nash products need every u(V) below 2^31");
                }
            }
            bool first = true;
            for_each_connected_allocation(instance.graph, n, [&](const std::vector<VertexMask>& bundles) {
                std::size_t positive = 0;
                __int128 product = 1;
                for (std::size_t i = 0; i < n; ++i) {
                    const Value v = instance.agents[i].of_mask(bundles[i]);
                    if (v > 0) {
                        ++positive;
                        product *= v;
                    }
                }
                int cmp = 1;
                if (!first) {
                    if (positive != result.positive_agents) {
                        cmp = positive > result.positive_agents ? 1 : -1;
                    } else {
                        cmp = product > result.nash_product ? 1 : (product == result.nash_product ? 0 : -1);
                    }
                }
                if (cmp > 0) {
                    result.positive_agents = positive;
                    result.nash_product = product;
                }
                first = false;
                consider(cmp, bundles);
            });
            if (result.positive_agents == 0) {
                result.nash_product = 0;
            }
            break;
        }
        case Objective::leximin: {
            bool first = true;
            for_each_connected_allocation(instance.graph, n, [&](const std::vector<VertexMask>& bundles) {
                auto profile = sorted_profile(instance, bundles);
                const int cmp = first ? 1 : (profile > result.profile ? 1 : (profile == result.profile ? 0 : -1));
                if (cmp > 0) {
                    result.profile = std::move(profile);
                }
                first = false;
                consider(cmp, bundles);
            });
            break;
        }
        case Objective::mms:
        case Objective::smms: {
            if (objective == Objective::smms && !instance.identical()) {
                throw PreconditionViolated("SMMS is defined for identical utilities only");
            }
            for (const auto& u : instance.agents) {
                result.mms.push_back(mu_k_mask(u, instance.graph, instance.graph.all_mask(), n));
            }
            bool first = true;
            for_each_connected_allocation(instance.graph, n, [&](const std::vector<VertexMask>& bundles) {
                std::size_t losers = 0;
                for (std::size_t i = 0; i < n; ++i) {
                    const Value v = instance.agents[i].of_mask(bundles[i]);
                    if (v < result.mms[i]) {
                        return;
                    }
                    losers += v == result.mms[i] ? 1 : 0;
                }
                int cmp = 0;
                if (objective == Objective::smms) {
                    cmp = first ? 1 : (losers < result.losers ? 1 : (losers == result.losers ? 0 : -1));
                    if (cmp > 0) {
                        result.losers = losers;
                    }
                } else if (first) {
                    cmp = 1;
                }
                first = false;
                consider(cmp, bundles);
            });
            break;
        }
    }

    for (const auto& b : best) {
        result.allocations.push_back(to_allocation(b));
    }
    std::sort(result.allocations.begin(), result.allocations.end());
    return result;
}

bool is_pareto_optimal(const Instance& instance, const Allocation& alloc) {
    validate_instance(instance);
    check_brute_guard(instance);
    validate_allocation(instance.graph, alloc);
    if (alloc.agents() != instance.n_agents()) {
        throw InvalidInput("allocation has " + std::to_string(alloc.agents()) + " bundles for " +
                           std::to_string(instance.n_agents()) + " agents");
    }
    const std::size_t n = instance.n_agents();
    std::vector<Value> current(n);
    for (std::size_t i = 0; i < n; ++i) {
        current[i] = instance.agents[i].of(alloc[i]);
    }
    bool dominated = false;
    for_each_connected_allocation(instance.graph, n, [&](const std::vector<VertexMask>& bundles) {
        if (dominated) {
            return;
        }
        bool strict = false;
        for (std::size_t i = 0; i < n; ++i) {
            const Value v = instance.agents[i].of_mask(bundles[i]);
            if (v < current[i]) {
                return;
            }
            strict = strict || v > current[i];
        }
        dominated = strict;
    });
    return !dominated;
}

std::string int128_to_string(__int128 x) {
    if (x == 0) {
        return "0";
    }
    const bool negative = x < 0;
    std::string out;
    while (x != 0) {
        const int digit = static_cast<int>(x % 10);
        out.push_back(static_cast<char>('0' + (negative ? -digit : digit)));
        x /= 10;
    }
    if (negative) {
        out.push_back('-');
    }
    std::reverse(out.begin(), out.end());
    return out;
}

}  // namespace graphfair
