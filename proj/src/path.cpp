#include "graphfair/path.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>

namespace graphfair {

namespace {

void require_additive_path(const UtilityFunction& u, std::size_t m) {
    if (!u.is_additive()) {
        throw PreconditionViolated("the three-agent path routine needs additive utilities");
    }
    if (u.n_vertices() != m) {
        throw InvalidInput("utility covers " + std::to_string(u.n_vertices()) + " items, path has " +
                           std::to_string(m));
    }
}

// Nearest nonempty part strictly left (dir=-1) or right (dir=+1) of `index`.
std::optional<std::size_t> neighbour_part(const std::array<PathInterval, 3>& parts, std::size_t index, int dir) {
    for (int k = static_cast<int>(index) + dir; k >= 0 && k < 3; k += dir) {
        if (!parts[static_cast<std::size_t>(k)].empty()) {
            return static_cast<std::size_t>(k);
        }
    }
    return std::nullopt;
}

void leximin_cuts(const PathPrefix& p, std::size_t k, std::vector<std::size_t>& cuts, std::vector<std::size_t>& best,
                  std::vector<Value>& best_profile, bool& found) {
    const std::size_t m = p.items();
    if (cuts.size() + 1 == k) {
        std::vector<Value> profile;
        std::size_t prev = 0;
        for (std::size_t c : cuts) {
            profile.push_back(p.of(prev, c));
            prev = c;
        }
        profile.push_back(p.of(prev, m));
        std::sort(profile.begin(), profile.end());
        if (!found || profile > best_profile) {
            found = true;
            best = cuts;
            best_profile = std::move(profile);
        }
        return;
    }
    const std::size_t from = cuts.empty() ? 0 : cuts.back();
    for (std::size_t c = from; c <= m; ++c) {
        cuts.push_back(c);
        leximin_cuts(p, k, cuts, best, best_profile, found);
        cuts.pop_back();
    }
}

std::array<std::array<bool, 3>, 3> goodness(const std::array<PathPrefix, 3>& prefixes, const CutPair& cuts) {
    std::array<std::array<bool, 3>, 3> good{};
    for (std::size_t a = 0; a < 3; ++a) {
        for (std::size_t part = 0; part < 3; ++part) {
            good[a][part] = is_good_bundle(prefixes[a], cuts, part);
        }
    }
    return good;
}

// First agent->part assignment (lexicographic over part indices) giving every
// agent a good part.
std::optional<std::array<std::size_t, 3>> assign_good(const std::array<std::array<bool, 3>, 3>& good) {
    std::array<std::size_t, 3> part_of{0, 1, 2};
    do {
        if (good[0][part_of[0]] && good[1][part_of[1]] && good[2][part_of[2]]) {
            return part_of;
        }
    } while (std::next_permutation(part_of.begin(), part_of.end()));
    return std::nullopt;
}

using IntervalValue = std::function<Value(std::size_t, std::size_t)>;

Value interval_pmms(const IntervalValue& value, std::size_t lo, std::size_t hi) {
    Value best = 0;
    for (std::size_t c = lo; c <= hi; ++c) {
        best = std::max(best, std::min(value(lo, c), value(c, hi)));
    }
    return best;
}

MovingKnifeResult moving_knife_core(const IntervalValue& value, std::size_t m, std::size_t n,
                                    const std::vector<Vertex>& order) {
    if (n == 0) {
        throw InvalidInput("need at least one agent");
    }
    if (m < n) {
        throw PreconditionViolated("moving knife needs at least as many items as agents");
    }
    // Bundle i is [bound[i], bound[i+1]).
    std::vector<std::size_t> bound(n + 1);
    std::iota(bound.begin(), bound.end() - 1, 0);
    bound[n] = m;
    const std::size_t limit = (n - 1) * m;
    std::size_t transfers = 0;
    while (true) {
        std::optional<std::size_t> violating;
        for (std::size_t i = 0; i + 1 < n; ++i) {
            const Value share = interval_pmms(value, bound[i], bound[i + 2]);
            if (value(bound[i + 1], bound[i + 2]) < share) {
                throw std::logic_error("moving knife: right-hand bundle fell below its pairwise share");
            }
            if (!violating && value(bound[i], bound[i + 1]) < share) {
                violating = i;
            }
        }
        if (!violating) {
            break;
        }
        const std::size_t i = *violating;
        const Value share = interval_pmms(value, bound[i], bound[i + 2]);
        while (value(bound[i], bound[i + 1]) < share) {
            if (bound[i + 1] + 1 >= bound[i + 2]) {
                throw std::logic_error("moving knife: transfer would empty a bundle");
            }
            ++bound[i + 1];
            if (++transfers > limit) {
                throw std::logic_error("moving knife: transfer limit exceeded");
            }
        }
    }
    std::vector<Bundle> bundles(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = bound[i]; k < bound[i + 1]; ++k) {
            bundles[i].push_back(order[k]);
        }
    }
    return {Allocation(std::move(bundles)), transfers};
}

IntervalValue interval_value(const UtilityFunction& u, const std::vector<Vertex>& order) {
    if (u.is_additive()) {
        std::vector<Value> prefix(order.size() + 1, 0);
        for (std::size_t k = 0; k < order.size(); ++k) {
            prefix[k + 1] = prefix[k] + u.item(order[k]);
        }
        return [prefix](std::size_t lo, std::size_t hi) { return prefix[hi] - prefix[lo]; };
    }
    if (!u.is_monotone()) {
        throw PreconditionViolated("moving knife needs a monotone utility");
    }
    return [&u, order](std::size_t lo, std::size_t hi) {
        VertexMask mask = 0;
        for (std::size_t k = lo; k < hi; ++k) {
            mask |= bit(order[k]);
        }
        return u.of_mask(mask);
    };
}

}  // namespace

PathInterval::PathInterval(std::size_t l, std::size_t h) : lo(l), hi(h) {
    if (l > h) {
        throw InvalidInput("interval with lo > hi");
    }
}

Bundle PathInterval::items() const {
    Bundle out(hi - lo);
    std::iota(out.begin(), out.end(), static_cast<Vertex>(lo));
    return out;
}

CutPair::CutPair(std::size_t a, std::size_t b) : c1(a), c2(b) {
    if (a > b) {
        throw InvalidInput("cut pair with c1 > c2");
    }
}

std::array<PathInterval, 3> CutPair::parts(std::size_t m) const {
    if (c2 > m) {
        throw InvalidInput("cut beyond the end of the path");
    }
    return {PathInterval(0, c1), PathInterval(c1, c2), PathInterval(c2, m)};
}

PathPrefix::PathPrefix(const UtilityFunction& u, std::size_t m) : prefix_(m + 1, 0) {
    require_additive_path(u, m);
    for (std::size_t k = 0; k < m; ++k) {
        prefix_[k + 1] = prefix_[k] + u.item(static_cast<Vertex>(k));
    }
}

PathPrefix::PathPrefix(std::vector<Value> values) : prefix_(values.size() + 1, 0) {
    for (std::size_t k = 0; k < values.size(); ++k) {
        prefix_[k + 1] = prefix_[k] + values[k];
    }
}

std::size_t PathPrefix::largest_below(std::size_t x, std::size_t y) const {
    if (of(x, y) == 0) {
        return y;
    }
    const auto begin = prefix_.begin() + static_cast<std::ptrdiff_t>(x);
    const auto end = prefix_.begin() + static_cast<std::ptrdiff_t>(y) + 1;
    return static_cast<std::size_t>(std::lower_bound(begin, end, prefix_[y]) - prefix_.begin()) - 1;
}

std::size_t PathPrefix::smallest_below(std::size_t y, std::size_t z) const {
    if (of(y, z) == 0) {
        return y;
    }
    const auto begin = prefix_.begin() + static_cast<std::ptrdiff_t>(y);
    const auto end = prefix_.begin() + static_cast<std::ptrdiff_t>(z) + 1;
    return static_cast<std::size_t>(std::upper_bound(begin, end, prefix_[y]) - prefix_.begin());
}

Value PathPrefix::pmms(std::size_t x, std::size_t z) const {
    // Smallest c with left >= right; the optimum is at c or c-1.
    const auto begin = prefix_.begin() + static_cast<std::ptrdiff_t>(x);
    const auto end = prefix_.begin() + static_cast<std::ptrdiff_t>(z) + 1;
    const Value half_twice = prefix_[x] + prefix_[z];
    const auto it = std::lower_bound(begin, end, 0, [&](Value pc, int) { return 2 * pc < half_twice; });
    const auto c = static_cast<std::size_t>(it - prefix_.begin());
    Value best = std::min(of(x, c), of(c, z));
    if (c > x) {
        best = std::max(best, std::min(of(x, c - 1), of(c - 1, z)));
    }
    return best;
}

bool is_pmms_split(const PathPrefix& p, std::size_t x, std::size_t y, std::size_t z) {
    if (x > y || y > z || z > p.items()) {
        throw InvalidInput("split positions must satisfy x <= y <= z <= m");
    }
    const Value left = p.of(x, y);
    const Value right = p.of(y, z);
    const bool first = left == 0 || p.of(x, p.largest_below(x, y)) <= right;
    const bool second = right == 0 || p.of(p.smallest_below(y, z), z) <= left;
    return first && second;
}

std::vector<std::size_t> path_pmms_partition(const UtilityFunction& u, std::size_t m, std::size_t k) {
    if (k == 0) {
        throw InvalidInput("part count must be at least 1");
    }
    const PathPrefix p(u, m);
    std::vector<std::size_t> cuts;
    std::vector<std::size_t> best;
    std::vector<Value> best_profile;
    bool found = false;
    leximin_cuts(p, k, cuts, best, best_profile, found);
    return best;
}

CutPair path_pmms_cuts3(const UtilityFunction& u, std::size_t m) {
    const auto cuts = path_pmms_partition(u, m, 3);
    return {cuts[0], cuts[1]};
}

bool is_good_bundle(const PathPrefix& p, const CutPair& cuts, std::size_t part_index) {
    if (part_index > 2) {
        throw InvalidInput("part index must be 0, 1 or 2");
    }
    const auto parts = cuts.parts(p.items());
    const auto& b = parts[part_index];
    if (b.empty()) {
        return std::all_of(parts.begin(), parts.end(), [&](const PathInterval& other) { return p.pmms(other.lo, other.hi) == 0; });
    }
    if (auto left = neighbour_part(parts, part_index, -1)) {
        const auto& n = parts[*left];
        if (p.of(b) < p.of(n) && !is_pmms_split(p, n.lo, b.lo, b.hi)) {
            return false;
        }
    }
    if (auto right = neighbour_part(parts, part_index, +1)) {
        const auto& n = parts[*right];
        if (p.of(b) < p.of(n) && !is_pmms_split(p, b.lo, b.hi, n.hi)) {
            return false;
        }
    }
    return true;
}

bool is_good_bundle(const UtilityFunction& u, const CutPair& cuts, std::size_t part_index, std::size_t m) {
    return is_good_bundle(PathPrefix(u, m), cuts, part_index);
}

PathResult three_agents_path_pmms(const UtilityFunction& u1, const UtilityFunction& u2, const UtilityFunction& u3,
                                  std::size_t m) {
    const std::array<const UtilityFunction*, 3> us{&u1, &u2, &u3};
    const std::array<PathPrefix, 3> prefixes{PathPrefix(u1, m), PathPrefix(u2, m), PathPrefix(u3, m)};
    PathResult result;
    for (std::size_t a = 0; a < 3; ++a) {
        result.agent_cuts[a] = path_pmms_cuts3(*us[a], m);
    }
    // r[0], r[1], r[2] play agents 1, 2, 3 of the case analysis.
    std::array<std::size_t, 3> r{0, 1, 2};
    std::stable_sort(r.begin(), r.end(),
                     [&](std::size_t a, std::size_t b) { return result.agent_cuts[a].c1 < result.agent_cuts[b].c1; });
    const CutPair& p1 = result.agent_cuts[r[0]];
    const CutPair& p2 = result.agent_cuts[r[1]];
    const CutPair& p3 = result.agent_cuts[r[2]];

    CutPair chosen;
    if (p2.c2 <= p3.c1) {
        result.case_tag = 1;
        chosen = p2;
    } else if (p1.c2 <= p3.c1 && p3.c2 <= p2.c2) {
        result.case_tag = 2;
        chosen = p3;
    } else if (p1.c2 <= p3.c1 && p2.c2 <= p3.c2 && p1.c2 <= p2.c1) {
        result.case_tag = 3;
        chosen = p2;
    } else if (p1.c2 <= p2.c2 && p2.c2 <= p3.c2) {
        result.case_tag = 4;
        chosen = p2;
        const auto& first = prefixes[r[0]];
        if (!is_good_bundle(first, p2, 0)) {
            bool found = false;
            for (std::size_t z = p2.c1 + 1; z < p2.c2 && !found; ++z) {
                const CutPair candidate(z, p2.c2);
                if (is_good_bundle(first, candidate, 0) && is_good_bundle(first, candidate, 1)) {
                    chosen = candidate;
                    result.refinement = 'a';
                    found = true;
                }
            }
            for (std::size_t z = p2.c1 + 1; z <= p2.c2 && !found; ++z) {
                const CutPair candidate(p2.c1, z);
                if (is_good_bundle(first, candidate, 1) && is_good_bundle(first, candidate, 2)) {
                    chosen = candidate;
                    result.refinement = 'b';
                    found = true;
                }
            }
            if (!found) {
                result.refinement = 0;
            }
        }
    } else if (p1.c2 <= p3.c2 && p3.c2 <= p2.c2) {
        result.case_tag = 5;
        chosen = p3;
    } else if (p3.c2 <= p1.c2 && p3.c2 <= p2.c2) {
        result.case_tag = 6;
        chosen = p3;
    } else {
        result.case_tag = 7;
        chosen = p2;
    }
    auto part_of = assign_good(goodness(prefixes, chosen));
    for (std::size_t c1 = 0; c1 <= m && !part_of; ++c1) {
        for (std::size_t c2 = c1; c2 <= m && !part_of; ++c2) {
            part_of = assign_good(goodness(prefixes, CutPair(c1, c2)));
            if (part_of) {
                chosen = CutPair(c1, c2);
                result.scanned = true;
            }
        }
    }
    if (!part_of) {
        throw std::logic_error("case " + std::to_string(result.case_tag) + ": no cut pair admits good bundles");
    }
    result.final_cuts = chosen;
    const auto parts = chosen.parts(m);
    std::vector<Bundle> bundles(3);
    for (std::size_t a = 0; a < 3; ++a) {
        bundles[a] = parts[(*part_of)[a]].items();
    }
    result.allocation = Allocation(std::move(bundles));
    return result;
}

PathResult three_agents_path_pmms(const Instance& instance) {
    validate_instance(instance);
    if (instance.n_agents() != 3) {
        throw PreconditionViolated("the path algorithm is for exactly three agents");
    }
    if (!instance.graph.is_path()) {
        throw PreconditionViolated("graph is not a path");
    }
    const auto order = instance.graph.path_order();
    const std::size_t m = order.size();
    std::array<UtilityFunction, 3> us;
    for (std::size_t a = 0; a < 3; ++a) {
        if (!instance.agents[a].is_additive()) {
            throw PreconditionViolated("the three-agent path routine needs additive utilities");
        }
        us[a] = instance.agents[a].restricted(order);
    }
    auto result = three_agents_path_pmms(us[0], us[1], us[2], m);
    std::vector<Bundle> bundles;
    for (const auto& b : result.allocation.bundles) {
        Bundle mapped;
        for (Vertex k : b) {
            mapped.push_back(order[static_cast<std::size_t>(k)]);
        }
        bundles.push_back(std::move(mapped));
    }
    result.allocation = Allocation(std::move(bundles));
    return result;
}

MovingKnifeResult moving_knife_identical(const UtilityFunction& u, std::size_t m, std::size_t n) {
    if (u.n_vertices() != m) {
        throw InvalidInput("utility does not cover the path");
    }
    std::vector<Vertex> order(m);
    std::iota(order.begin(), order.end(), 0);
    return moving_knife_core(interval_value(u, order), m, n, order);
}

MovingKnifeResult moving_knife_identical(const Instance& instance) {
    validate_instance(instance);
    if (!instance.identical()) {
        throw PreconditionViolated("moving knife needs identical utilities");
    }
    if (!instance.graph.is_path()) {
        throw PreconditionViolated("graph is not a path");
    }
    const auto order = instance.graph.path_order();
    return moving_knife_core(interval_value(instance.agents[0], order), order.size(), instance.n_agents(), order);
}

}  // namespace graphfair
