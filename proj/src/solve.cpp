#include "graphfair/solve.hpp"

#include <algorithm>
#include <numeric>

#include "graphfair/identical_n.hpp"
#include "graphfair/oracle.hpp"
#include "graphfair/path.hpp"
#include "graphfair/tree_smms.hpp"
#include "graphfair/two_agents.hpp"

namespace graphfair {

namespace {

bool all_additive(const Instance& in) {
    return std::all_of(in.agents.begin(), in.agents.end(), [](const UtilityFunction& u) { return u.is_additive(); });
}

void require_identical(const Instance& in, const std::string& algo) {
    if (!in.identical()) {
        throw PreconditionViolated(algo + " needs identical utilities");
    }
}

SolveOutcome from_brute(const Instance& in, Objective objective, const std::string& algo) {
    auto r = brute_optimal(in, objective, false);
    if (r.allocations.empty()) {
        throw PreconditionViolated(algo + " found no allocation");
    }
    SolveOutcome out{algo, r.allocations.front(), {}};
    if (objective == Objective::mnw) {
        out.info["positive_agents"] = std::to_string(r.positive_agents);
        out.info["nash_product"] = int128_to_string(r.nash_product);
    } else if (objective == Objective::smms) {
        out.info["mms"] = std::to_string(r.mms.at(0));
        out.info["losers"] = std::to_string(r.losers);
    }
    return out;
}

}  // namespace

const std::vector<std::string>& algorithm_names() {
    static const std::vector<std::string> names{"auto",           "two34",        "path3",     "tree-smms",
                                                "unicyclic-smms", "identical-local", "moving-knife", "brute-mnw",
                                                "brute-leximin",  "brute-smms"};
    return names;
}

std::string pick_algorithm(const Instance& in) {
    const bool additive = all_additive(in);
    const auto& g = in.graph;
    if (in.n_agents() == 2 && additive) {
        return "two34";
    }
    if (in.n_agents() == 3 && additive && g.is_path()) {
        return "path3";
    }
    if (in.identical() && additive && g.is_tree()) {
        return "tree-smms";
    }
    if (in.identical() && additive && is_unicyclic(g)) {
        return "unicyclic-smms";
    }
    if (in.identical() && additive) {
        return "identical-local";
    }
    if (in.identical() && in.agents[0].is_monotone() && g.is_path() && g.size() >= in.n_agents()) {
        return "moving-knife";
    }
    if (g.size() <= kMaxBruteVertices && in.n_agents() <= kMaxBruteAgents) {
        return "brute-mnw";
    }
    throw SizeGuardExceeded("no polynomial algorithm applies and the instance exceeds the brute-force guard");
}

SolveOutcome solve(const Instance& in, const std::string& requested) {
    validate_instance(in);
    const std::string algo = requested == "auto" ? pick_algorithm(in) : requested;
    const std::size_t n = in.n_agents();

    if (algo == "two34") {
        if (n != 2) {
            throw PreconditionViolated("two34 needs exactly 2 agents");
        }
        const auto split = two_identical_34pmms(in.graph, in.agents[0]);
        SolveOutcome out{algo, cut_and_choose_34(in.graph, in.agents[0], in.agents[1]), {}};
        out.info["certificate"] = to_string(split.certificate);
        if (split.alg1_case) {
            out.info["case"] = to_string(*split.alg1_case);
        }
        return out;
    }
    if (algo == "path3") {
        const auto r = three_agents_path_pmms(in);
        SolveOutcome out{algo, r.allocation, {}};
        std::string tag = std::to_string(r.case_tag);
        if (r.refinement != 0) {
            tag += r.refinement;
        }
        out.info["case"] = tag;
        if (r.scanned) {
            out.info["scanned"] = "true";
        }
        return out;
    }
    if (algo == "tree-smms" || algo == "unicyclic-smms") {
        require_identical(in, algo);
        const auto& u = in.agents[0];
        Allocation alloc;
        if (algo == "tree-smms" && in.graph.is_tree()) {
            alloc = pmms_smms_tree(in.graph, u, n);
        } else if (is_unicyclic(in.graph)) {
            alloc = pmms_smms_unicyclic(in.graph, u, n);
        } else {
            throw PreconditionViolated(algo == "tree-smms" ? "not a tree" : "graph does not have exactly one cycle");
        }
        const auto smms = smms_tree_or_unicyclic(in.graph, u, n);
        SolveOutcome out{algo, std::move(alloc), {}};
        out.info["mms"] = std::to_string(smms.mms);
        out.info["losers"] = std::to_string(count_losers(u, out.allocation, smms.mms));
        return out;
    }
    if (algo == "identical-local") {
        require_identical(in, algo);
        const auto r = local_improvement_34pmms(in.graph, in.agents[0], n);
        SolveOutcome out{algo, r.allocation, {}};
        out.info["iterations"] = std::to_string(r.iterations);
        return out;
    }
    if (algo == "moving-knife") {
        const auto r = moving_knife_identical(in);
        SolveOutcome out{algo, r.allocation, {}};
        out.info["transfers"] = std::to_string(r.transfers);
        return out;
    }
    if (algo == "brute-mnw") {
        return from_brute(in, Objective::mnw, algo);
    }
    if (algo == "brute-leximin") {
        return from_brute(in, Objective::leximin, algo);
    }
    if (algo == "brute-smms") {
        return from_brute(in, Objective::smms, algo);
    }
    throw InvalidInput("unknown algorithm '" + algo + "'");
}

std::string Ratio::to_string() const { return std::to_string(num) + "/" + std::to_string(den); }

Ratio make_ratio(Value num, Value den) {
    if (den <= 0) {
        throw InvalidInput("ratio denominator must be positive");
    }
    const Value g = std::gcd(num, den);
    return g == 0 ? Ratio{0, 1} : Ratio{num / g, den / g};
}

std::vector<AgentShare> realized_pmms_shares(const Instance& in, const Allocation& alloc) {
    validate_allocation(in.graph, alloc);
    std::vector<AgentShare> out(alloc.agents());
    for (std::size_t i = 0; i < alloc.agents(); ++i) {
        out[i].utility = in.agents[i].of(alloc[i]);
    }
    for (const auto& [a, b] : neighbors_under_allocation(in.graph, alloc)) {
        for (const auto& [i, j] : {std::pair{a, b}, std::pair{b, a}}) {
            if (!alloc[i].empty() && !bundles_adjacent(in.graph, alloc[i], alloc[j])) {
                continue;
            }
            const Value share = pmms_value(in.agents[i], in.graph, merge_bundles(alloc[i], alloc[j]));
            out[i].pmms = std::max(out[i].pmms, share);
        }
    }
    for (auto& s : out) {
        s.ratio = s.pmms == 0 || s.utility >= s.pmms ? Ratio{1, 1} : make_ratio(s.utility, s.pmms);
    }
    return out;
}

Ratio realized_pmms_ratio(const Instance& in, const Allocation& alloc) {
    Ratio best{1, 1};
    for (const auto& s : realized_pmms_shares(in, alloc)) {
        best = std::min(best, s.ratio);
    }
    return best;
}

}  // namespace graphfair
