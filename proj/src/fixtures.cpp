#include "graphfair/fixtures.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "graphfair/oracle.hpp"

namespace graphfair {

namespace {

FairnessCriterion crit(CriterionKind kind, Value num, Value den) {
    return {kind, FairnessRatio(num, den)};
}

bool passes(const Instance& in, const Allocation& a, CriterionKind kind, Value num, Value den) {
    return check_fairness(in, a, crit(kind, num, den)).pass;
}

Instance identical(ItemGraph graph, const UtilityFunction& u, std::size_t n) {
    return {std::move(graph), std::vector<UtilityFunction>(n, u)};
}

UtilityFunction binary(std::size_t n, std::initializer_list<Vertex> ones) {
    std::vector<Value> v(n, 0);
    for (Vertex x : ones) {
        v[static_cast<std::size_t>(x)] = 1;
    }
    return UtilityFunction::additive(std::move(v));
}

UtilityFunction table_of(std::size_t n, const std::function<Value(VertexMask)>& f, bool monotone) {
    std::vector<Value> t(std::size_t{1} << n);
    for (std::size_t m = 0; m < t.size(); ++m) {
        t[m] = f(static_cast<VertexMask>(m));
    }
    return UtilityFunction::tabulated(n, std::move(t), monotone);
}

bool contains(VertexMask b, VertexMask s) { return (b & s) == s; }

bool submodular(const UtilityFunction& u) {
    const VertexMask full = (VertexMask{1} << u.n_vertices()) - 1;
    for (VertexMask x = 0; x <= full; ++x) {
        for (VertexMask y = 0; y <= full; ++y) {
            if (u.of_mask(x) + u.of_mask(y) < u.of_mask(x | y) + u.of_mask(x & y)) {
                return false;
            }
        }
    }
    return true;
}

bool binary_marginals(const UtilityFunction& u) {
    const VertexMask full = (VertexMask{1} << u.n_vertices()) - 1;
    for (VertexMask x = 0; x <= full; ++x) {
        for (std::size_t v = 0; v < u.n_vertices(); ++v) {
            const Value gain = u.of_mask(x | bit(static_cast<Vertex>(v))) - u.of_mask(x);
            if (gain != 0 && gain != 1) {
                return false;
            }
        }
    }
    return true;
}

bool no_connected_allocation(const Instance& in, const FairnessCriterion& c) {
    bool found = false;
    for_each_connected_allocation(in.graph, in.n_agents(), [&](const std::vector<VertexMask>& masks) {
        if (found) {
            return;
        }
        std::vector<Bundle> b;
        for (VertexMask m : masks) {
            b.push_back(from_mask(m));
        }
        found = check_fairness(in, Allocation(std::move(b)), c).pass;
    });
    return !found;
}

Fixture prop21_mms_not_pmms() {
    Fixture f;
    f.name = "prop2.1-mms-not-pmms";
    f.note = "the violating pair is agents 1 and 3 (0-based 0 and 2), whose bundles are adjacent";
    f.instance = identical(ItemGraph::path(4), UtilityFunction::additive({1, 3, 3, 1}), 3);
    const Allocation a({{0}, {3}, {1, 2}});
    f.facts.push_back({"MMS value is 1", [](const Instance& in) {
                           return mu_k(in.agents[0], in.graph, in.graph.all_vertices(), 3) == 1;
                       }});
    f.facts.push_back({"({v1},{v4},{v2,v3}) is MMS", [a](const Instance& in) {
                           return passes(in, a, CriterionKind::mms, 1, 1);
                       }});
    f.facts.push_back({"({v1},{v4},{v2,v3}) is not 1/2-PMMS, agents 0 and 2 witness it", [a](const Instance& in) {
                           const auto r = check_fairness(in, a, crit(CriterionKind::pmms, 1, 2));
                           return !r.pass && r.witness->agent == 0 && r.witness->other == 2 &&
                                  r.witness->rhs == 3;
                       }});
    return f;
}

Fixture prop21_pmms_not_mms() {
    Fixture f;
    f.name = "prop2.1-pmms-not-mms";
    f.instance = identical(ItemGraph::path(4), UtilityFunction::additive({1, 3, 3, 3}), 3);
    const Allocation a({{0}, {1}, {2, 3}});
    f.facts.push_back({"MMS value is 3", [](const Instance& in) {
                           return mu_k(in.agents[0], in.graph, in.graph.all_vertices(), 3) == 3;
                       }});
    f.facts.push_back({"({v1},{v2},{v3,v4}) is PMMS", [a](const Instance& in) {
                           return passes(in, a, CriterionKind::pmms, 1, 1);
                       }});
    f.facts.push_back({"({v1},{v2},{v3,v4}) is not 1/2-MMS", [a](const Instance& in) {
                           return !passes(in, a, CriterionKind::mms, 1, 2);
                       }});
    return f;
}

Fixture prop22() {
    Fixture f;
    f.name = "prop2.2-ef1-not-pmms";
    f.instance = identical(ItemGraph::path(3), UtilityFunction::additive({1, 1, 10}), 2);
    const Allocation a({{0}, {1, 2}});
    f.facts.push_back({"({v1},{v2,v3}) is EF1", [a](const Instance& in) {
                           return passes(in, a, CriterionKind::ef1, 1, 1);
                       }});
    f.facts.push_back({"({v1},{v2,v3}) is not PMMS", [a](const Instance& in) {
                           return !passes(in, a, CriterionKind::pmms, 1, 1);
                       }});
    f.facts.push_back({"({v1,v2},{v3}) is PMMS", [](const Instance& in) {
                           return passes(in, Allocation({{0, 1}, {2}}), CriterionKind::pmms, 1, 1);
                       }});
    return f;
}

Fixture prop23() {
    Fixture f;
    f.name = "prop2.3-pmms-not-ef1";
    f.instance = identical(ItemGraph::star(3), UtilityFunction::additive({1, 1, 1, 1}), 2);
    const Allocation a({{1}, {0, 2, 3}});
    f.facts.push_back({"leaf versus rest is PMMS", [a](const Instance& in) {
                           return passes(in, a, CriterionKind::pmms, 1, 1);
                       }});
    f.facts.push_back({"leaf versus rest is not EF1", [a](const Instance& in) {
                           return !passes(in, a, CriterionKind::ef1, 1, 1);
                       }});
    return f;
}

Fixture prop32() {
    Fixture f;
    f.name = "prop3.2-mnw-half";
    f.instance = {ItemGraph::path(6), {binary(6, {0, 2, 3, 4}), binary(6, {1, 2, 3, 5})}};
    f.facts.push_back({"four MNW allocations with Nash product 4", [](const Instance& in) {
                           const auto r = brute_optimal(in, Objective::mnw);
                           return r.allocations.size() == 4 && r.positive_agents == 2 && r.nash_product == 4;
                       }});
    f.facts.push_back({"every MNW allocation is 1/2-PMMS", [](const Instance& in) {
                           const auto r = brute_optimal(in, Objective::mnw);
                           return std::all_of(r.allocations.begin(), r.allocations.end(), [&](const Allocation& a) {
                               return passes(in, a, CriterionKind::pmms, 1, 2);
                           });
                       }});
    f.facts.push_back({"exactly two MNW allocations leave an agent at half the PMMS", [](const Instance& in) {
                           const auto r = brute_optimal(in, Objective::mnw);
                           return std::count_if(r.allocations.begin(), r.allocations.end(), [&](const Allocation& a) {
                                      return !passes(in, a, CriterionKind::pmms, 1, 1);
                                  }) == 2;
                       }});
    f.facts.push_back({"PMMS of both agents is 2", [](const Instance& in) {
                           return pmms_value(in.agents[0], in.graph, in.graph.all_vertices()) == 2 &&
                                  pmms_value(in.agents[1], in.graph, in.graph.all_vertices()) == 2;
                       }});
    return f;
}

Fixture prop33() {
    // alpha = 1/2 gives m = 2 * ceil(2 / alpha) + 2 = 10.
    Fixture f;
    f.name = "prop3.3-leximin";
    f.note = "alpha = 1/2, m = 10";
    f.instance = {ItemGraph::path(10), {binary(10, {0, 1, 2, 3, 4, 5, 6, 7, 8, 9}), binary(10, {2, 9})}};
    f.facts.push_back({"unique leximin allocation ({v1,v2},{v3..v10})", [](const Instance& in) {
                           const auto r = brute_optimal(in, Objective::leximin);
                           return r.allocations.size() == 1 &&
                                  r.allocations[0] == Allocation({{0, 1}, {2, 3, 4, 5, 6, 7, 8, 9}});
                       }});
    f.facts.push_back({"the leximin allocation is not 1/2-PMMS", [](const Instance& in) {
                           const auto r = brute_optimal(in, Objective::leximin);
                           return !passes(in, r.allocations.at(0), CriterionKind::pmms, 1, 2);
                       }});
    return f;
}

Fixture prop34() {
    Fixture f;
    f.name = "prop3.4-star-ef1";
    f.note = "beta = 3, alpha = 1/2";
    f.instance = identical(ItemGraph::star(5), UtilityFunction::additive(std::vector<Value>(6, 1)), 2);
    f.facts.push_back({"no connected allocation is 1/2-EF1", [](const Instance& in) {
                           return no_connected_allocation(in, crit(CriterionKind::ef1, 1, 2));
                       }});
    return f;
}

Fixture appendix_cycle() {
    Fixture f;
    f.name = "appxA-cycle4-submodular";
    f.note = "the utilities as defined are not submodular; non-existence of a PMMS allocation still holds";
    const VertexMask a12 = 0b0011, a34 = 0b1100, a14 = 0b1001, a23 = 0b0110;
    auto u1 = table_of(4, [=](VertexMask b) -> Value {
        if (b == 0) {
            return 0;
        }
        return contains(b, a12) || contains(b, a34) ? 2 : 1;
    }, true);
    auto u2 = table_of(4, [=](VertexMask b) -> Value {
        if (b == 0) {
            return 0;
        }
        return contains(b, a14) || contains(b, a23) ? 2 : 1;
    }, true);
    f.instance = {ItemGraph::cycle(4), {u1, u2}};
    f.facts.push_back({"both utilities have binary marginal gains", [](const Instance& in) {
                           return binary_marginals(in.agents[0]) && binary_marginals(in.agents[1]);
                       }});
    f.facts.push_back({"neither utility is submodular ({v1,v3} and {v2,v3} for u1)", [](const Instance& in) {
                           return !submodular(in.agents[0]) && !submodular(in.agents[1]) &&
                                  in.agents[0].of({0, 2}) + in.agents[0].of({1, 2}) == 2 &&
                                  in.agents[0].of({0, 1, 2}) + in.agents[0].of({2}) == 3;
                       }});
    f.facts.push_back({"PMMS of both agents is 2", [](const Instance& in) {
                           return pmms_value(in.agents[0], in.graph, in.graph.all_vertices()) == 2 &&
                                  pmms_value(in.agents[1], in.graph, in.graph.all_vertices()) == 2;
                       }});
    f.facts.push_back({"no connected allocation is PMMS", [](const Instance& in) {
                           return no_connected_allocation(in, crit(CriterionKind::pmms, 1, 1));
                       }});
    return f;
}

Fixture lemma57() {
    Fixture f;
    f.name = "lemma5.7-monotone-counterexample";
    auto u = table_of(5, [](VertexMask b) -> Value { return contains(b, 0b00111) || contains(b, 0b11000) ? 1 : 0; },
                      true);
    f.instance = identical(ItemGraph::path(5), u, 2);
    f.facts.push_back({"({v2},{v3,v4,v5}) is a PMMS split of the subpath v2..v5", [](const Instance& in) {
                           const Bundle sub{1, 2, 3, 4};
                           const Value mu = mu_k(in.agents[0], in.graph, sub, 2);
                           return std::min(in.agents[0].of({1}), in.agents[0].of({2, 3, 4})) == mu;
                       }});
    f.facts.push_back({"the left part {v1,v2} is not good on the whole path", [](const Instance& in) {
                           return in.agents[0].of({0, 1}) < pmms_value(in.agents[0], in.graph, in.graph.all_vertices());
                       }});
    return f;
}

Fixture lemma66() {
    Fixture f;
    f.name = "lemma6.6-pmms-smms-not-leximin";
    f.instance = identical(ItemGraph::path(5), UtilityFunction::additive({1, 3, 1, 1, 1}), 3);
    const Allocation a({{0, 1}, {2}, {3, 4}});
    const Allocation b({{0}, {1}, {2, 3, 4}});
    f.facts.push_back({"both allocations are PMMS", [a, b](const Instance& in) {
                           return passes(in, a, CriterionKind::pmms, 1, 1) && passes(in, b, CriterionKind::pmms, 1, 1);
                       }});
    f.facts.push_back({"both allocations are SMMS (MMS 1, one loser)", [a, b](const Instance& in) {
                           const auto r = brute_optimal(in, Objective::smms);
                           const bool has_a = std::binary_search(r.allocations.begin(), r.allocations.end(), a);
                           const bool has_b = std::binary_search(r.allocations.begin(), r.allocations.end(), b);
                           return r.mms.at(0) == 1 && r.losers == 1 && has_a && has_b;
                       }});
    f.facts.push_back({"only ({v1},{v2},{v3,v4,v5}) is leximin", [a, b](const Instance& in) {
                           const auto r = brute_optimal(in, Objective::leximin);
                           const bool has_a = std::binary_search(r.allocations.begin(), r.allocations.end(), a);
                           const bool has_b = std::binary_search(r.allocations.begin(), r.allocations.end(), b);
                           return !has_a && has_b;
                       }});
    return f;
}

Fixture lemma614() {
    // n = 4 agents on a star with 2n - 2 = 6 leaves; S is the first n - 1 leaves.
    Fixture f;
    f.name = "lemma6.14-subadditive-star";
    f.note = "n = 4, hidden set S = {v2, v3, v4}";
    constexpr std::size_t n = 4;
    const VertexMask s_center = 0b0001111;
    auto u = table_of(7, [=](VertexMask b) -> Value {
        if (b == 0) {
            return 0;
        }
        return static_cast<std::size_t>(std::popcount(b)) > n || b == s_center ? 2 : 1;
    }, true);
    f.instance = identical(ItemGraph::star(6), u, n);
    f.facts.push_back({"the utility is subadditive", [](const Instance& in) {
                           const auto& t = in.agents[0];
                           for (VertexMask x = 0; x < 128; ++x) {
                               for (VertexMask y = 0; y < 128; ++y) {
                                   if (t.of_mask(x) + t.of_mask(y) < t.of_mask(x | y)) {
                                       return false;
                                   }
                               }
                           }
                           return true;
                       }});
    f.facts.push_back({"SMMS: MMS 1, three losers", [](const Instance& in) {
                           const auto r = brute_optimal(in, Objective::smms);
                           return r.mms.at(0) == 1 && r.losers == 3;
                       }});
    f.facts.push_back({"every SMMS allocation gives S plus the centre to one agent", [=](const Instance& in) {
                           const auto r = brute_optimal(in, Objective::smms);
                           return !r.allocations.empty() &&
                                  std::all_of(r.allocations.begin(), r.allocations.end(), [&](const Allocation& a) {
                                      return std::any_of(a.bundles.begin(), a.bundles.end(), [&](const Bundle& b) {
                                          return to_mask(b) == s_center;
                                      });
                                  });
                       }});
    return f;
}

using Builder = Fixture (*)();

const std::map<std::string, Builder>& registry() {
    static const std::map<std::string, Builder> r{
        {"prop2.1-mms-not-pmms", prop21_mms_not_pmms},
        {"prop2.1-pmms-not-mms", prop21_pmms_not_mms},
        {"prop2.2-ef1-not-pmms", prop22},
        {"prop2.3-pmms-not-ef1", prop23},
        {"prop3.2-mnw-half", prop32},
        {"prop3.3-leximin", prop33},
        {"prop3.4-star-ef1", prop34},
        {"appxA-cycle4-submodular", appendix_cycle},
        {"lemma5.7-monotone-counterexample", lemma57},
        {"lemma6.6-pmms-smms-not-leximin", lemma66},
        {"lemma6.14-subadditive-star", lemma614},
    };
    return r;
}

}  // namespace

std::vector<std::string> fixture_names() {
    std::vector<std::string> out;
    for (const auto& [name, _] : registry()) {
        out.push_back(name);
    }
    return out;
}

Fixture get_fixture(const std::string& name) {
    const auto& r = registry();
    const auto it = r.find(name);
    if (it == r.end()) {
        throw InvalidInput("unknown fixture: " + name);
    }
    return it->second();
}

std::vector<FactOutcome> check_fixture(const Fixture& fixture) {
    std::vector<FactOutcome> out;
    for (const auto& fact : fixture.facts) {
        out.push_back({fact.claim, fact.holds(fixture.instance)});
    }
    return out;
}

}  // namespace graphfair
