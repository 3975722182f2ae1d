#include "doctest.h"
#include "graphfair/fixtures.hpp"
#include "graphfair/oracle.hpp"
#include "support.hpp"

using namespace graphfair;

namespace {

Instance identical(ItemGraph g, std::vector<Value> values, std::size_t n) {
    return Instance{std::move(g), std::vector<UtilityFunction>(n, UtilityFunction::additive(std::move(values)))};
}

FairnessCriterion crit(CriterionKind k, Value num = 1, Value den = 1) {
    return FairnessCriterion{k, FairnessRatio(num, den)};
}

}  // namespace

TEST_SUITE("oracle") {

TEST_CASE("partition counts") {
    CHECK(enumerate_connected_partitions(ItemGraph::path(3), Bundle{0, 1, 2}, 2, false).size() == 2);
    for (std::size_t m = 2; m <= 9; ++m) {
        const auto g = ItemGraph::path(m);
        CHECK(enumerate_connected_partitions(g, g.all_vertices(), 2, false).size() == m - 1);
    }
    const auto c4 = ItemGraph::cycle(4);
    CHECK(enumerate_connected_partitions(c4, c4.all_vertices(), 2, false).size() == 6);
    // A 1-part partition plus the one padded with an empty part.
    CHECK(enumerate_connected_partitions(c4, Bundle{0, 1}, 2, true).size() == 2);
    CHECK(enumerate_connected_partitions(c4, Bundle{0, 2}, 2, false).size() == 1);
}

TEST_CASE("partitions are distinct and connected") {
    Rng rng(5);
    for (int round = 0; round < 20; ++round) {
        const auto g = testing::random_connected(testing::pick(rng, 2, 7), rng);
        const std::size_t k = testing::pick(rng, 1, 3);
        const auto parts = enumerate_connected_partitions(g, g.all_vertices(), k, false);
        std::set<std::vector<Bundle>> seen;
        for (auto p : parts) {
            for (const auto& b : p) {
                REQUIRE_FALSE(b.empty());
                REQUIRE(is_connected(g, b));
            }
            std::sort(p.begin(), p.end());
            REQUIRE(seen.insert(p).second);
        }
    }
}

TEST_CASE("enumeration refuses oversized bundles") {
    const auto g = ItemGraph::path(19);
    CHECK_THROWS_AS(enumerate_connected_partitions(g, g.all_vertices(), 2, false), SizeGuardExceeded);
    CHECK_THROWS_AS(mu_k(UtilityFunction::additive(std::vector<Value>(19, 1)), g, g.all_vertices(), 2),
                    SizeGuardExceeded);
}

TEST_CASE("mu_k values") {
    const auto g = ItemGraph::path(4);
    const auto u = UtilityFunction::additive({1, 3, 3, 1});
    CHECK(mu_k(u, g, g.all_vertices(), 3) == 1);
    CHECK(mu_k(u, g, Bundle{0, 1, 2}, 2) == 3);
    CHECK(mu_k(u, g, Bundle{1, 2, 3}, 1) == 7);
    // Two components split one way; three or more cannot be split at all.
    CHECK(pmms_value(u, g, Bundle{0, 3}) == 1);
    CHECK(pmms_value(UtilityFunction::additive({1, 1, 1, 1, 1}), ItemGraph::path(5), Bundle{0, 2, 4}) == 0);
}

TEST_CASE("mu_k is monotone and mu_2 is at most half") {
    Rng rng(21);
    for (int round = 0; round < 60; ++round) {
        const std::size_t n = testing::pick(rng, 2, 7);
        const auto g = testing::random_connected(n, rng);
        const auto u = random_additive(n, 9, rng);
        const auto t = testing::random_monotone_table(n, 9, rng);
        const VertexMask y = testing::pick(rng, 1, (std::size_t{1} << n) - 1);
        const VertexMask x = y & testing::pick(rng, 0, (std::size_t{1} << n) - 1);
        const std::size_t k = testing::pick(rng, 1, 3);
        CHECK(mu_k_mask(t, g, x, k) <= mu_k_mask(t, g, y, k));
        CHECK(2 * mu_k_mask(u, g, y, 2) <= u.of_mask(y));
    }
}

TEST_CASE("PMMS partitions of one agent") {
    const auto g = ItemGraph::path(4);
    const auto u = UtilityFunction::additive({1, 3, 3, 1});
    const auto p = pmms_partition_of_agent(u, g, 3);
    CHECK(is_pmms_partition_for(u, g, p));
    CHECK(is_connected_allocation(g, p));
    // ({v1},{v2,v3},{v4}) is not one: {v1} against {v2,v3} has share 3.
    CHECK_FALSE(is_pmms_partition_for(u, g, Allocation({{0}, {1, 2}, {3}})));

    const ItemGraph single(1, std::initializer_list<Edge>{});
    CHECK(pmms_partition_of_agent(UtilityFunction::additive({4}), single, 1) == Allocation(std::vector<Bundle>{{0}}));

    const auto three = pmms_partition_of_agent(UtilityFunction::additive({1, 1, 1}), ItemGraph::path(3), 3);
    for (const auto& b : three.bundles) {
        CHECK(b.size() == 1);
    }
}

TEST_CASE("fairness checks on the separating examples") {
    const auto in = identical(ItemGraph::path(3), {1, 1, 10}, 2);
    const Allocation a({{0}, {1, 2}});
    CHECK(check_fairness(in, a, crit(CriterionKind::ef1)).pass);
    const auto pmms = check_fairness(in, a, crit(CriterionKind::pmms));
    REQUIRE_FALSE(pmms.pass);
    REQUIRE(pmms.witness);
    CHECK(pmms.witness->agent == 0);
    CHECK(pmms.witness->other == 1);
    CHECK(pmms.witness->deficit == 1);

    const auto star = identical(ItemGraph::star(3), {1, 1, 1, 1}, 2);
    const Allocation s({{1}, {0, 2, 3}});
    CHECK(check_fairness(star, s, crit(CriterionKind::pmms)).pass);
    CHECK_FALSE(check_fairness(star, s, crit(CriterionKind::ef1)).pass);
}

TEST_CASE("MMS and EFX checks") {
    const auto in = identical(ItemGraph::path(4), {1, 3, 3, 1}, 3);
    CHECK(check_fairness(in, Allocation({{0}, {1}, {2, 3}}), crit(CriterionKind::mms)).pass);
    const auto two = identical(ItemGraph::path(3), {2, 1, 3}, 2);
    CHECK(check_fairness(two, Allocation({{0}, {1, 2}}), crit(CriterionKind::ef1)).pass);
    CHECK_FALSE(check_fairness(two, Allocation({{0}, {1, 2}}), crit(CriterionKind::efx)).pass);
    CHECK(FairnessCriterion::parse("efx", FairnessRatio(1, 2)).ratio == FairnessRatio(1, 1));
    CHECK_THROWS_AS(FairnessCriterion::parse("envy", FairnessRatio(1, 1)), InvalidInput);
}

TEST_CASE("half-PMMS with ratio 1/2") {
    const auto in = identical(ItemGraph::path(3), {1, 1, 10}, 2);
    CHECK(check_fairness(in, Allocation({{0}, {1, 2}}), crit(CriterionKind::pmms, 1, 2)).pass);
}

TEST_CASE("brute MNW on the six-item path") {
    const auto fx = get_fixture("prop3.2-mnw-half");
    const auto r = brute_optimal(fx.instance, Objective::mnw);
    CHECK(r.positive_agents == 2);
    CHECK(r.nash_product == 4);
    CHECK(r.allocations.size() == 4);
    for (const auto& a : r.allocations) {
        CHECK(is_pareto_optimal(fx.instance, a));
        CHECK(check_fairness(fx.instance, a, crit(CriterionKind::pmms, 1, 2)).pass);
    }
}

TEST_CASE("brute SMMS and leximin") {
    const auto in = identical(ItemGraph::path(5), {1, 3, 1, 1, 1}, 3);
    const auto smms = brute_optimal(in, Objective::smms);
    CHECK(smms.mms.at(0) == 1);
    CHECK(smms.losers == 1);

    const auto fx = get_fixture("prop3.3-leximin");
    const auto lex = brute_optimal(fx.instance, Objective::leximin);
    REQUIRE(lex.allocations.size() == 1);
    CHECK(lex.allocations[0][0] == Bundle{0, 1});
    CHECK(lex.profile == std::vector<Value>{2, 2});
}

TEST_CASE("Pareto optimality") {
    const ItemGraph single(1, std::initializer_list<Edge>{});
    CHECK(is_pareto_optimal(Instance{single, {UtilityFunction::additive({1})}}, Allocation(std::vector<Bundle>{{0}})));
    const auto in = identical(ItemGraph::path(2), {1, 1}, 2);
    // Giving both items to one agent is not dominated: the other split hurts that agent.
    CHECK(is_pareto_optimal(in, Allocation(std::vector<Bundle>{Bundle{}, Bundle{0, 1}})));
    CHECK(is_pareto_optimal(in, Allocation({{0}, {1}})));
    const Instance swapped{ItemGraph::path(2), {UtilityFunction::additive({1, 0}), UtilityFunction::additive({0, 1})}};
    CHECK_FALSE(is_pareto_optimal(swapped, Allocation({{1}, {0}})));
    CHECK_THROWS_AS(is_pareto_optimal(swapped, Allocation(std::vector<Bundle>{Bundle{0, 1}})), InvalidInput);
}

TEST_CASE("allocation enumeration counts") {
    std::size_t count = 0;
    for_each_connected_allocation(ItemGraph::path(4), 2, [&](const std::vector<VertexMask>&) { ++count; });
    // Ordered pairs: 3 cuts, both orientations, plus the two with an empty bundle.
    CHECK(count == 8);
}

TEST_CASE("brute searches refuse large inputs") {
    const auto big = identical(ItemGraph::path(13), std::vector<Value>(13, 1), 2);
    CHECK_THROWS_AS(brute_optimal(big, Objective::mnw), SizeGuardExceeded);
    const auto many = identical(ItemGraph::path(6), std::vector<Value>(6, 1), 5);
    CHECK_THROWS_AS(brute_optimal(many, Objective::mnw), SizeGuardExceeded);
}

TEST_CASE("128-bit formatting") {
    CHECK(int128_to_string(0) == "0");
    CHECK(int128_to_string(static_cast<__int128>(1) << 70) == "1180591620717411303424");
    CHECK(int128_to_string(-12) == "-12");
}

}
