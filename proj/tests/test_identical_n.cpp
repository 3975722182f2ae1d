#include "doctest.h"
#include "graphfair/identical_n.hpp"
#include "graphfair/oracle.hpp"
#include "support.hpp"

using namespace graphfair;

TEST_SUITE("identical_n") {

TEST_CASE("leaf peeling gives a connected allocation") {
    Rng rng(30);
    for (int round = 0; round < 100; ++round) {
        const std::size_t size = testing::pick(rng, 1, 10);
        const std::size_t n = testing::pick(rng, 1, 5);
        const auto g = testing::random_connected(size, rng);
        const auto a = leaf_peeling_allocation(g, n);
        REQUIRE(a.agents() == n);
        CHECK_NOTHROW(validate_allocation(g, a));
        CHECK(is_connected_allocation(g, a));
        CHECK_FALSE(a[n - 1].empty());
    }
    CHECK(leaf_peeling_allocation(ItemGraph::path(3), 2) == Allocation({{0}, {1, 2}}));
    CHECK_THROWS_AS(leaf_peeling_allocation(ItemGraph::path(3), 0), InvalidInput);
}

TEST_CASE("potential") {
    const auto u = UtilityFunction::additive({1, 2, 3});
    CHECK(potential(u, Allocation({{0, 1}, {2}})) == 18);
    CHECK(potential(u, Allocation({{}, {0, 1, 2}})) == 36);
}

TEST_CASE("one improvement on the three-item path") {
    const auto g = ItemGraph::path(3);
    const auto u = UtilityFunction::additive({1, 1, 10});
    const auto r = local_improvement_34pmms(g, u, Allocation({{0}, {1, 2}}));
    CHECK(r.iterations == 1);
    CHECK(r.allocation == Allocation({{0, 1}, {2}}));
    CHECK(r.potential == std::vector<Value>{122, 104});
}

TEST_CASE("four-cycle and a single agent") {
    const auto c4 = ItemGraph::cycle(4);
    const auto u = UtilityFunction::additive({1, 1, 1, 1});
    const auto r = local_improvement_34pmms(c4, u, 2);
    CHECK(u.of(r.allocation[0]) == 2);
    CHECK(u.of(r.allocation[1]) == 2);
    CHECK(is_connected_allocation(c4, r.allocation));

    const auto one = local_improvement_34pmms(c4, u, 1);
    CHECK(one.iterations == 0);
    CHECK(one.allocation == Allocation({{0, 1, 2, 3}}));
}

TEST_CASE("random instances: potential, bound and 3/4-PMMS") {
    Rng rng(31);
    for (int round = 0; round < 200; ++round) {
        const std::size_t size = testing::pick(rng, 1, 9);
        const std::size_t n = testing::pick(rng, 1, 4);
        const auto g = testing::random_connected(size, rng);
        const auto u = random_additive(size, round % 2 ? 3 : 20, rng);
        const auto r = local_improvement_34pmms(g, u, n);
        REQUIRE(r.potential.size() == r.iterations + 1);
        for (std::size_t k = 1; k < r.potential.size(); ++k) {
            CHECK(r.potential[k] + 2 <= r.potential[k - 1]);
        }
        const Value span = static_cast<Value>(size) * u.max_item();
        CHECK(static_cast<Value>(r.iterations) <= static_cast<Value>(n) * span * span);
        REQUIRE(is_connected_allocation(g, r.allocation));
        const Instance in{g, std::vector<UtilityFunction>(n, u)};
        CHECK(check_fairness(in, r.allocation, {CriterionKind::pmms, FairnessRatio(3, 4)}).pass);
        CHECK(r.potential.back() == potential(u, r.allocation));
    }
}

TEST_CASE("start allocations are validated") {
    const auto g = ItemGraph::path(3);
    const auto u = UtilityFunction::additive({1, 1, 1});
    CHECK_THROWS_AS(local_improvement_34pmms(g, u, Allocation({{0}, {1}})), InvalidInput);
    CHECK_THROWS_AS(local_improvement_34pmms(g, u, Allocation({{0, 2}, {1}})), PreconditionViolated);
    CHECK_THROWS_AS(local_improvement_34pmms(g, UtilityFunction::tabulated(3, std::vector<Value>(8, 0), true), 2),
                    PreconditionViolated);
}

}
