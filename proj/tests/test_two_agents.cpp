#include "doctest.h"
#include "graphfair/oracle.hpp"
#include "graphfair/two_agents.hpp"
#include "support.hpp"

using namespace graphfair;

namespace {

Value low(const UtilityFunction& u, const TwoSplit& s) {
    return std::min(u.of(s.x), u.of(s.y));
}

void check_split(const ItemGraph& g, const UtilityFunction& u, const TwoSplit& s) {
    REQUIRE(merge_bundles(s.x, s.y) == g.all_vertices());
    REQUIRE(s.x.size() + s.y.size() == g.size());
    CHECK(is_connected(g, s.x));
    CHECK(is_connected(g, s.y));
    const Value mu = pmms_value(u, g, g.all_vertices());
    CHECK(4 * low(u, s) >= 3 * mu);
    if (s.certificate == TwoAgentCertificate::exact_pmms) {
        CHECK(low(u, s) == mu);
    }
}

}  // namespace

TEST_SUITE("two_agents") {

TEST_CASE("biconnected split examples") {
    const auto tri = ItemGraph::cycle(3);
    const auto u = UtilityFunction::additive({4, 1, 1});
    const auto s = alg1_biconnected(tri, u);
    CHECK(s.y == Bundle{0});
    CHECK(s.x == Bundle{1, 2});
    CHECK(s.alg1_case == Alg1Case::single_vertex);

    const auto c4 = ItemGraph::cycle(4);
    const auto even = alg1_biconnected(c4, UtilityFunction::additive({1, 1, 1, 1}));
    CHECK(even.x.size() == 2);
    CHECK(even.y.size() == 2);
    CHECK(is_connected(c4, even.x));
    CHECK(even.alg1_case == Alg1Case::balanced);

    const auto edge = alg1_biconnected(ItemGraph::path(2), UtilityFunction::additive({1, 1}));
    CHECK(std::set<Bundle>{edge.x, edge.y} == std::set<Bundle>{{0}, {1}});

    CHECK_THROWS_WITH_AS(alg1_biconnected(ItemGraph::path(3), UtilityFunction::additive({1, 1, 1})),
                         "not biconnected", PreconditionViolated);
}

TEST_CASE("single-vertex boundary is exact") {
    // u(v*) = 3, u(V) = 8: 8 * 3 >= 3 * 8 takes the single-vertex branch.
    const auto s = alg1_biconnected(ItemGraph::cycle(4), UtilityFunction::additive({3, 2, 2, 1}));
    CHECK(s.alg1_case == Alg1Case::single_vertex);
    CHECK(s.y == Bundle{0});
}

TEST_CASE("biconnected split meets its case guarantee") {
    Rng rng(41);
    for (int round = 0; round < 300; ++round) {
        const std::size_t n = testing::pick(rng, 3, 9);
        const auto g = testing::random_biconnected(n, rng);
        const auto u = random_additive(n, 20, rng);
        const auto s = alg1_biconnected(g, u);
        check_split(g, u, s);
        REQUIRE(s.alg1_case);
        switch (*s.alg1_case) {
            case Alg1Case::single_vertex:
                CHECK(s.y.size() == 1);
                CHECK(8 * u.of(s.y) >= 3 * u.total());
                break;
            case Alg1Case::balanced:
                CHECK(8 * low(u, s) >= 3 * u.total());
                break;
            case Alg1Case::third_vertex:
                CHECK(2 * low(u, s) >= u.total() - u.item(vertices_by_value(u)[2]));
                break;
        }
    }
}

TEST_CASE("general graphs") {
    const auto star = ItemGraph::star(3);
    const auto s = two_identical_34pmms(star, UtilityFunction::additive({0, 1, 1, 1}));
    CHECK(s.certificate == TwoAgentCertificate::exact_pmms);
    CHECK(low(UtilityFunction::additive({0, 1, 1, 1}), s) == 1);

    const auto path = ItemGraph::path(3);
    const auto u = UtilityFunction::additive({1, 1, 10});
    const auto p = two_identical_34pmms(path, u);
    check_split(path, u, p);
    CHECK(low(u, p) == 2);

    const auto c5 = ItemGraph::cycle(5);
    const auto cu = UtilityFunction::additive({3, 1, 4, 1, 5});
    const auto direct = alg1_biconnected(c5, cu);
    const auto via = two_identical_34pmms(c5, cu);
    CHECK(direct.x == via.x);
    CHECK(direct.y == via.y);
}

TEST_CASE("tied side partitions") {
    // Several block/cut pairs share the best minimum here.
    const ItemGraph g(6, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {3, 4}, {3, 5}, {4, 5}});
    const auto u = UtilityFunction::additive({1, 1, 0, 0, 1, 1});
    check_split(g, u, two_identical_34pmms(g, u));
}

TEST_CASE("random connected graphs keep 3/4 of the pairwise share") {
    Rng rng(52);
    for (int round = 0; round < 400; ++round) {
        const std::size_t n = testing::pick(rng, 1, 9);
        const auto g = testing::random_connected(n, rng, 1, 5);
        const auto u = random_additive(n, round % 2 == 0 ? 3 : 20, rng);
        check_split(g, u, two_identical_34pmms(g, u));
    }
}

TEST_CASE("cut and choose") {
    const auto path = ItemGraph::path(3);
    const auto u1 = UtilityFunction::additive({1, 1, 10});
    const auto u2 = UtilityFunction::additive({10, 1, 1});
    const auto a = cut_and_choose_34(path, u1, u2);
    CHECK(std::binary_search(a[1].begin(), a[1].end(), 0));
    const Instance in{path, {u1, u2}};
    CHECK(check_fairness(in, a, {CriterionKind::pmms, FairnessRatio(3, 4)}).pass);

    const auto e = cut_and_choose_34(ItemGraph::path(2), UtilityFunction::additive({1, 0}),
                                     UtilityFunction::additive({0, 1}));
    CHECK(e[0] == Bundle{0});
    CHECK(e[1] == Bundle{1});
}

TEST_CASE("cut and choose on random instances") {
    Rng rng(63);
    for (int round = 0; round < 200; ++round) {
        const std::size_t n = testing::pick(rng, 2, 9);
        const auto g = testing::random_connected(n, rng);
        const Instance in{g, {random_additive(n, 20, rng), random_additive(n, 20, rng)}};
        const auto a = cut_and_choose_34(g, in.agents[0], in.agents[1]);
        CHECK(is_connected_allocation(g, a));
        CHECK(check_fairness(in, a, {CriterionKind::pmms, FairnessRatio(3, 4)}).pass);
    }
}

TEST_CASE("non-additive input is refused") {
    const auto t = UtilityFunction::tabulated(2, {0, 1, 1, 2}, true);
    CHECK_THROWS_AS(two_identical_34pmms(ItemGraph::path(2), t), PreconditionViolated);
}

}
