#include <bit>

#include "doctest.h"
#include "graphfair/decomposition.hpp"
#include "support.hpp"

using namespace graphfair;

namespace {

// Triangles {0,1,2} and {2,3,4} sharing vertex 2.
ItemGraph bowtie() {
    return ItemGraph(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}});
}

std::size_t block_with(const BlockCutTree& t, const Bundle& content) {
    for (std::size_t b = 0; b < t.blocks.size(); ++b) {
        if (t.blocks[b] == content) {
            return b;
        }
    }
    FAIL("block not found");
    return 0;
}

Bundle brute_cut_vertices(const ItemGraph& g) {
    Bundle cuts;
    for (Vertex v = 0; v < static_cast<Vertex>(g.size()); ++v) {
        Bundle rest;
        for (Vertex w = 0; w < static_cast<Vertex>(g.size()); ++w) {
            if (w != v) {
                rest.push_back(w);
            }
        }
        if (!is_connected(g, rest)) {
            cuts.push_back(v);
        }
    }
    return cuts;
}

std::set<Bundle> brute_blocks(const ItemGraph& g) {
    const std::size_t n = g.size();
    std::vector<Bundle> candidates;
    for (VertexMask m = 1; m < (VertexMask{1} << n); ++m) {
        if (std::popcount(m) >= 2 && is_biconnected(g.induced(from_mask(m)))) {
            candidates.push_back(from_mask(m));
        }
    }
    std::set<Bundle> out;
    for (const auto& c : candidates) {
        const VertexMask cm = to_mask(c);
        const bool maximal = std::none_of(candidates.begin(), candidates.end(), [&](const Bundle& d) {
            const VertexMask dm = to_mask(d);
            return dm != cm && (dm & cm) == cm;
        });
        if (maximal) {
            out.insert(c);
        }
    }
    return out;
}

}  // namespace

TEST_SUITE("decomposition") {

TEST_CASE("blocks of small graphs") {
    const auto p = block_cut_tree(ItemGraph::path(3));
    CHECK(std::set<Bundle>(p.blocks.begin(), p.blocks.end()) == std::set<Bundle>{{0, 1}, {1, 2}});
    CHECK(p.cut_vertices == Bundle{1});

    const auto b = block_cut_tree(bowtie());
    CHECK(std::set<Bundle>(b.blocks.begin(), b.blocks.end()) == std::set<Bundle>{{0, 1, 2}, {2, 3, 4}});
    CHECK(b.cut_vertices == Bundle{2});
    CHECK(b.tree_edges.size() == 2);

    const auto c = block_cut_tree(ItemGraph::cycle(5));
    CHECK(c.blocks.size() == 1);
    CHECK(c.cut_vertices.empty());
    CHECK(is_biconnected(ItemGraph::cycle(5)));
    CHECK_FALSE(is_biconnected(bowtie()));
    CHECK(is_biconnected(ItemGraph::path(2)));
}

TEST_CASE("block/cut tree agrees with brute force") {
    Rng rng(77);
    for (int round = 0; round < 150; ++round) {
        const std::size_t n = testing::pick(rng, 2, 7);
        const auto g = testing::random_connected(n, rng, 1, 5);
        const auto t = block_cut_tree(g);
        REQUIRE(t.cut_vertices == brute_cut_vertices(g));
        REQUIRE(std::set<Bundle>(t.blocks.begin(), t.blocks.end()) == brute_blocks(g));
        // Blocks share edges with nobody and cover all edges.
        std::size_t edges = 0;
        for (const auto& blk : t.blocks) {
            edges += g.induced(blk).edge_count();
        }
        CHECK(edges == g.edge_count());
        // A tree: vertices = blocks + cuts, edges one fewer.
        CHECK(t.tree_edges.size() + 1 == t.blocks.size() + t.cut_vertices.size());
        for (auto [blk, cut] : t.tree_edges) {
            CHECK(std::binary_search(t.blocks[blk].begin(), t.blocks[blk].end(), cut));
        }
        for (std::size_t blk = 0; blk < t.blocks.size(); ++blk) {
            for (Vertex v : t.blocks[blk]) {
                CHECK(t.incident(blk, v) == t.is_cut(v));
            }
        }
    }
}

TEST_CASE("bipolar orderings") {
    const auto c4 = ItemGraph::cycle(4);
    const auto o = bipolar_ordering(c4, 0, 2);
    CHECK(o.sequence.front() == 0);
    CHECK(o.sequence.back() == 2);
    CHECK(is_bipolar_ordering(c4, o.sequence, 0, 2));
    CHECK(is_bipolar_ordering(c4, {0, 1, 3, 2}, 0, 2));
    CHECK_FALSE(is_bipolar_ordering(c4, {0, 2, 1, 3}, 0, 3));

    CHECK(bipolar_ordering(ItemGraph::path(2), 0, 1).sequence == std::vector<Vertex>{0, 1});
    const auto tri = ItemGraph::cycle(3);
    for (Vertex s = 0; s < 3; ++s) {
        for (Vertex t = 0; t < 3; ++t) {
            if (s != t) {
                CHECK(is_bipolar_ordering(tri, bipolar_ordering(tri, s, t).sequence, s, t));
            }
        }
    }
    CHECK_THROWS_WITH_AS(bipolar_ordering(bowtie(), 0, 4), "not biconnected", PreconditionViolated);
    CHECK_THROWS_AS(bipolar_ordering(c4, 1, 1), InvalidInput);
}

TEST_CASE("bipolar orderings on random biconnected graphs") {
    Rng rng(3);
    for (int round = 0; round < 100; ++round) {
        const std::size_t n = testing::pick(rng, 3, 12);
        const auto g = testing::random_biconnected(n, rng);
        const auto s = static_cast<Vertex>(testing::pick(rng, 0, n - 1));
        auto t = static_cast<Vertex>(testing::pick(rng, 0, n - 2));
        if (t >= s) {
            ++t;
        }
        const auto o = bipolar_ordering(g, s, t);
        REQUIRE(o.sequence.size() == n);
        CHECK(o.sequence.front() == s);
        CHECK(o.sequence.back() == t);
        CHECK(testing::prefixes_and_suffixes_connected(g, o.sequence));
    }
}

TEST_CASE("side partitions") {
    const auto g = bowtie();
    const auto t = block_cut_tree(g);
    const auto s = side_partition(g, t, block_with(t, {0, 1, 2}), 2);
    CHECK(s.x_side == Bundle{0, 1});
    CHECK(s.y_side == Bundle{2, 3, 4});

    const auto p = ItemGraph::path(3);
    const auto pt = block_cut_tree(p);
    const auto ps = side_partition(p, pt, block_with(pt, {0, 1}), 1);
    CHECK(ps.x_side == Bundle{0});
    CHECK(ps.y_side == Bundle{1, 2});
    CHECK_THROWS_AS(side_partition(p, pt, block_with(pt, {0, 1}), 0), InvalidInput);
}

TEST_CASE("side partitions split the graph into connected halves") {
    Rng rng(8);
    for (int round = 0; round < 80; ++round) {
        const auto g = testing::random_connected(testing::pick(rng, 3, 9), rng, 1, 6);
        const auto t = block_cut_tree(g);
        for (auto [blk, cut] : t.tree_edges) {
            const auto s = side_partition(g, t, blk, cut);
            CHECK(is_connected(g, s.x_side));
            CHECK(is_connected(g, s.y_side));
            CHECK(std::binary_search(s.y_side.begin(), s.y_side.end(), cut));
            CHECK(s.x_side.size() + s.y_side.size() == g.size());
            CHECK(merge_bundles(s.x_side, s.y_side) == g.all_vertices());
        }
    }
}

TEST_CASE("merging the exterior of a block") {
    const auto g = bowtie();
    const auto t = block_cut_tree(g);
    const auto u = UtilityFunction::additive({1, 2, 3, 4, 5});
    const auto m = merge_exterior(g, u, t, block_with(t, {0, 1, 2}));
    CHECK(m.graph == ItemGraph::cycle(3));
    CHECK(m.utility.values() == std::vector<Value>{1, 2, 12});
    CHECK(m.origin[2] == Bundle{2, 3, 4});
    CHECK(m.lift(Bundle{1, 2}) == Bundle{1, 2, 3, 4});

    const auto c = ItemGraph::cycle(4);
    const auto ct = block_cut_tree(c);
    const auto same = merge_exterior(c, UtilityFunction::additive({1, 1, 2, 2}), ct, 0);
    CHECK(same.graph == c);
    CHECK(same.utility.values() == std::vector<Value>{1, 1, 2, 2});
    for (std::size_t i = 0; i < 4; ++i) {
        CHECK(same.origin[i] == Bundle{static_cast<Vertex>(i)});
    }
}

TEST_CASE("merged graphs are biconnected and lift to connected bundles") {
    Rng rng(19);
    for (int round = 0; round < 80; ++round) {
        const std::size_t n = testing::pick(rng, 3, 9);
        const auto g = testing::random_connected(n, rng, 1, 6);
        const auto u = random_additive(n, 9, rng);
        const auto t = block_cut_tree(g);
        for (std::size_t blk = 0; blk < t.blocks.size(); ++blk) {
            const auto m = merge_exterior(g, u, t, blk);
            CHECK(is_biconnected(m.graph));
            CHECK(m.utility.total() == u.total());
            for (VertexMask mask = 1; mask < (VertexMask{1} << m.graph.size()); ++mask) {
                if (is_connected_mask(m.graph, mask)) {
                    CHECK(is_connected(g, m.lift(from_mask(mask))));
                }
            }
        }
    }
}

}
