#ifndef GRAPHFAIR_TESTS_SUPPORT_HPP
#define GRAPHFAIR_TESTS_SUPPORT_HPP

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "graphfair/generate.hpp"
#include "graphfair/instance.hpp"

namespace graphfair::testing {

inline std::size_t pick(Rng& rng, std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

// Random tree plus each missing edge with probability num/den.
inline ItemGraph random_connected(std::size_t n, Rng& rng, int num = 1, int den = 4) {
    const ItemGraph tree = random_tree(n, rng);
    auto edges = tree.edges();
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a + 1; b < n; ++b) {
            if (!tree.adjacent(static_cast<Vertex>(a), static_cast<Vertex>(b)) &&
                static_cast<int>(pick(rng, 0, static_cast<std::size_t>(den) - 1)) < num) {
                edges.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
            }
        }
    }
    return ItemGraph(n, edges);
}

// A Hamiltonian cycle through a shuffled order, plus random chords; n >= 3.
inline ItemGraph random_biconnected(std::size_t n, Rng& rng) {
    std::vector<Vertex> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < n; ++i) {
        edges.emplace_back(order[i], order[(i + 1) % n]);
    }
    const ItemGraph ring(n, edges);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a + 1; b < n; ++b) {
            if (!ring.adjacent(static_cast<Vertex>(a), static_cast<Vertex>(b)) && pick(rng, 0, 3) == 0) {
                edges.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
            }
        }
    }
    return ItemGraph(n, edges);
}

inline UtilityFunction random_binary(std::size_t n, Rng& rng) {
    std::vector<Value> v(n);
    for (auto& x : v) {
        x = static_cast<Value>(pick(rng, 0, 1));
    }
    return UtilityFunction::additive(std::move(v));
}

// Monotone table: random values closed upward under single-element extension.
inline UtilityFunction random_monotone_table(std::size_t n, Value umax, Rng& rng) {
    std::vector<Value> t(std::size_t{1} << n, 0);
    std::uniform_int_distribution<Value> dist(0, umax);
    for (std::size_t m = 1; m < t.size(); ++m) {
        Value v = dist(rng);
        for (std::size_t i = 0; i < n; ++i) {
            if (m & (std::size_t{1} << i)) {
                v = std::max(v, t[m & ~(std::size_t{1} << i)]);
            }
        }
        t[m] = v;
    }
    return UtilityFunction::tabulated(n, std::move(t), true);
}

inline bool prefixes_and_suffixes_connected(const ItemGraph& g, const std::vector<Vertex>& seq) {
    for (std::size_t k = 1; k <= seq.size(); ++k) {
        Bundle pre(seq.begin(), seq.begin() + static_cast<std::ptrdiff_t>(k));
        Bundle suf(seq.end() - static_cast<std::ptrdiff_t>(k), seq.end());
        std::sort(pre.begin(), pre.end());
        std::sort(suf.begin(), suf.end());
        if (!is_connected(g, pre) || !is_connected(g, suf)) {
            return false;
        }
    }
    return true;
}

}  // namespace graphfair::testing

#endif
