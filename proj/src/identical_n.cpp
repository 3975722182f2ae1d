#include "graphfair/identical_n.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

#include "graphfair/two_agents.hpp"

namespace graphfair {

namespace {

Bundle lift(const Bundle& origin, const Bundle& local) {
    Bundle out;
    out.reserve(local.size());
    for (Vertex v : local) {
        out.push_back(origin[static_cast<std::size_t>(v)]);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

Allocation leaf_peeling_allocation(const ItemGraph& graph, std::size_t n) {
    if (n == 0) {
        throw InvalidInput("no agents");
    }
    if (!is_connected(graph)) {
        throw PreconditionViolated("graph not connected");
    }
    const std::size_t size = graph.size();
    std::vector<std::vector<Vertex>> tree(size);
    std::vector<bool> seen(size, false);
    std::deque<Vertex> queue{0};
    seen[0] = true;
    while (!queue.empty()) {
        const Vertex v = queue.front();
        queue.pop_front();
        for (Vertex w : graph.neighbors(v)) {
            if (!seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = true;
                tree[static_cast<std::size_t>(v)].push_back(w);
                tree[static_cast<std::size_t>(w)].push_back(v);
                queue.push_back(w);
            }
        }
    }

    std::vector<std::size_t> degree(size);
    for (std::size_t v = 0; v < size; ++v) {
        degree[v] = tree[v].size();
    }
    std::vector<bool> left(size, true);
    std::size_t remaining = size;
    std::vector<Bundle> bundles(n);
    for (std::size_t a = 0; a + 1 < n && remaining >= 2; ++a) {
        std::size_t leaf = 0;
        while (!left[leaf] || degree[leaf] != 1) {
            ++leaf;
        }
        bundles[a] = {static_cast<Vertex>(leaf)};
        left[leaf] = false;
        --remaining;
        for (Vertex w : tree[leaf]) {
            if (left[static_cast<std::size_t>(w)]) {
                --degree[static_cast<std::size_t>(w)];
            }
        }
    }
    for (std::size_t v = 0; v < size; ++v) {
        if (left[v]) {
            bundles[n - 1].push_back(static_cast<Vertex>(v));
        }
    }
    return Allocation(std::move(bundles));
}

Value potential(const UtilityFunction& u, const Allocation& alloc) {
    Value phi = 0;
    for (const auto& b : alloc.bundles) {
        const Value x = u.of(b);
        phi += x * x;
    }
    return phi;
}

LocalImprovementResult local_improvement_34pmms(const ItemGraph& graph, const UtilityFunction& u, std::size_t n) {
    return local_improvement_34pmms(graph, u, leaf_peeling_allocation(graph, n));
}

LocalImprovementResult local_improvement_34pmms(const ItemGraph& graph, const UtilityFunction& u,
                                                Allocation start) {
    if (!u.is_additive()) {
        throw PreconditionViolated("local improvement needs an additive utility");
    }
    if (u.n_vertices() != graph.size()) {
        throw InvalidInput("utility length does not match the graph");
    }
    validate_allocation(graph, start);
    if (!is_connected_allocation(graph, start)) {
        throw PreconditionViolated("start allocation is not connected");
    }

    const std::size_t n = start.agents();
    const Value span = static_cast<Value>(graph.size()) * u.max_item();
    const Value bound = static_cast<Value>(n) * span * span;

    LocalImprovementResult out;
    out.allocation = std::move(start);
    auto& bundles = out.allocation.bundles;
    out.potential.push_back(potential(u, out.allocation));

    bool improved = true;
    while (improved) {
        improved = false;
        for (std::size_t i = 0; i < n && !improved; ++i) {
            for (std::size_t j = 0; j < n && !improved; ++j) {
                if (i == j || bundles[j].empty()) {
                    continue;
                }
                if (!bundles[i].empty() && !bundles_adjacent(graph, bundles[i], bundles[j])) {
                    continue;
                }
                const Bundle joint = merge_bundles(bundles[i], bundles[j]);
                const auto split = two_identical_34pmms(graph.induced(joint), u.restricted(joint));
                Bundle x = lift(joint, split.x);
                Bundle y = lift(joint, split.y);
                if (u.of(x) > u.of(y)) {
                    std::swap(x, y);
                }
                if (u.of(bundles[i]) >= u.of(x)) {
                    continue;
                }
                bundles[i] = std::move(x);
                bundles[j] = std::move(y);
                ++out.iterations;
                const Value phi = potential(u, out.allocation);
                if (phi >= out.potential.back()) {
                    throw std::logic_error("potential did not decrease");
                }
                out.potential.push_back(phi);
                if (static_cast<Value>(out.iterations) > bound) {
                    throw std::logic_error("iteration bound exceeded");
                }
                improved = true;
            }
        }
    }
    return out;
}

}  // namespace graphfair
