#include "graphfair/instance.hpp"

#include <algorithm>
#include <iterator>
#include <string>

namespace graphfair {

Allocation::Allocation(std::vector<Bundle> b) : bundles(std::move(b)) {
    for (auto& bundle : bundles) {
        std::sort(bundle.begin(), bundle.end());
    }
}

bool Instance::identical() const {
    return std::adjacent_find(agents.begin(), agents.end(), std::not_equal_to<>()) == agents.end();
}

std::vector<std::string> instance_issues(const Instance& instance) {
    std::vector<std::string> issues;
    if (instance.graph.size() == 0) {
        issues.emplace_back("graph has no vertices");
    } else if (!is_connected(instance.graph)) {
        issues.emplace_back("graph not connected");
    }
    if (instance.agents.empty()) {
        issues.emplace_back("instance has no agents");
    }
    for (std::size_t i = 0; i < instance.agents.size(); ++i) {
        if (instance.agents[i].n_vertices() != instance.graph.size()) {
            issues.push_back("agent " + std::to_string(i) + " has utilities for " +
                             std::to_string(instance.agents[i].n_vertices()) + " vertices, graph has " +
                             std::to_string(instance.graph.size()));
        }
    }
    return issues;
}

void validate_instance(const Instance& instance) {
    const auto issues = instance_issues(instance);
    if (issues.empty()) {
        return;
    }
    std::string message = "invalid instance: " + issues.front();
    for (std::size_t i = 1; i < issues.size(); ++i) {
        message += "; " + issues[i];
    }
    throw InvalidInput(message);
}

void validate_allocation(const ItemGraph& graph, const Allocation& alloc) {
    std::vector<int> owner(graph.size(), -1);
    for (std::size_t i = 0; i < alloc.agents(); ++i) {
        for (Vertex v : alloc[i]) {
            if (v < 0 || static_cast<std::size_t>(v) >= graph.size()) {
                throw InvalidInput("bundle " + std::to_string(i) + " has vertex " + std::to_string(v) +
                                   " outside the graph");
            }
            auto& o = owner[static_cast<std::size_t>(v)];
            if (o >= 0) {
                throw InvalidInput("vertex " + std::to_string(v) + " is in bundles " + std::to_string(o) + " and " +
                                   std::to_string(i));
            }
            o = static_cast<int>(i);
        }
    }
    for (std::size_t v = 0; v < graph.size(); ++v) {
        if (owner[v] < 0) {
            throw InvalidInput("vertex " + std::to_string(v) + " is not allocated");
        }
    }
}

bool is_connected_allocation(const ItemGraph& graph, const Allocation& alloc) {
    return std::all_of(alloc.bundles.begin(), alloc.bundles.end(),
                       [&](const Bundle& b) { return is_connected(graph, b); });
}

bool bundles_adjacent(const ItemGraph& graph, const Bundle& a, const Bundle& b) {
    for (Vertex v : a) {
        for (Vertex w : graph.neighbors(v)) {
            if (std::binary_search(b.begin(), b.end(), w)) {
                return true;
            }
        }
    }
    return false;
}

std::set<AgentPair> neighbors_under_allocation(const ItemGraph& graph, const Allocation& alloc) {
    std::vector<int> owner(graph.size(), -1);
    for (std::size_t i = 0; i < alloc.agents(); ++i) {
        for (Vertex v : alloc[i]) {
            owner.at(static_cast<std::size_t>(v)) = static_cast<int>(i);
        }
    }
    std::set<AgentPair> out;
    for (auto [a, b] : graph.edges()) {
        const int oa = owner[static_cast<std::size_t>(a)];
        const int ob = owner[static_cast<std::size_t>(b)];
        if (oa >= 0 && ob >= 0 && oa != ob) {
            out.emplace(static_cast<std::size_t>(std::min(oa, ob)), static_cast<std::size_t>(std::max(oa, ob)));
        }
    }
    for (std::size_t i = 0; i < alloc.agents(); ++i) {
        if (!alloc[i].empty()) {
            continue;
        }
        for (std::size_t j = 0; j < alloc.agents(); ++j) {
            if (j != i) {
                out.emplace(std::min(i, j), std::max(i, j));
            }
        }
    }
    return out;
}

Bundle merge_bundles(const Bundle& a, const Bundle& b) {
    Bundle out;
    out.reserve(a.size() + b.size());
    std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

}  // namespace graphfair
