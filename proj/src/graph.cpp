#include "graphfair/graph.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <string>

namespace graphfair {

namespace {

std::string edge_text(Vertex a, Vertex b) { return "{" + std::to_string(a) + "," + std::to_string(b) + "}"; }

}  // namespace

ItemGraph::ItemGraph(std::size_t n_vertices, std::span<const Edge> edges) : adjacency_(n_vertices) {
    const auto n = static_cast<Vertex>(n_vertices);
    edges_.reserve(edges.size());
    for (auto [a, b] : edges) {
        if (a < 0 || b < 0 || a >= n || b >= n) {
            throw InvalidInput("edge " + edge_text(a, b) + " has an endpoint outside 0.." + std::to_string(n - 1));
        }
        if (a == b) {
            throw InvalidInput("graph is not simple: self-loop at vertex " + std::to_string(a));
        }
        edges_.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(edges_.begin(), edges_.end());
    if (auto dup = std::adjacent_find(edges_.begin(), edges_.end()); dup != edges_.end()) {
        throw InvalidInput("graph is not simple: duplicate edge " + edge_text(dup->first, dup->second));
    }
    for (auto [a, b] : edges_) {
        adjacency_[static_cast<std::size_t>(a)].push_back(b);
        adjacency_[static_cast<std::size_t>(b)].push_back(a);
    }
    for (auto& list : adjacency_) {
        std::sort(list.begin(), list.end());
    }
    if (n_vertices <= 64) {
        masks_.resize(n_vertices, 0);
        for (auto [a, b] : edges_) {
            masks_[static_cast<std::size_t>(a)] |= bit(b);
            masks_[static_cast<std::size_t>(b)] |= bit(a);
        }
    }
}

ItemGraph ItemGraph::path(std::size_t n) {
    std::vector<Edge> edges;
    for (std::size_t i = 1; i < n; ++i) {
        edges.emplace_back(static_cast<Vertex>(i - 1), static_cast<Vertex>(i));
    }
    return ItemGraph(n, edges);
}

ItemGraph ItemGraph::cycle(std::size_t n) {
    if (n < 3) {
        throw InvalidInput("a cycle needs at least 3 vertices");
    }
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < n; ++i) {
        edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % n));
    }
    return ItemGraph(n, edges);
}

ItemGraph ItemGraph::star(std::size_t leaves) {
    std::vector<Edge> edges;
    for (std::size_t i = 1; i <= leaves; ++i) {
        edges.emplace_back(0, static_cast<Vertex>(i));
    }
    return ItemGraph(leaves + 1, edges);
}

bool ItemGraph::adjacent(Vertex a, Vertex b) const {
    const auto& list = neighbors(a);
    return std::binary_search(list.begin(), list.end(), b);
}

VertexMask ItemGraph::all_mask() const {
    if (size() > 64) {
        throw SizeGuardExceeded("graph with " + std::to_string(size()) + " vertices does not fit a 64-bit mask");
    }
    return size() == 64 ? ~VertexMask{0} : (VertexMask{1} << size()) - 1;
}

Bundle ItemGraph::all_vertices() const {
    Bundle all(size());
    for (std::size_t i = 0; i < all.size(); ++i) {
        all[i] = static_cast<Vertex>(i);
    }
    return all;
}

ItemGraph ItemGraph::induced(const Bundle& bundle) const {
    std::vector<Vertex> local(size(), -1);
    for (std::size_t i = 0; i < bundle.size(); ++i) {
        local.at(static_cast<std::size_t>(bundle[i])) = static_cast<Vertex>(i);
    }
    std::vector<Edge> edges;
    for (auto [a, b] : edges_) {
        const Vertex la = local[static_cast<std::size_t>(a)];
        const Vertex lb = local[static_cast<std::size_t>(b)];
        if (la >= 0 && lb >= 0) {
            edges.emplace_back(la, lb);
        }
    }
    return ItemGraph(bundle.size(), edges);
}

ItemGraph ItemGraph::without_edge(Edge e) const {
    const Edge key{std::min(e.first, e.second), std::max(e.first, e.second)};
    std::vector<Edge> edges;
    for (const auto& edge : edges_) {
        if (edge != key) {
            edges.push_back(edge);
        }
    }
    if (edges.size() == edges_.size()) {
        throw InvalidInput("edge " + edge_text(key.first, key.second) + " is not in the graph");
    }
    return ItemGraph(size(), edges);
}

bool ItemGraph::is_tree() const { return size() > 0 && edge_count() + 1 == size() && graphfair::is_connected(*this); }

bool ItemGraph::is_path() const {
    if (!is_tree()) {
        return false;
    }
    return std::all_of(adjacency_.begin(), adjacency_.end(), [](const auto& list) { return list.size() <= 2; });
}

std::vector<Vertex> ItemGraph::path_order() const {
    if (!is_path()) {
        throw PreconditionViolated("graph is not a path");
    }
    std::vector<Vertex> order;
    if (size() == 1) {
        return {0};
    }
    Vertex start = 0;
    while (degree(start) != 1) {
        ++start;
    }
    Vertex prev = -1;
    Vertex cur = start;
    while (true) {
        order.push_back(cur);
        Vertex next = -1;
        for (Vertex w : neighbors(cur)) {
            if (w != prev) {
                next = w;
            }
        }
        if (next < 0) {
            break;
        }
        prev = cur;
        cur = next;
    }
    return order;
}

bool is_connected(const ItemGraph& graph, const Bundle& bundle) {
    if (bundle.empty()) {
        return true;
    }
    std::vector<char> inside(graph.size(), 0);
    for (Vertex v : bundle) {
        if (v < 0 || static_cast<std::size_t>(v) >= graph.size()) {
            throw InvalidInput("vertex " + std::to_string(v) + " out of range");
        }
        inside[static_cast<std::size_t>(v)] = 1;
    }
    std::vector<char> seen(graph.size(), 0);
    std::deque<Vertex> queue{bundle.front()};
    seen[static_cast<std::size_t>(bundle.front())] = 1;
    std::size_t reached = 0;
    while (!queue.empty()) {
        const Vertex v = queue.front();
        queue.pop_front();
        ++reached;
        for (Vertex w : graph.neighbors(v)) {
            const auto wi = static_cast<std::size_t>(w);
            if (inside[wi] && !seen[wi]) {
                seen[wi] = 1;
                queue.push_back(w);
            }
        }
    }
    return reached == static_cast<std::size_t>(std::count(inside.begin(), inside.end(), 1));
}

bool is_connected(const ItemGraph& graph) { return is_connected(graph, graph.all_vertices()); }

bool is_connected_mask(const ItemGraph& graph, VertexMask mask) {
    if (mask == 0) {
        return true;
    }
    VertexMask reached = mask & (~mask + 1);
    VertexMask frontier = reached;
    while (frontier != 0) {
        VertexMask next = 0;
        while (frontier != 0) {
            const int v = std::countr_zero(frontier);
            frontier &= frontier - 1;
            next |= graph.neighbor_mask(static_cast<Vertex>(v));
        }
        next &= mask & ~reached;
        reached |= next;
        frontier = next;
    }
    return reached == mask;
}

std::vector<Bundle> components(const ItemGraph& graph, const Bundle& bundle) {
    std::vector<char> inside(graph.size(), 0);
    for (Vertex v : bundle) {
        inside.at(static_cast<std::size_t>(v)) = 1;
    }
    std::vector<char> seen(graph.size(), 0);
    std::vector<Bundle> out;
    for (Vertex s : bundle) {
        if (seen[static_cast<std::size_t>(s)]) {
            continue;
        }
        Bundle comp;
        std::deque<Vertex> queue{s};
        seen[static_cast<std::size_t>(s)] = 1;
        while (!queue.empty()) {
            const Vertex v = queue.front();
            queue.pop_front();
            comp.push_back(v);
            for (Vertex w : graph.neighbors(v)) {
                const auto wi = static_cast<std::size_t>(w);
                if (inside[wi] && !seen[wi]) {
                    seen[wi] = 1;
                    queue.push_back(w);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace graphfair
