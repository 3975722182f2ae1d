#include "graphfair/two_agents.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <stdexcept>

namespace graphfair {

namespace {

void require_additive(const UtilityFunction& u, std::size_t n) {
    if (!u.is_additive()) {
        throw PreconditionViolated("two-agent routines need additive utilities");
    }
    if (u.n_vertices() != n) {
        throw InvalidInput("utility length does not match the graph");
    }
}

Bundle complement(std::size_t n, const Bundle& part) {
    Bundle out;
    for (std::size_t v = 0, k = 0; v < n; ++v) {
        if (k < part.size() && part[k] == static_cast<Vertex>(v)) {
            ++k;
        } else {
            out.push_back(static_cast<Vertex>(v));
        }
    }
    return out;
}

}  // namespace

std::string to_string(Alg1Case c) {
    switch (c) {
        case Alg1Case::single_vertex:
            return "i";
        case Alg1Case::balanced:
            return "ii";
        case Alg1Case::third_vertex:
            return "iii";
    }
    return "?";
}

std::string to_string(TwoAgentCertificate c) {
    return c == TwoAgentCertificate::exact_pmms ? "exact-PMMS" : "merged-3/4";
}

std::vector<Vertex> vertices_by_value(const UtilityFunction& u) {
    std::vector<Vertex> order(u.n_vertices());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return u.item(a) > u.item(b); });
    return order;
}

TwoSplit alg1_biconnected(const ItemGraph& graph, const UtilityFunction& u) {
    require_additive(u, graph.size());
    if (!is_biconnected(graph)) {
        throw PreconditionViolated("not biconnected");
    }
    const std::size_t n = graph.size();
    const Value total = u.total();
    const auto ranked = vertices_by_value(u);
    const Vertex v_star = ranked[0];

    TwoSplit out;
    if (8 * u.item(v_star) >= 3 * total) {
        out.y = {v_star};
        out.x = complement(n, out.y);
        out.alg1_case = Alg1Case::single_vertex;
        return out;
    }

    // Here some three vertices carry value, so n >= 3.
    const Vertex w_star = ranked[1];
    const auto ordering = bipolar_ordering(graph, v_star, w_star);
    const auto& seq = ordering.sequence;
    std::vector<Value> prefix(n + 1, 0);
    for (std::size_t i = 0; i < n; ++i) {
        prefix[i + 1] = prefix[i] + u.item(seq[i]);
    }
    std::size_t j = 1;
    while (prefix[j] < total - prefix[j]) {
        ++j;
    }
    std::size_t y_len = j;
    if (prefix[j - 1] >= total - prefix[j]) {
        y_len = j - 1;
    }
    out.y.assign(seq.begin(), seq.begin() + static_cast<std::ptrdiff_t>(y_len));
    out.x.assign(seq.begin() + static_cast<std::ptrdiff_t>(y_len), seq.end());
    std::sort(out.x.begin(), out.x.end());
    std::sort(out.y.begin(), out.y.end());
    const Value low = std::min(u.of(out.x), u.of(out.y));
    out.alg1_case = 8 * low >= 3 * total ? Alg1Case::balanced : Alg1Case::third_vertex;
    return out;
}

TwoSplit two_identical_34pmms(const ItemGraph& graph, const UtilityFunction& u) {
    require_additive(u, graph.size());
    if (!is_connected(graph)) {
        throw PreconditionViolated("graph not connected");
    }
    const auto tree = block_cut_tree(graph);
    if (tree.cut_vertices.empty()) {
        return alg1_biconnected(graph, u);
    }

    std::vector<SidePartition> sides;
    std::vector<Value> ux, uy;
    Value best_min = -1;
    std::size_t at = 0;
    for (auto [block, cut] : tree.tree_edges) {
        sides.push_back(side_partition(graph, tree, block, cut));
        ux.push_back(u.of(sides.back().x_side));
        uy.push_back(u.of(sides.back().y_side));
        if (std::min(ux.back(), uy.back()) > best_min) {
            best_min = std::min(ux.back(), uy.back());
            at = sides.size() - 1;
        }
    }
    auto find = [&](std::size_t block, Vertex cut) {
        const auto it = std::lower_bound(tree.tree_edges.begin(), tree.tree_edges.end(), std::pair{block, cut});
        return static_cast<std::size_t>(it - tree.tree_edges.begin());
    };
    // Walk between tied maximizers. A light pair (B,c) moves to another block at
    // c whose X side outweighs its Y side; a heavy pair moves to another cut c'
    // of B with u(Y(B,c')) > u(Y(B,c)).
    for (std::size_t step = 0;; ++step) {
        if (step > sides.size()) {
            throw std::logic_error("no block/cut pair supports the split");
        }
        const auto [block, cut] = tree.tree_edges[at];
        std::optional<std::size_t> next;
        if (ux[at] <= uy[at]) {
            for (std::size_t b = 0; b < tree.blocks.size() && !next; ++b) {
                if (b != block && tree.incident(b, cut)) {
                    const std::size_t k = find(b, cut);
                    if (ux[k] > uy[k]) {
                        next = k;
                    }
                }
            }
        } else {
            for (Vertex c : tree.cuts_of(block)) {
                const std::size_t k = find(block, c);
                if (c != cut && uy[k] > uy[at]) {
                    next = k;
                    break;
                }
            }
        }
        if (!next) {
            break;
        }
        at = *next;
    }
    const SidePartition* best = &sides[at];
    if (u.of(best->x_side) <= u.of(best->y_side)) {
        return {best->x_side, best->y_side, TwoAgentCertificate::exact_pmms, std::nullopt};
    }

    const auto merged = merge_exterior(graph, u, tree, best->block);
    auto inner = alg1_biconnected(merged.graph, merged.utility);
    return {merged.lift(inner.x), merged.lift(inner.y), TwoAgentCertificate::three_quarters, inner.alg1_case};
}

Allocation cut_and_choose_34(const ItemGraph& graph, const UtilityFunction& u1, const UtilityFunction& u2) {
    require_additive(u2, graph.size());
    const auto split = two_identical_34pmms(graph, u1);
    const Value vx = u2.of(split.x);
    const Value vy = u2.of(split.y);
    bool takes_x = vx > vy;
    if (vx == vy) {
        takes_x = !std::binary_search(split.x.begin(), split.x.end(), 0);
    }
    return takes_x ? Allocation({split.y, split.x}) : Allocation({split.x, split.y});
}

}  // namespace graphfair
