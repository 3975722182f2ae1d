#include "graphfair/decomposition.hpp"

#include <algorithm>
#include <deque>
#include <list>
#include <string>

namespace graphfair {

namespace {

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

struct Frame {
    Vertex v;
    Vertex parent;
    std::size_t next;
};

}  // namespace

bool BlockCutTree::is_cut(Vertex v) const { return std::binary_search(cut_vertices.begin(), cut_vertices.end(), v); }

Bundle BlockCutTree::cuts_of(std::size_t block) const {
    Bundle out;
    for (Vertex v : blocks.at(block)) {
        if (is_cut(v)) {
            out.push_back(v);
        }
    }
    return out;
}

bool BlockCutTree::incident(std::size_t block, Vertex cut) const {
    return std::binary_search(tree_edges.begin(), tree_edges.end(), std::make_pair(block, cut));
}

BlockCutTree block_cut_tree(const ItemGraph& graph) {
    if (!is_connected(graph)) {
        throw PreconditionViolated("graph not connected");
    }
    const std::size_t n = graph.size();
    BlockCutTree tree;
    if (n == 0) {
        return tree;
    }
    if (n == 1) {
        tree.blocks.push_back({0});
        return tree;
    }
    std::vector<int> disc(n, -1);
    std::vector<int> low(n, 0);
    std::vector<char> cut(n, 0);
    std::vector<Vertex> stack;
    int time = 0;
    std::size_t root_children = 0;

    std::vector<Frame> frames{{0, -1, 0}};
    disc[0] = low[0] = time++;
    stack.push_back(0);
    while (!frames.empty()) {
        Frame& f = frames.back();
        const auto& adj = graph.neighbors(f.v);
        if (f.next < adj.size()) {
            const Vertex w = adj[f.next++];
            const auto wi = static_cast<std::size_t>(w);
            if (w == f.parent) {
                continue;
            }
            if (disc[wi] < 0) {
                disc[wi] = low[wi] = time++;
                stack.push_back(w);
                frames.push_back({w, f.v, 0});
            } else {
                low[static_cast<std::size_t>(f.v)] = std::min(low[static_cast<std::size_t>(f.v)], disc[wi]);
            }
            continue;
        }
        const Vertex child = f.v;
        frames.pop_back();
        if (frames.empty()) {
            break;
        }
        const Vertex v = frames.back().v;
        const auto vi = static_cast<std::size_t>(v);
        const auto ci = static_cast<std::size_t>(child);
        low[vi] = std::min(low[vi], low[ci]);
        if (low[ci] >= disc[vi]) {
            Bundle block{v};
            Vertex popped = -1;
            while (popped != child) {
                popped = stack.back();
                stack.pop_back();
                block.push_back(popped);
            }
            std::sort(block.begin(), block.end());
            tree.blocks.push_back(std::move(block));
            if (frames.size() > 1) {
                cut[vi] = 1;
            } else {
                ++root_children;
            }
        }
    }
    if (root_children > 1) {
        cut[0] = 1;
    }
    for (std::size_t v = 0; v < n; ++v) {
        if (cut[v]) {
            tree.cut_vertices.push_back(static_cast<Vertex>(v));
        }
    }
    for (std::size_t b = 0; b < tree.blocks.size(); ++b) {
        for (Vertex v : tree.blocks[b]) {
            if (cut[static_cast<std::size_t>(v)]) {
                tree.tree_edges.emplace_back(b, v);
            }
        }
    }
    std::sort(tree.tree_edges.begin(), tree.tree_edges.end());
    return tree;
}

bool is_biconnected(const ItemGraph& graph) {
    return graph.size() > 0 && is_connected(graph) && block_cut_tree(graph).cut_vertices.empty();
}

BipolarOrdering bipolar_ordering(const ItemGraph& graph, Vertex source, Vertex sink) {
    const std::size_t n = graph.size();
    if (source < 0 || sink < 0 || static_cast<std::size_t>(source) >= n || static_cast<std::size_t>(sink) >= n) {
        throw InvalidInput("bipolar endpoints out of range");
    }
    if (source == sink) {
        throw InvalidInput("bipolar ordering needs distinct source and sink");
    }
    if (!is_biconnected(graph)) {
        throw PreconditionViolated("not biconnected");
    }

    // Adjacency with the edge source-sink present and visited first.
    std::vector<std::vector<Vertex>> adj(n);
    for (std::size_t v = 0; v < n; ++v) {
        adj[v] = graph.neighbors(static_cast<Vertex>(v));
    }
    auto& from_source = adj[static_cast<std::size_t>(source)];
    std::erase(from_source, sink);
    from_source.insert(from_source.begin(), sink);
    if (!graph.adjacent(source, sink)) {
        adj[static_cast<std::size_t>(sink)].push_back(source);
    }

    std::vector<int> pre(n, -1);
    std::vector<Vertex> parent(n, -1);
    std::vector<Vertex> low(n, -1);
    std::vector<Vertex> order;
    order.reserve(n);
    std::vector<Frame> frames{{source, -1, 0}};
    pre[static_cast<std::size_t>(source)] = 0;
    low[static_cast<std::size_t>(source)] = source;
    order.push_back(source);
    auto lower = [&](Vertex a, Vertex b) { return pre[static_cast<std::size_t>(a)] <= pre[static_cast<std::size_t>(b)] ? a : b; };
    while (!frames.empty()) {
        Frame& f = frames.back();
        const auto vi = static_cast<std::size_t>(f.v);
        if (f.next < adj[vi].size()) {
            const Vertex w = adj[vi][f.next++];
            const auto wi = static_cast<std::size_t>(w);
            if (w == f.parent) {
                continue;
            }
            if (pre[wi] < 0) {
                pre[wi] = static_cast<int>(order.size());
                parent[wi] = f.v;
                low[wi] = w;
                order.push_back(w);
                frames.push_back({w, f.v, 0});
            } else {
                low[vi] = lower(low[vi], w);
            }
            continue;
        }
        const Vertex child = f.v;
        frames.pop_back();
        if (!frames.empty()) {
            const auto pi = static_cast<std::size_t>(frames.back().v);
            low[pi] = lower(low[pi], low[static_cast<std::size_t>(child)]);
        }
    }

    std::list<Vertex> seq{source, sink};
    std::vector<std::list<Vertex>::iterator> where(n);
    where[static_cast<std::size_t>(source)] = seq.begin();
    where[static_cast<std::size_t>(sink)] = std::next(seq.begin());
    // true means "+", false means "-".
    std::vector<char> sign(n, 0);
    sign[static_cast<std::size_t>(source)] = 0;
    for (Vertex v : order) {
        if (v == source || v == sink) {
            continue;
        }
        const auto vi = static_cast<std::size_t>(v);
        const auto pv = static_cast<std::size_t>(parent[vi]);
        if (!sign[static_cast<std::size_t>(low[vi])]) {
            where[vi] = seq.insert(where[pv], v);
            sign[pv] = 1;
        } else {
            where[vi] = seq.insert(std::next(where[pv]), v);
            sign[pv] = 0;
        }
    }
    return {std::vector<Vertex>(seq.begin(), seq.end()), source, sink};
}

bool is_bipolar_ordering(const ItemGraph& graph, const std::vector<Vertex>& sequence, Vertex source, Vertex sink) {
    const std::size_t n = graph.size();
    if (sequence.size() != n || n == 0 || sequence.front() != source || sequence.back() != sink) {
        return false;
    }
    std::vector<char> seen(n, 0);
    for (Vertex v : sequence) {
        if (v < 0 || static_cast<std::size_t>(v) >= n || seen[static_cast<std::size_t>(v)]) {
            return false;
        }
        seen[static_cast<std::size_t>(v)] = 1;
    }
    // A prefix stays connected iff each vertex after the first has an earlier neighbour;
    // a suffix likewise with later neighbours.
    std::vector<std::size_t> pos(n);
    for (std::size_t i = 0; i < n; ++i) {
        pos[static_cast<std::size_t>(sequence[i])] = i;
    }
    for (std::size_t i = 0; i < n; ++i) {
        const auto& adj = graph.neighbors(sequence[i]);
        const bool earlier = std::any_of(adj.begin(), adj.end(), [&](Vertex w) { return pos[static_cast<std::size_t>(w)] < i; });
        const bool later = std::any_of(adj.begin(), adj.end(), [&](Vertex w) { return pos[static_cast<std::size_t>(w)] > i; });
        if ((i > 0 && !earlier) || (i + 1 < n && !later)) {
            return false;
        }
    }
    return true;
}

SidePartition side_partition(const ItemGraph& graph, const BlockCutTree& tree, std::size_t block, Vertex cut) {
    if (block >= tree.blocks.size() || !tree.incident(block, cut)) {
        throw InvalidInput("block " + std::to_string(block) + " and vertex " + std::to_string(cut) +
                           " are not incident in the block tree");
    }
    const auto& members = tree.blocks[block];
    const Vertex start = members.front() != cut ? members.front() : members.at(1);
    std::vector<char> in_x(graph.size(), 0);
    std::deque<Vertex> queue{start};
    in_x[static_cast<std::size_t>(start)] = 1;
    in_x[static_cast<std::size_t>(cut)] = 2;
    while (!queue.empty()) {
        const Vertex v = queue.front();
        queue.pop_front();
        for (Vertex w : graph.neighbors(v)) {
            if (!in_x[static_cast<std::size_t>(w)]) {
                in_x[static_cast<std::size_t>(w)] = 1;
                queue.push_back(w);
            }
        }
    }
    SidePartition out{block, cut, {}, {}};
    for (std::size_t v = 0; v < graph.size(); ++v) {
        (in_x[v] == 1 ? out.x_side : out.y_side).push_back(static_cast<Vertex>(v));
    }
    return out;
}

Bundle MergedGraph::lift(const Bundle& merged_bundle) const {
    Bundle out;
    for (Vertex v : merged_bundle) {
        const auto& o = origin.at(static_cast<std::size_t>(v));
        out.insert(out.end(), o.begin(), o.end());
    }
    std::sort(out.begin(), out.end());
    return out;
}

MergedGraph merge_exterior(const ItemGraph& graph, const UtilityFunction& u, const BlockCutTree& tree,
                           std::size_t block) {
    if (!u.is_additive()) {
        throw PreconditionViolated("merging needs an additive utility");
    }
    const Bundle& members = tree.blocks.at(block);
    std::vector<Bundle> origin;
    std::vector<Value> values;
    for (Vertex v : members) {
        Bundle absorbed{v};
        if (tree.is_cut(v)) {
            absorbed = side_partition(graph, tree, block, v).y_side;
        }
        values.push_back(u.of(absorbed));
        origin.push_back(std::move(absorbed));
    }
    MergedGraph out{graph.induced(members), UtilityFunction::additive(std::move(values)), std::move(origin)};
    return out;
}

}  // namespace graphfair
