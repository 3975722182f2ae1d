#include "graphfair/tree_smms.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <numeric>

namespace graphfair {

namespace {

constexpr Value kNone = std::numeric_limits<Value>::min() / 4;

void require_tree(const ItemGraph& tree, const UtilityFunction& u) {
    if (!tree.is_tree()) {
        throw PreconditionViolated("not a tree");
    }
    if (!u.is_additive()) {
        throw PreconditionViolated("tree SMMS needs an additive utility");
    }
    if (u.n_vertices() != tree.size()) {
        throw InvalidInput("utility length does not match the graph");
    }
}

struct Rooted {
    std::vector<Vertex> parent;
    std::vector<std::vector<Vertex>> children;
    std::vector<Vertex> post_order;
};

Rooted root_tree(const ItemGraph& tree, Vertex root) {
    const std::size_t n = tree.size();
    Rooted r;
    r.parent.assign(n, -1);
    r.children.assign(n, {});
    std::vector<Vertex> pre;
    std::vector<bool> seen(n, false);
    std::vector<Vertex> stack{root};
    seen[static_cast<std::size_t>(root)] = true;
    while (!stack.empty()) {
        const Vertex v = stack.back();
        stack.pop_back();
        pre.push_back(v);
        for (Vertex w : tree.neighbors(v)) {
            if (!seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = true;
                r.parent[static_cast<std::size_t>(w)] = v;
                r.children[static_cast<std::size_t>(v)].push_back(w);
                stack.push_back(w);
            }
        }
    }
    for (auto& c : r.children) {
        std::sort(c.begin(), c.end());
    }
    r.post_order.assign(pre.rbegin(), pre.rend());
    return r;
}

std::size_t greedy_parts(const Rooted& r, const UtilityFunction& u, Value threshold) {
    std::vector<Value> hanging(r.parent.size(), 0);
    std::size_t parts = 0;
    for (Vertex v : r.post_order) {
        auto& h = hanging[static_cast<std::size_t>(v)];
        h += u.item(v);
        if (h >= threshold) {
            ++parts;
            h = 0;
        }
        const Vertex p = r.parent[static_cast<std::size_t>(v)];
        if (p >= 0) {
            hanging[static_cast<std::size_t>(p)] += h;
        }
    }
    return parts;
}

// Grows the seeded bundles over the unassigned vertices; each vertex joins the
// adjacent bundle with the smallest index, repeated until nothing changes.
void absorb_rest(const ItemGraph& graph, std::vector<int>& owner) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t v = 0; v < graph.size(); ++v) {
            if (owner[v] >= 0) {
                continue;
            }
            int best = -1;
            for (Vertex w : graph.neighbors(static_cast<Vertex>(v))) {
                const int o = owner[static_cast<std::size_t>(w)];
                if (o >= 0 && (best < 0 || o < best)) {
                    best = o;
                }
            }
            if (best >= 0) {
                owner[v] = best;
                changed = true;
            }
        }
    }
}

Allocation from_owner(const std::vector<int>& owner, std::size_t n) {
    std::vector<Bundle> bundles(n);
    for (std::size_t v = 0; v < owner.size(); ++v) {
        bundles[static_cast<std::size_t>(owner[v])].push_back(static_cast<Vertex>(v));
    }
    return Allocation(std::move(bundles));
}

Value worst_off(const UtilityFunction& u, const Allocation& alloc) {
    Value w = std::numeric_limits<Value>::max();
    for (const auto& b : alloc.bundles) {
        w = std::min(w, u.of(b));
    }
    return w;
}

}  // namespace

Value tree_mms_value(const ItemGraph& tree, const UtilityFunction& u, std::size_t n) {
    require_tree(tree, u);
    if (n == 0) {
        throw InvalidInput("no agents");
    }
    const auto r = root_tree(tree, 0);
    Value lo = 0;
    Value hi = u.total() / static_cast<Value>(n);
    while (lo < hi) {
        const Value mid = lo + (hi - lo + 1) / 2;
        if (greedy_parts(r, u, mid) >= n) {
            lo = mid;
        } else {
            hi = mid - 1;
        }
    }
    return lo;
}

SubtreeTable::SubtreeTable(const ItemGraph& tree, const UtilityFunction& u, std::size_t n, Value mms, Vertex root)
    : n_(n), mms_(mms), root_(root) {
    require_tree(tree, u);
    if (mms <= 0) {
        throw PreconditionViolated("subtree table needs a positive MMS value");
    }
    const std::size_t size = tree.size();
    auto rooted = root_tree(tree, root);
    children_ = std::move(rooted.children);
    post_order_ = std::move(rooted.post_order);
    weight_.resize(size);
    for (std::size_t v = 0; v < size; ++v) {
        weight_[v] = u.item(static_cast<Vertex>(v));
    }
    const std::size_t cells = size * (n + 1) * (n + 1);
    open_.assign(cells, kNone);
    full_.assign(cells, Cell{});
    choice_.assign(size, {});
    for (Vertex v : post_order_) {
        build_vertex(v);
    }
}

std::size_t SubtreeTable::index(Vertex i, std::size_t j, std::size_t l) const {
    return (static_cast<std::size_t>(i) * (n_ + 1) + j) * (n_ + 1) + l;
}

void SubtreeTable::build_vertex(Vertex v) {
    const std::size_t w = n_ + 1;
    // U over the children processed so far; no children: U(0, l) = 0 for all l.
    std::vector<Value> acc(w * w, kNone);
    for (std::size_t l = 0; l < w; ++l) {
        acc[l] = 0;
    }
    auto& choices = choice_[static_cast<std::size_t>(v)];
    for (Vertex h : children_[static_cast<std::size_t>(v)]) {
        std::vector<Value> next(w * w, kNone);
        std::vector<std::pair<std::size_t, std::size_t>> pick(w * w, {0, 0});
        for (std::size_t j = 0; j < w; ++j) {
            for (std::size_t l = 0; l < w; ++l) {
                for (std::size_t jh = 0; jh <= j; ++jh) {
                    for (std::size_t lh = 0; lh <= l; ++lh) {
                        const Cell& c = full_[index(h, jh, lh)];
                        const Value rest = acc[(j - jh) * w + (l - lh)];
                        if (c.kind == Kind::none || rest == kNone) {
                            continue;
                        }
                        const Value total = c.value + rest;
                        if (total > next[j * w + l]) {
                            next[j * w + l] = total;
                            pick[j * w + l] = {jh, lh};
                        }
                    }
                }
            }
        }
        acc = std::move(next);
        choices.push_back(std::move(pick));
    }

    const Value own = weight_[static_cast<std::size_t>(v)];
    for (std::size_t j = 0; j < w; ++j) {
        for (std::size_t l = 0; l < w; ++l) {
            if (acc[j * w + l] != kNone) {
                open_[index(v, j, l)] = own + acc[j * w + l];
            }
        }
    }
    for (std::size_t j = 0; j < w; ++j) {
        for (std::size_t l = 0; l < w; ++l) {
            Cell& cell = full_[index(v, j, l)];
            const Value o = open_[index(v, j, l)];
            if (o != kNone) {
                cell = {o, Kind::open};
            } else if (j >= 1 && open_[index(v, j - 1, l)] != kNone && open_[index(v, j - 1, l)] > mms_) {
                cell = {0, Kind::closed_more};
            } else if (j >= 1 && l >= 1 && open_[index(v, j - 1, l - 1)] != kNone &&
                       open_[index(v, j - 1, l - 1)] >= mms_) {
                cell = {0, Kind::closed_exact};
            }
        }
    }
}

bool SubtreeTable::exists(Vertex i, std::size_t j, std::size_t l) const {
    if (j > n_ || l > n_) {
        return false;
    }
    return full_.at(index(i, j, l)).kind != Kind::none;
}

Value SubtreeTable::value(Vertex i, std::size_t j, std::size_t l) const {
    if (!exists(i, j, l)) {
        throw PreconditionViolated("no solution for this subtree entry");
    }
    return full_[index(i, j, l)].value;
}

void SubtreeTable::rebuild_open(Vertex i, std::size_t j, std::size_t l, std::vector<Bundle>& closed,
                                Bundle& open) const {
    open.push_back(i);
    const auto& kids = children_[static_cast<std::size_t>(i)];
    const auto& choices = choice_[static_cast<std::size_t>(i)];
    const std::size_t w = n_ + 1;
    for (std::size_t k = kids.size(); k-- > 0;) {
        const auto [jh, lh] = choices[k][j * w + l];
        rebuild(kids[k], jh, lh, closed, open);
        j -= jh;
        l -= lh;
    }
}

void SubtreeTable::rebuild(Vertex i, std::size_t j, std::size_t l, std::vector<Bundle>& closed, Bundle& open) const {
    const Cell& cell = full_[index(i, j, l)];
    switch (cell.kind) {
        case Kind::open:
            rebuild_open(i, j, l, closed, open);
            return;
        case Kind::closed_more:
        case Kind::closed_exact: {
            Bundle inner;
            rebuild_open(i, j - 1, cell.kind == Kind::closed_more ? l : l - 1, closed, inner);
            std::sort(inner.begin(), inner.end());
            closed.push_back(std::move(inner));
            return;
        }
        case Kind::none:
            break;
    }
    throw PreconditionViolated("no solution for this subtree entry");
}

std::vector<Bundle> SubtreeTable::partition(Vertex i, std::size_t j, std::size_t l) const {
    if (!exists(i, j, l)) {
        throw PreconditionViolated("no solution for this subtree entry");
    }
    std::vector<Bundle> closed;
    Bundle open;
    rebuild(i, j, l, closed, open);
    std::sort(open.begin(), open.end());
    closed.push_back(std::move(open));
    return closed;
}

Bundle SubtreeTable::subtree(Vertex v) const {
    Bundle out;
    std::vector<Vertex> stack{v};
    while (!stack.empty()) {
        const Vertex x = stack.back();
        stack.pop_back();
        out.push_back(x);
        for (Vertex c : children_[static_cast<std::size_t>(x)]) {
            stack.push_back(c);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::size_t count_losers(const UtilityFunction& u, const Allocation& alloc, Value mms) {
    return static_cast<std::size_t>(std::count_if(alloc.bundles.begin(), alloc.bundles.end(),
                                                  [&](const Bundle& b) { return u.of(b) == mms; }));
}

SmmsResult smms_tree(const ItemGraph& tree, const UtilityFunction& u, std::size_t n) {
    const Value mms = tree_mms_value(tree, u, n);
    const std::size_t size = tree.size();
    std::vector<int> owner(size, -1);

    if (mms == 0) {
        int next = 0;
        for (std::size_t v = 0; v < size && static_cast<std::size_t>(next) < n; ++v) {
            if (u.item(static_cast<Vertex>(v)) > 0) {
                owner[v] = next++;
            }
        }
        if (next == 0) {
            owner[0] = 0;
        }
        absorb_rest(tree, owner);
    } else {
        const SubtreeTable table(tree, u, n, mms, 0);
        std::size_t l_star = 0;
        while (!table.exists(0, n, l_star)) {
            ++l_star;
            if (l_star > n) {
                throw std::logic_error("subtree table has no root solution");
            }
        }
        const auto parts = table.partition(0, n, l_star);
        for (std::size_t t = 0; t < n; ++t) {
            for (Vertex v : parts[t]) {
                owner[static_cast<std::size_t>(v)] = static_cast<int>(t);
            }
        }
        absorb_rest(tree, owner);
    }

    SmmsResult out;
    out.allocation = from_owner(owner, n);
    out.mms = mms;
    out.losers = count_losers(u, out.allocation, mms);
    return out;
}

Allocation pmms_smms(const ItemGraph& graph, const UtilityFunction& u, std::size_t n, const SmmsSolver& solver) {
    if (!u.is_additive()) {
        throw PreconditionViolated("PMMS+SMMS needs an additive utility");
    }
    const SmmsResult base = solver(graph, u, n);
    std::vector<bool> loser(n, false);
    std::vector<bool> frozen(graph.size(), false);
    std::size_t losers = 0;
    for (std::size_t a = 0; a < n; ++a) {
        if (u.of(base.allocation[a]) == base.mms) {
            loser[a] = true;
            ++losers;
            for (Vertex v : base.allocation[a]) {
                frozen[static_cast<std::size_t>(v)] = true;
            }
        }
    }
    if (losers == n) {
        return base.allocation;
    }
    if (losers == 0) {
        throw std::logic_error("SMMS allocation without an agent at the MMS value");
    }

    Bundle rest;
    for (std::size_t v = 0; v < graph.size(); ++v) {
        if (!frozen[v]) {
            rest.push_back(static_cast<Vertex>(v));
        }
    }
    std::vector<Bundle> bundles = base.allocation.bundles;
    for (const Bundle& comp : components(graph, rest)) {
        std::vector<std::size_t> members;
        for (std::size_t a = 0; a < n; ++a) {
            if (!loser[a] && std::binary_search(comp.begin(), comp.end(), base.allocation[a].front())) {
                members.push_back(a);
            }
        }
        const ItemGraph sub = graph.induced(comp);
        const Allocation inner = pmms_smms(sub, u.restricted(comp), members.size(), solver);
        for (std::size_t k = 0; k < members.size(); ++k) {
            Bundle lifted;
            for (Vertex v : inner[k]) {
                lifted.push_back(comp[static_cast<std::size_t>(v)]);
            }
            bundles[members[k]] = std::move(lifted);
        }
    }
    return Allocation(std::move(bundles));
}

Allocation pmms_smms_tree(const ItemGraph& tree, const UtilityFunction& u, std::size_t n) {
    require_tree(tree, u);
    return pmms_smms(tree, u, n, smms_tree);
}

bool is_unicyclic(const ItemGraph& graph) {
    return graph.size() > 0 && is_connected(graph) && graph.edge_count() == graph.size();
}

std::vector<Edge> cycle_edges(const ItemGraph& graph) {
    if (!is_unicyclic(graph)) {
        throw PreconditionViolated("graph does not have exactly one cycle");
    }
    const std::size_t n = graph.size();
    std::vector<std::size_t> degree(n);
    std::vector<bool> removed(n, false);
    std::deque<Vertex> leaves;
    for (std::size_t v = 0; v < n; ++v) {
        degree[v] = graph.degree(static_cast<Vertex>(v));
        if (degree[v] == 1) {
            leaves.push_back(static_cast<Vertex>(v));
        }
    }
    while (!leaves.empty()) {
        const Vertex v = leaves.front();
        leaves.pop_front();
        removed[static_cast<std::size_t>(v)] = true;
        for (Vertex w : graph.neighbors(v)) {
            if (!removed[static_cast<std::size_t>(w)] && --degree[static_cast<std::size_t>(w)] == 1) {
                leaves.push_back(w);
            }
        }
    }
    std::vector<Edge> out;
    for (const Edge& e : graph.edges()) {
        if (!removed[static_cast<std::size_t>(e.first)] && !removed[static_cast<std::size_t>(e.second)]) {
            out.push_back(e);
        }
    }
    return out;
}

SmmsResult smms_unicyclic(const ItemGraph& graph, const UtilityFunction& u, std::size_t n) {
    const auto cycle = cycle_edges(graph);
    std::optional<SmmsResult> best;
    Value best_worst = 0;
    for (const Edge& e : cycle) {
        SmmsResult r = smms_tree(graph.without_edge(e), u, n);
        const Value worst = worst_off(u, r.allocation);
        r.mms = worst;
        r.losers = count_losers(u, r.allocation, worst);
        if (!best || worst > best_worst || (worst == best_worst && r.losers < best->losers)) {
            best_worst = worst;
            best = std::move(r);
        }
    }
    return *best;
}

SmmsResult smms_tree_or_unicyclic(const ItemGraph& graph, const UtilityFunction& u, std::size_t n) {
    if (graph.is_tree()) {
        return smms_tree(graph, u, n);
    }
    return smms_unicyclic(graph, u, n);
}

Allocation pmms_smms_unicyclic(const ItemGraph& graph, const UtilityFunction& u, std::size_t n) {
    if (!is_unicyclic(graph)) {
        throw PreconditionViolated("graph does not have exactly one cycle");
    }
    return pmms_smms(graph, u, n, smms_tree_or_unicyclic);
}

}  // namespace graphfair
