#include "graphfair/generate.hpp"

#include <algorithm>

namespace graphfair {

namespace {

std::size_t below(std::size_t n, Rng& rng) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); }

}  // namespace

Shape parse_shape(const std::string& name) {
    if (name == "path") return Shape::path;
    if (name == "tree") return Shape::tree;
    if (name == "cycle") return Shape::cycle;
    if (name == "unicyclic") return Shape::unicyclic;
    if (name == "star") return Shape::star;
    if (name == "gnp") return Shape::gnp;
    throw InvalidInput("unknown shape '" + name + "'");
}

std::string to_string(Shape shape) {
    switch (shape) {
        case Shape::path: return "path";
        case Shape::tree: return "tree";
        case Shape::cycle: return "cycle";
        case Shape::unicyclic: return "unicyclic";
        case Shape::star: return "star";
        case Shape::gnp: return "gnp";
    }
    return "?";
}

ItemGraph random_tree(std::size_t n, Rng& rng) {
    std::vector<Edge> edges;
    for (std::size_t v = 1; v < n; ++v) {
        edges.emplace_back(static_cast<Vertex>(below(v, rng)), static_cast<Vertex>(v));
    }
    return ItemGraph(n, edges);
}

ItemGraph random_unicyclic(std::size_t n, Rng& rng) {
    if (n < 3) {
        throw InvalidInput("a unicyclic graph needs at least 3 vertices");
    }
    const ItemGraph tree = random_tree(n, rng);
    std::vector<Edge> missing;
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a + 1; b < n; ++b) {
            if (!tree.adjacent(static_cast<Vertex>(a), static_cast<Vertex>(b))) {
                missing.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
            }
        }
    }
    auto edges = tree.edges();
    edges.push_back(missing[below(missing.size(), rng)]);
    return ItemGraph(n, edges);
}

ItemGraph random_connected_gnp(std::size_t n, Value num, Value den, Rng& rng, int retries) {
    if (den <= 0 || num < 0 || num > den) {
        throw InvalidInput("edge probability must be a fraction in [0, 1]");
    }
    for (int attempt = 0; attempt < retries; ++attempt) {
        std::vector<Edge> edges;
        for (std::size_t a = 0; a < n; ++a) {
            for (std::size_t b = a + 1; b < n; ++b) {
                if (static_cast<Value>(below(static_cast<std::size_t>(den), rng)) < num) {
                    edges.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
                }
            }
        }
        ItemGraph g(n, edges);
        if (is_connected(g)) {
            return g;
        }
    }
    throw InvalidInput("no connected G(n, p) sample after " + std::to_string(retries) + " draws");
}

ItemGraph random_graph(Shape shape, std::size_t n, Rng& rng) {
    if (n == 0) {
        throw InvalidInput("graph needs at least one vertex");
    }
    switch (shape) {
        case Shape::path: return ItemGraph::path(n);
        case Shape::tree: return random_tree(n, rng);
        case Shape::cycle: return ItemGraph::cycle(n);
        case Shape::unicyclic: return random_unicyclic(n, rng);
        case Shape::star: return ItemGraph::star(n - 1);
        case Shape::gnp: return random_connected_gnp(n, 1, 2, rng);
    }
    throw InvalidInput("unknown shape");
}

UtilityFunction random_additive(std::size_t n, Value umax, Rng& rng) {
    if (umax < 0) {
        throw InvalidInput("umax must be non-negative");
    }
    std::uniform_int_distribution<Value> dist(0, umax);
    std::vector<Value> values(n);
    for (auto& v : values) {
        v = dist(rng);
    }
    return UtilityFunction::additive(std::move(values));
}

Instance generate_instance(const GenOptions& o) {
    if (o.agents == 0) {
        throw InvalidInput("need at least one agent");
    }
    Rng rng(o.seed);
    Instance inst;
    inst.graph = random_graph(o.shape, o.vertices, rng);
    if (o.identical) {
        inst.agents.assign(o.agents, random_additive(o.vertices, o.umax, rng));
    } else {
        for (std::size_t i = 0; i < o.agents; ++i) {
            inst.agents.push_back(random_additive(o.vertices, o.umax, rng));
        }
    }
    return inst;
}

}  // namespace graphfair
