#include "graphfair/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace graphfair {

namespace {

using nlohmann::json;

json parse_json(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw InvalidInput(std::string("malformed JSON: ") + e.what());
    }
}

const json& field(const json& obj, const char* key) {
    if (!obj.is_object() || !obj.contains(key)) {
        throw InvalidInput(std::string("missing field \"") + key + "\"");
    }
    return obj.at(key);
}

Value integer(const json& v, const char* what) {
    if (!v.is_number_integer()) {
        throw InvalidInput(std::string(what) + " must be an integer");
    }
    return v.get<Value>();
}

std::size_t count(const json& v, const char* what) {
    const Value x = integer(v, what);
    if (x < 0) {
        throw InvalidInput(std::string(what) + " must be non-negative");
    }
    return static_cast<std::size_t>(x);
}

const json& array(const json& v, const char* what) {
    if (!v.is_array()) {
        throw InvalidInput(std::string(what) + " must be an array");
    }
    return v;
}

UtilityFunction parse_agent(const json& a, std::size_t n) {
    const auto& type = field(a, "type");
    if (!type.is_string()) {
        throw InvalidInput("agent type must be a string");
    }
    const auto kind = type.get<std::string>();
    if (kind == "additive") {
        std::vector<Value> values;
        for (const auto& v : array(field(a, "values"), "values")) {
            values.push_back(integer(v, "utility value"));
        }
        if (values.size() != n) {
            throw InvalidInput("additive utility has " + std::to_string(values.size()) + " values for " +
                               std::to_string(n) + " vertices");
        }
        return UtilityFunction::additive(std::move(values));
    }
    if (kind == "table") {
        if (n > UtilityFunction::kMaxTabulatedVertices) {
            throw SizeGuardExceeded("tabulated utilities are limited to " +
                                    std::to_string(UtilityFunction::kMaxTabulatedVertices) + " vertices");
        }
        bool monotone = false;
        if (a.contains("monotone")) {
            if (!a.at("monotone").is_boolean()) {
                throw InvalidInput("\"monotone\" must be a boolean");
            }
            monotone = a.at("monotone").get<bool>();
        }
        const std::size_t size = std::size_t{1} << n;
        std::vector<Value> table(size, 0);
        std::vector<bool> seen(size, false);
        for (const auto& e : array(field(a, "entries"), "entries")) {
            if (!e.is_array() || e.size() != 2) {
                throw InvalidInput("table entries are [bitmask, value] pairs");
            }
            const std::size_t mask = count(e[0], "bitmask");
            if (mask >= size) {
                throw InvalidInput("bitmask " + std::to_string(mask) + " out of range");
            }
            if (seen[mask]) {
                throw InvalidInput("bitmask " + std::to_string(mask) + " listed twice");
            }
            seen[mask] = true;
            table[mask] = integer(e[1], "utility value");
        }
        for (std::size_t m = 0; m < size; ++m) {
            if (!seen[m]) {
                throw InvalidInput("table is missing bitmask " + std::to_string(m));
            }
        }
        return UtilityFunction::tabulated(n, std::move(table), monotone);
    }
    throw InvalidInput("unknown agent type \"" + kind + "\"");
}

json agent_json(const UtilityFunction& u) {
    if (u.is_additive()) {
        return {{"type", "additive"}, {"values", u.values()}};
    }
    json entries = json::array();
    const auto& t = u.table();
    for (std::size_t m = 0; m < t.size(); ++m) {
        entries.push_back({m, t[m]});
    }
    return {{"type", "table"}, {"entries", entries}, {"monotone", u.is_monotone()}};
}

std::string dump(const json& j, bool canonical) {
    return canonical ? j.dump() + "\n" : j.dump(2) + "\n";
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw InvalidInput("cannot read " + path);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

Instance parse_instance(const std::string& text) {
    const json root = parse_json(text);
    const auto& g = field(root, "graph");
    const std::size_t n = count(field(g, "vertices"), "vertices");
    std::vector<Edge> edges;
    for (const auto& e : array(field(g, "edges"), "edges")) {
        if (!e.is_array() || e.size() != 2) {
            throw InvalidInput("edges are [a, b] pairs");
        }
        const std::size_t a = count(e[0], "edge endpoint");
        const std::size_t b = count(e[1], "edge endpoint");
        if (a >= n || b >= n) {
            throw InvalidInput("edge endpoint out of range");
        }
        edges.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
    }
    Instance inst;
    inst.graph = ItemGraph(n, edges);
    for (const auto& a : array(field(root, "agents"), "agents")) {
        inst.agents.push_back(parse_agent(a, n));
    }
    validate_instance(inst);
    return inst;
}

Allocation parse_allocation(const std::string& text) {
    const json root = parse_json(text);
    std::vector<Bundle> bundles;
    for (const auto& b : array(field(root, "bundles"), "bundles")) {
        Bundle bundle;
        for (const auto& v : array(b, "bundle")) {
            bundle.push_back(static_cast<Vertex>(count(v, "vertex")));
        }
        bundles.push_back(std::move(bundle));
    }
    return Allocation(std::move(bundles));
}

std::string write_instance(const Instance& instance, bool canonical) {
    json edges = json::array();
    for (const auto& [a, b] : instance.graph.edges()) {
        edges.push_back({a, b});
    }
    json agents = json::array();
    for (const auto& u : instance.agents) {
        agents.push_back(agent_json(u));
    }
    const json root = {{"graph", {{"vertices", instance.graph.size()}, {"edges", edges}}}, {"agents", agents}};
    return dump(root, canonical);
}

std::string write_allocation(const Allocation& alloc, bool canonical) {
    json bundles = json::array();
    for (const auto& b : alloc.bundles) {
        bundles.push_back(b);
    }
    return dump(json{{"bundles", bundles}}, canonical);
}

Instance read_instance_file(const std::string& path) { return parse_instance(slurp(path)); }

Allocation read_allocation_file(const std::string& path) { return parse_allocation(slurp(path)); }

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw InvalidInput("cannot write " + path);
    }
    out << text;
}

}  // namespace graphfair
