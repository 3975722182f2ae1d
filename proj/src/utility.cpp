#include "graphfair/utility.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>

namespace graphfair {

UtilityFunction UtilityFunction::additive(std::vector<Value> values) {
    for (std::size_t v = 0; v < values.size(); ++v) {
        if (values[v] < 0) {
            throw InvalidInput("utility of vertex " + std::to_string(v) + " is negative");
        }
    }
    UtilityFunction u;
    u.kind_ = UtilityKind::additive;
    u.n_ = values.size();
    u.values_ = std::move(values);
    return u;
}

UtilityFunction UtilityFunction::tabulated(std::size_t n_vertices, std::vector<Value> table, bool monotone) {
    if (n_vertices > kMaxTabulatedVertices) {
        throw SizeGuardExceeded("tabulated utilities are limited to " + std::to_string(kMaxTabulatedVertices) +
                                " vertices");
    }
    if (table.size() != (std::size_t{1} << n_vertices)) {
        throw InvalidInput("tabulated utility needs 2^" + std::to_string(n_vertices) + " entries, got " +
                           std::to_string(table.size()));
    }
    if (table[0] != 0) {
        throw InvalidInput("tabulated utility of the empty bundle must be 0");
    }
    if (std::any_of(table.begin(), table.end(), [](Value x) { return x < 0; })) {
        throw InvalidInput("tabulated utility has a negative entry");
    }
    if (monotone) {
        auto [sub, super] = find_monotonicity_violation(n_vertices, table);
        if (super != 0) {
            throw InvalidInput("tabulated utility declared monotone but u(" + std::to_string(sub) + ") > u(" +
                               std::to_string(super) + ")");
        }
    }
    UtilityFunction u;
    u.kind_ = monotone ? UtilityKind::tabulated_monotone : UtilityKind::tabulated_general;
    u.n_ = n_vertices;
    u.table_ = std::move(table);
    return u;
}

Value UtilityFunction::item(Vertex v) const {
    if (v < 0 || static_cast<std::size_t>(v) >= n_) {
        throw InvalidInput("vertex " + std::to_string(v) + " out of range");
    }
    return is_additive() ? values_[static_cast<std::size_t>(v)] : table_[std::size_t{1} << v];
}

Value UtilityFunction::of(const Bundle& bundle) const {
    if (!is_additive()) {
        return of_mask(to_mask(bundle));
    }
    Value sum = 0;
    for (Vertex v : bundle) {
        sum += item(v);
    }
    return sum;
}

Value UtilityFunction::of_mask(VertexMask mask) const {
    if (!is_additive()) {
        if (n_ < 64 && (mask >> n_) != 0) {
            throw InvalidInput("bundle mask has vertices outside the utility's domain");
        }
        return table_[mask];
    }
    Value sum = 0;
    while (mask != 0) {
        sum += values_.at(static_cast<std::size_t>(std::countr_zero(mask)));
        mask &= mask - 1;
    }
    return sum;
}

Value UtilityFunction::total() const {
    if (is_additive()) {
        return std::accumulate(values_.begin(), values_.end(), Value{0});
    }
    return table_.back();
}

Value UtilityFunction::max_item() const {
    Value best = 0;
    for (std::size_t v = 0; v < n_; ++v) {
        best = std::max(best, item(static_cast<Vertex>(v)));
    }
    return best;
}

UtilityFunction UtilityFunction::restricted(const Bundle& origin) const {
    if (!is_additive()) {
        throw PreconditionViolated("only additive utilities can be restricted to a subgraph");
    }
    std::vector<Value> out;
    out.reserve(origin.size());
    for (Vertex v : origin) {
        out.push_back(item(v));
    }
    return additive(std::move(out));
}

std::pair<VertexMask, VertexMask> find_monotonicity_violation(std::size_t n_vertices, const std::vector<Value>& table) {
    // Checking single-element extensions suffices.
    const VertexMask full = (VertexMask{1} << n_vertices);
    for (VertexMask s = 0; s < full; ++s) {
        for (std::size_t v = 0; v < n_vertices; ++v) {
            const VertexMask t = s | (VertexMask{1} << v);
            if (t != s && table[s] > table[t]) {
                return {s, t};
            }
        }
    }
    return {0, 0};
}

}  // namespace graphfair
