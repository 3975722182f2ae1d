#ifndef GRAPHFAIR_UTILITY_HPP
#define GRAPHFAIR_UTILITY_HPP

#include <vector>

#include "graphfair/types.hpp"

namespace graphfair {

enum class UtilityKind { additive, tabulated_monotone, tabulated_general };

// Non-negative integer utility over bundles. Additive utilities store one value
// per vertex; tabulated utilities store one value per vertex subset, indexed by
// bitmask, and are limited to kMaxTabulatedVertices vertices.
class UtilityFunction {
public:
    static constexpr std::size_t kMaxTabulatedVertices = 20;

    UtilityFunction() = default;

    static UtilityFunction additive(std::vector<Value> values);
    // table.size() must be 2^n_vertices and table[0] must be 0. When `monotone`
    // is set the table is checked for monotonicity.
    static UtilityFunction tabulated(std::size_t n_vertices, std::vector<Value> table, bool monotone);

    UtilityKind kind() const { return kind_; }
    bool is_additive() const { return kind_ == UtilityKind::additive; }
    bool is_monotone() const { return kind_ != UtilityKind::tabulated_general; }
    std::size_t n_vertices() const { return n_; }

    // u({v}).
    Value item(Vertex v) const;
    Value of(const Bundle& bundle) const;
    Value of_mask(VertexMask mask) const;
    Value total() const;
    Value max_item() const;

    // Additive values, empty for tabulated utilities.
    const std::vector<Value>& values() const { return values_; }
    // Tabulated values, empty for additive utilities.
    const std::vector<Value>& table() const { return table_; }

    // Additive utility on a subgraph whose vertex i is origin[i].
    UtilityFunction restricted(const Bundle& origin) const;

    friend bool operator==(const UtilityFunction&, const UtilityFunction&) = default;

private:
    UtilityKind kind_ = UtilityKind::additive;
    std::size_t n_ = 0;
    std::vector<Value> values_;
    std::vector<Value> table_;
};

// Index of the first vertex violating monotonicity of a tabulated table, as a
// (subset, superset) pair; {0, 0} when monotone.
std::pair<VertexMask, VertexMask> find_monotonicity_violation(std::size_t n_vertices, const std::vector<Value>& table);

}  // namespace graphfair

#endif
