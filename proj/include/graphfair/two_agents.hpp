#ifndef GRAPHFAIR_TWO_AGENTS_HPP
#define GRAPHFAIR_TWO_AGENTS_HPP

#include <optional>
#include <string>

#include "graphfair/decomposition.hpp"
#include "graphfair/instance.hpp"

namespace graphfair {

// Which guarantee the biconnected split meets:
//  single_vertex  Y = {v*} and 8 u(Y) >= 3 u(V)
//  balanced       8 min(u(X), u(Y)) >= 3 u(V)
//  third_vertex   2 min(u(X), u(Y)) >= u(V \ {z*})
enum class Alg1Case { single_vertex, balanced, third_vertex };

std::string to_string(Alg1Case c);

enum class TwoAgentCertificate { exact_pmms, three_quarters };

std::string to_string(TwoAgentCertificate c);

struct TwoSplit {
    Bundle x;
    Bundle y;
    TwoAgentCertificate certificate = TwoAgentCertificate::three_quarters;
    // Set whenever the split came from the biconnected routine.
    std::optional<Alg1Case> alg1_case;
};

// Vertices ranked by utility, ties to the lower index.
std::vector<Vertex> vertices_by_value(const UtilityFunction& u);

TwoSplit alg1_biconnected(const ItemGraph& graph, const UtilityFunction& u);

TwoSplit two_identical_34pmms(const ItemGraph& graph, const UtilityFunction& u);

// Agent 0 splits with u1; agent 1 takes the preferred part, on ties the
// part without vertex 0.
Allocation cut_and_choose_34(const ItemGraph& graph, const UtilityFunction& u1, const UtilityFunction& u2);

}  // namespace graphfair

#endif
