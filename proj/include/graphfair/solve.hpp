#ifndef GRAPHFAIR_SOLVE_HPP
#define GRAPHFAIR_SOLVE_HPP

#include <map>
#include <string>
#include <vector>

#include "graphfair/instance.hpp"

namespace graphfair {

const std::vector<std::string>& algorithm_names();

struct SolveOutcome {
    std::string algo;
    Allocation allocation;
    // Algorithm-specific details (case tag, losers, iterations, ...).
    std::map<std::string, std::string> info;
};

// Resolves "auto" to a concrete algorithm for the instance.
std::string pick_algorithm(const Instance& instance);

SolveOutcome solve(const Instance& instance, const std::string& algo);

// Exact rational p/q in lowest terms.
struct Ratio {
    Value num = 1;
    Value den = 1;

    std::string to_string() const;
    friend bool operator<(const Ratio& a, const Ratio& b) {
        return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
    }
    friend bool operator==(const Ratio&, const Ratio&) = default;
};

Ratio make_ratio(Value num, Value den);

struct AgentShare {
    Value utility = 0;
    // Largest mu_2(A_i + A_j) over the bundles agent i compares with.
    Value pmms = 0;
    // utility / pmms capped at 1; 1 when pmms is 0.
    Ratio ratio;
};

std::vector<AgentShare> realized_pmms_shares(const Instance& instance, const Allocation& alloc);

// min over compared pairs (i, j) of u_i(A_i) / mu_2(A_i + A_j), capped at 1; a
// pair with mu_2 = 0 counts as 1.
Ratio realized_pmms_ratio(const Instance& instance, const Allocation& alloc);

}  // namespace graphfair

#endif
