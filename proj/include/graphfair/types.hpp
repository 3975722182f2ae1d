#ifndef GRAPHFAIR_TYPES_HPP
#define GRAPHFAIR_TYPES_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace graphfair {

using Vertex = std::int32_t;
using Value = std::int64_t;
using VertexMask = std::uint64_t;

// A bundle is a sorted list of distinct vertex indices.
using Bundle = std::vector<Vertex>;

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed instance, allocation or argument.
class InvalidInput : public Error {
public:
    using Error::Error;
};

// An exhaustive routine was asked to enumerate more than it is allowed to.
class SizeGuardExceeded : public Error {
public:
    using Error::Error;
};

// Input is well formed but outside the class an algorithm handles
// (e.g. a path algorithm on a non-path).
class PreconditionViolated : public Error {
public:
    using Error::Error;
};

// Multiplicative fairness factor num/den with 0 < num/den <= 1. All threshold
// tests are done by cross-multiplication.
struct FairnessRatio {
    Value num = 1;
    Value den = 1;

    FairnessRatio() = default;
    FairnessRatio(Value numerator, Value denominator);

    // den * lhs >= num * rhs, i.e. lhs >= ratio * rhs.
    bool satisfied(Value lhs, Value rhs) const { return den * lhs >= num * rhs; }
    // How far lhs falls short of ratio * rhs, scaled by den (<= 0 when satisfied).
    Value deficit(Value lhs, Value rhs) const { return num * rhs - den * lhs; }

    // Parses "P/Q" (integers only).
    static FairnessRatio parse(const std::string& text);
    std::string to_string() const;

    friend bool operator==(const FairnessRatio&, const FairnessRatio&) = default;
};

inline VertexMask bit(Vertex v) { return VertexMask{1} << v; }

VertexMask to_mask(const Bundle& bundle);
Bundle from_mask(VertexMask mask);

}  // namespace graphfair

#endif
