#ifndef GRAPHFAIR_GENERATE_HPP
#define GRAPHFAIR_GENERATE_HPP

#include <cstdint>
#include <random>
#include <string>

#include "graphfair/instance.hpp"

namespace graphfair {

using Rng = std::mt19937_64;

enum class Shape { path, tree, cycle, unicyclic, star, gnp };

Shape parse_shape(const std::string& name);
std::string to_string(Shape shape);

ItemGraph random_tree(std::size_t n, Rng& rng);
// A random tree plus one extra edge; n >= 3.
ItemGraph random_unicyclic(std::size_t n, Rng& rng);
// G(n, p) with p = num/den, redrawn until connected (at most `retries` draws).
ItemGraph random_connected_gnp(std::size_t n, Value num, Value den, Rng& rng, int retries = 1000);
ItemGraph random_graph(Shape shape, std::size_t n, Rng& rng);

// Uniform integers in [0, umax].
UtilityFunction random_additive(std::size_t n, Value umax, Rng& rng);

struct GenOptions {
    Shape shape = Shape::path;
    std::size_t vertices = 5;
    std::size_t agents = 2;
    Value umax = 10;
    std::uint64_t seed = 0;
    bool identical = false;
};

Instance generate_instance(const GenOptions& options);

}  // namespace graphfair

#endif
