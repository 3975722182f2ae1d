#ifndef GRAPHFAIR_FIXTURES_HPP
#define GRAPHFAIR_FIXTURES_HPP

#include <functional>
#include <string>
#include <vector>

#include "graphfair/instance.hpp"

namespace graphfair {

struct ExpectedFact {
    std::string claim;
    std::function<bool(const Instance&)> holds;
};

struct Fixture {
    std::string name;
    std::string note;
    Instance instance;
    std::vector<ExpectedFact> facts;
};

struct FactOutcome {
    std::string claim;
    bool pass = false;
};

std::vector<std::string> fixture_names();
// Throws InvalidInput for an unknown name.
Fixture get_fixture(const std::string& name);
std::vector<FactOutcome> check_fixture(const Fixture& fixture);

}  // namespace graphfair

#endif
