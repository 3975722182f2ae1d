#include "graphfair/cli.hpp"

int main(int argc, char** argv) { return graphfair::cli::run(argc, argv); }
