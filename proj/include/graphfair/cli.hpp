#ifndef GRAPHFAIR_CLI_HPP
#define GRAPHFAIR_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace graphfair::cli {

enum ExitCode : int {
    kOk = 0,
    kMalformed = 1,
    kCheckFailed = 2,
    kSizeGuard = 3,
    kPrecondition = 4,
};

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, const char* const* argv);

}  // namespace graphfair::cli

#endif
