#ifndef GRAPHFAIR_CLI_HPP
#define GRAPHFAIR_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace graphfair {

// Command line entry point, separated from main() so tests can drive it
// in-process. `args` excludes the program name. Returns the process exit
// code: 0 when the requested property holds or the solve verified, 1 when
// the answer is a definite "no" (shape mismatch, sweep failure, exhausted
// search, infeasible hidden set, failed verification), 2 on errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace graphfair

#endif  // GRAPHFAIR_CLI_HPP
