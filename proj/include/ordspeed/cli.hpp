#ifndef ORDSPEED_CLI_HPP
#define ORDSPEED_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace ordspeed {

// Runs the ordspeed command line against the given streams.
// Exit codes: 0 success, 1 usage error, 2 input error, 3 budget-truncated
// result without --allow-partial.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace ordspeed

#endif
