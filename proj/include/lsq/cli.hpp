#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lsq {

// Runs the command line (without the program name) against the given
// streams.  Exit status: 0 for success and true verdicts, 1 for
// property-false verdicts, 2 for usage or input errors.
int run_cli(std::vector<std::string> args, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace lsq
