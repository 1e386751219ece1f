#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace nbly::cli {

/* Runs the command line (without the program name) and writes all output
 * to the given streams. Returns the process exit status: 0 when every
 * requested check passes, 3 on an enumeration budget error, 10 + the
 * registry index of the first failing check otherwise, and nonzero for
 * usage errors. */
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nbly::cli
