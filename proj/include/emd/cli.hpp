#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace emd::cli {

/**
 * Runs one tool invocation. args excludes the program name.
 * Exit codes: 0 success, 1 data or domain error, 2 usage error.
 */
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace emd::cli
