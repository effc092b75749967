#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ecw::cli {

/// Runs the `ecw` command line with `args` (program name excluded) and
/// returns the exit code: 0 success, 1 mathematical inconsistency or
/// failure, 2 usage or parse error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ecw::cli
