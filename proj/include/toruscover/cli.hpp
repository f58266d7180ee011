#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace toruscover::cli {

/// Parse and run one command. Results go to `out`, a one-line
/// machine-parsable error document to `err` on failure.
/// Exit codes: 0 success, 2 validation error, 3 computation error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace toruscover::cli
