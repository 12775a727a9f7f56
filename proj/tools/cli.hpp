#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace autoseq::cli {

/// Runs one command line (without the program name). Reports go to `out`,
/// diagnostics to `err`. Exit codes: 0 success, 1 failed verdict (witness in
/// the report), 2 usage or input error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace autoseq::cli
