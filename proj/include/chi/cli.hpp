#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace chi::cli {

/// Exit codes: 0 success, 1 invalid input, 2 verification failure.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace chi::cli
