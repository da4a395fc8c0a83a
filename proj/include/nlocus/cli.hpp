#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nlocus {

/// Batch front-end. Exit codes: 0 positive answer / success, 1 negative
/// answer ("non-member", "not found", a failing check), 2 malformed input
/// or internal error (with a structured error JSON on stdout).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nlocus
