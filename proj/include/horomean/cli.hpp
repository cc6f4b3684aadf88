#pragma once
#include <iosfwd>
#include <string>
#include <vector>

namespace horomean::cli {

// Entry point shared by the binary and the test harness. argv mirrors
// main()'s, program name included. Data goes to out, diagnostics to err.
// Returns the process exit code: 0 success, 1 validation/usage error,
// 2 internal consistency failure.
int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);

} // namespace horomean::cli
