#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace posetmc {

inline constexpr int kExitOk = 0;
inline constexpr int kExitNo = 1;
inline constexpr int kExitInputError = 2;

// Runs the command-line tool on `args` (without the program name). Reports
// go to `out` (or --out), diagnostics to `err`. Returns 0 on success or
// YES, 1 on NO or a failed verification, 2 on an input error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace posetmc
