#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cdsopt {

// Exit codes shared by all subcommands.
inline constexpr int kExitOk = 0;
inline constexpr int kExitRejected = 1;       // verify: not a CDS; bench: bound violated
inline constexpr int kExitInputError = 2;     // bad arguments or unreadable/invalid input
inline constexpr int kExitSolverFailure = 3;  // solve produced an unverified set

/// `cds-opt {solve|gen|verify|bench} ...`. `args` includes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cdsopt
