#pragma once

#include <iosfwd>

namespace stackgame {

/// Runs the command-line interface. Exit codes: 0 success, 1 infeasible
/// instance (or degenerate analysis), 2 parse or usage error, 3 internal
/// invariant violation.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace stackgame
