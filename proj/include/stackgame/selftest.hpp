#pragma once

#include <iosfwd>

namespace stackgame {

/// Runs every golden check against the bundled example instance and prints
/// one ok/FAIL line per check plus a summary. Returns the number of
/// failures (0 means everything reproduced exactly).
int run_selftest(std::ostream& out);

}  // namespace stackgame
