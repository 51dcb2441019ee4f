#pragma once

#include <iosfwd>

namespace smhk::cli {

// Parses argv, dispatches to the subcommand and returns the exit status.
// Parse errors exit 2; --help exits 0.
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace smhk::cli
