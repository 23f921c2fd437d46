#pragma once

#include <ostream>

namespace cfifc {

// Entry point of the cfifc tool. Returns the process exit code:
// 0 success, 2 argument or configuration error, 3 numerical failure.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cfifc
