#pragma once

#include <iosfwd>

namespace polyifs::cli {

// Exit codes: 0 success, 1 usage or domain error, 2 verification failure.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace polyifs::cli
