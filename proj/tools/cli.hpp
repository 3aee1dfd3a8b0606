#pragma once

#include <iosfwd>

namespace onsager::cli {

/// Runs the command line. Exit codes: 0 success, 1 verification failure,
/// 2 usage or parse error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace onsager::cli
