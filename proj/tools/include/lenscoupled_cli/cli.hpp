#pragma once

#include <iosfwd>

namespace lenscoupled::cli {

/// Shared entry point of the executable and the tests.
/// Exit codes: 0 success, 1 runtime or I/O failure, 2 usage error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace lenscoupled::cli
