#pragma once

#include <iosfwd>

namespace syllnet::cli {

/// Entry point shared by the executable and the tests. Exit codes: 0 success,
/// 1 usage, 2 I/O, 3 analysis.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace syllnet::cli
