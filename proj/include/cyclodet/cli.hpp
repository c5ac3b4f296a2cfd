#pragma once

namespace cyclodet {

// Dispatches the cyclodet subcommands. Exit codes: 0 all checks pass,
// 1 a mathematical check failed, 2 usage/parameter error, 3 internal
// integrity error.
int run(int argc, const char* const* argv);

}  // namespace cyclodet
