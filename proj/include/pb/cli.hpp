#pragma once

#include <iosfwd>

namespace pb {

/// Entry point of the `pbtool` command line. Exit codes: 0 success, 1 failed
/// verification, 2 usage or input error (a JSON error object goes to `err`).
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace pb
