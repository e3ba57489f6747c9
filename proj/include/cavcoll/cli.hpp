#pragma once

#include <iosfwd>

namespace cavcoll {

/// Entry point of the `cavcoll` tool. Data goes to `out`, diagnostics to
/// `err`. Returns 0 on success, 1 when `validate` finds a failing
/// invariant, 2 on configuration, domain or usage errors.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cavcoll
