#pragma once

namespace semirank {

/// Full command-line front end.  Returns the process exit code:
/// 0 success, 1 verification-false, 2 input error, 3 budget exhaustion.
int run_cli(int argc, const char* const* argv);

} // namespace semirank
