#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace dagalign {

// Exit codes of the dagalign tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalidInput = 1;
inline constexpr int kExitAnsweredFalse = 2;
inline constexpr int kExitBudgetExceeded = 3;
inline constexpr int kExitRoundTripFailed = 4;

// Entry point of the dagalign tool; args[0] is the program name. Results go
// to `out`, diagnostics to `err`.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dagalign
