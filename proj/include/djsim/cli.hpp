#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace djsim {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitParse = 2;        // oracle/flag parse errors, infeasible requests
inline constexpr int kExitPromise = 3;      // promise violation where a backend requires it
inline constexpr int kExitDisagreement = 4; // backends disagree on a promise function
inline constexpr int kExitIo = 5;

/// Full command-line surface (classify, synth, sweep, random). `args`
/// excludes the program name. Everything a command prints goes to the
/// given streams, which keeps the tool scriptable and testable.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace djsim
