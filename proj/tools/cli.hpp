#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace adiabatic::cli {

// Exit codes of every subcommand.
inline constexpr int kOk = 0;
inline constexpr int kInputError = 1;
inline constexpr int kDomainError = 2;
inline constexpr int kNumericalError = 3;

/// Runs one invocation; args exclude the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int run(int argc, char** argv);

}  // namespace adiabatic::cli
