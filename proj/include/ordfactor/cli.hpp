#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ordfactor::cli {

/// Exit codes of `run`.
inline constexpr int exit_ok = 0;
inline constexpr int exit_domain_error = 1;
inline constexpr int exit_usage_error = 2;
inline constexpr int exit_budget_exceeded = 3;

/// Runs one subcommand. `args` excludes the program name. The JSON run report
/// goes to `out`; diagnostics go to `err`. `input` backs a `-` or absent path.
int run(const std::vector<std::string>& args, std::istream& input, std::ostream& out,
        std::ostream& err);

}  // namespace ordfactor::cli
