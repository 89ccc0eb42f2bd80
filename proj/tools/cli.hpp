#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace artin::cli {

/// Exit statuses.
constexpr int ok = 0;
constexpr int error = 1;
constexpr int counterexample = 2;

/// Runs one command line (without the program name).
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace artin::cli
