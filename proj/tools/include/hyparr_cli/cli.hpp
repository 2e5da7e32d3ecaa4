#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "hyparr/arrangement.hpp"

namespace hyparr::cli {

enum ExitCode { kOk = 0, kVerificationFailed = 1, kInputError = 2 };

struct Command {
  std::string verb;
  std::string input;
  std::optional<std::size_t> degree;
  std::string region;
  bool all = false;
  bool bounded = false;
  std::string format = "text";
  std::size_t fuzz = 0;
  std::optional<std::uint64_t> seed;
  bool inject_fault = false;  ///< not reachable from the command line
};

struct Report {
  nlohmann::ordered_json body;
  int exit_code = kOk;
};

const std::vector<std::string>& verbs();

/// Throws hyparr::Error for input problems.
Report run(const Command& cmd);
std::string emit(const Report& report, const std::string& format);

/// Random essential duplicate-free arrangement with n in 1..3, m <= 8 and
/// integer coefficients in -3..3.
Arrangement random_arrangement(std::mt19937_64& rng);

/// Parses argv, runs, writes the report. Returns the process exit code.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hyparr::cli
