#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hyparr/arrangement.hpp"

namespace hyparr {

enum class CheckStatus { Pass, Fail, Skip };

struct Check {
  std::string name;
  CheckStatus status = CheckStatus::Pass;
  std::string detail;
};

struct VerifyOptions {
  std::size_t brute_force_limit = 10;  ///< max m for the 2^m sweeps
  std::size_t relation_limit = 6;      ///< max m for exhaustive relation checks
  bool corrupt_boundary = false;       ///< perturbs the top boundary matrix; negative-path tests only
};

struct VerifyReport {
  std::vector<Check> checks;

  bool ok() const;
  const Check* find(const std::string& name) const;
};

/// Every invariant of the toolkit that admits a finite check on `a`.
VerifyReport verify_all(const Arrangement& a, const VerifyOptions& opts = {});

std::string_view to_string(CheckStatus s);

}  // namespace hyparr
