#pragma once

#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "modeq/identities.hpp"

namespace modeq::cli {

enum ExitCode : int { kSuccess = 0, kFailure = 1, kUsage = 2 };

enum class OutputFormat { Text, Json };

struct RunConfig {
  int precision_digits = 100;
  std::vector<QPoint> grid;
  /// Tolerance is 10^-tolerance_exponent; defaults to precision_digits - 10.
  std::optional<int> tolerance_exponent;
  std::vector<IdentityId> identities;
  OutputFormat format = OutputFormat::Text;

  /// Default grid and the full catalog.
  static RunConfig defaults();
  /// Throws ConfigError: precision_digits < 30, grid point outside (0, 1/2],
  /// empty grid or identity list, non-positive tolerance exponent.
  void validate() const;
  int effective_tolerance_exponent() const { return tolerance_exponent.value_or(precision_digits - 10); }
};

/// key = value lines, '#' comments. Keys: precision_digits, grid (comma
/// separated rationals), tolerance_exponent, identities (tags or "all"),
/// format (text | json). Values overwrite the fields of `base`.
RunConfig parse_config(std::istream& in, RunConfig base = RunConfig::defaults());

/// Entry point behind the `modeq` binary; args exclude the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace modeq::cli
