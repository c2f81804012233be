// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "lsd/error.hpp"

namespace lsd {

enum class Command { Decompose, Separability, Concurrence, Oracle, Verify, Selftest };
enum class Format { Json, Text };

struct RunConfig {
  Command command = Command::Decompose;
  /// File path, "-" for stdin, or an inline JSON object. Unused by selftest.
  std::string input;
  /// Pass/fail threshold for reconstruction and residual checks.
  std::optional<double> tol;
  std::uint64_t seed = 0;
  Format format = Format::Json;
  /// decompose: attach the numeric cross-check.
  bool oracle = false;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitNumerical = 3;

/// 2 for malformed or out-of-domain input, 3 for numerical failures.
int exit_code_for(Errc code);

/// Reports go to `out`, diagnostics to `err`. Reads stdin from `in` when the
/// input is "-".
int run(const RunConfig& config, std::istream& in, std::ostream& out, std::ostream& err);

struct SelftestResult {
  std::string name;
  bool passed;
  std::string detail;
};

std::vector<SelftestResult> run_selftest();

}  // namespace lsd
