// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace divlab {

/// Result of replaying one fixture file against its expected values.
struct FixtureResult {
  std::string name;
  std::string kind;        // scenario | survey | mcda | coding | data
  std::size_t checks = 0;  // expected values compared
  std::size_t failures = 0;
  double max_deviation = 0.0;  // over the numeric checks
  std::vector<std::string> messages;  // one per failure

  bool pass() const { return failures == 0; }
};

/// Replays every recognized fixture in `dir` (files with a "type" field)
/// and compares recomputed values against the embedded expectations.
/// Throws IoError when the directory is missing or holds no fixtures.
std::vector<FixtureResult> reproduce_all(const std::filesystem::path& dir);

}  // namespace divlab
