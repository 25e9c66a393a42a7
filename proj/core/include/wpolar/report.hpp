// Copyright (c) 2026 The wpolar authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef WPOLAR_REPORT_HPP
#define WPOLAR_REPORT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace wpolar {

/// One verification check in the machine-readable report.
struct CheckResult {
  std::string check_id;
  std::vector<std::pair<std::string, double>> params;
  double mean = 0.0;
  double std_err = 0.0;
  long long n = 0;
  std::optional<double> target;
  std::optional<double> z_score;
  bool pass = false;
  std::optional<double> kappa_selected;
  double wall_time_s = 0.0;
};

/// Verification report. Serialization is byte-stable for a fixed
/// configuration and seed, except for the wall_time_s fields.
struct Report {
  int schema_version = 1;
  std::uint64_t seed = 0;
  std::vector<CheckResult> checks;

  bool all_pass() const;
  /// include_wall_time=false strips the timing fields (used for
  /// byte-identity comparisons).
  std::string to_json(bool include_wall_time = true) const;
  void write(const std::string& file) const;
};

}  // namespace wpolar

#endif  // WPOLAR_REPORT_HPP
