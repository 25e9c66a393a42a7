// Copyright (c) 2026 The wpolar authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef WPOLAR_RUNNER_HPP
#define WPOLAR_RUNNER_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wpolar/mc.hpp"
#include "wpolar/planar.hpp"
#include "wpolar/report.hpp"

namespace wpolar {

/// Options shared by the verification checks. Flags override these
/// defaults one-to-one from the command line.
struct VerifyOptions {
  std::uint64_t seed = 7;
  std::size_t n = 200000;
  int n_points = 513;
  double sigma = 1.0;
  double a = 1.0;
  double beta = 1.0;
  double rho = 1.0;
  double theta = 4.0;
  std::optional<double> kappa;  // restrict the theorem1 sweep when set
  int workers = 1;
};

/// Known check ids: lemma1, j, lemma4, theorem1, theorem2, theorem3,
/// theorem4, oracles, roundtrips.
std::vector<std::string> known_checks();

/// Run one check; several CheckResults may come back (sweeps, sub-checks).
std::vector<CheckResult> run_check(const std::string& id, const VerifyOptions& opt);

/// Run a list of checks into a report (empty list = all known checks).
Report run_verify(std::vector<std::string> checks, const VerifyOptions& opt);

/// Canonical bounded test functionals used by the two-sided checks.
std::vector<mc::PathFunctional> default_path_functionals();
std::vector<mc::DiffeoFunctional> default_diffeo_functionals();
std::vector<planar::ComplexFunctional> default_complex_functionals();

mc::EstimatorConfig make_config(const VerifyOptions& opt);

}  // namespace wpolar

#endif  // WPOLAR_RUNNER_HPP
