// Copyright (c) 2026 The wpolar authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef WPOLAR_ERRORS_HPP
#define WPOLAR_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace wpolar {

/// A path left the positivity cone (some grid value <= 0).
struct NonPositivePath : std::domain_error {
  explicit NonPositivePath(const std::string& what) : std::domain_error(what) {}
};

/// A complex path came too close to the origin for polar coordinates.
struct VanishingPath : std::domain_error {
  explicit VanishingPath(const std::string& what) : std::domain_error(what) {}
};

/// Adjacent-node phase increment >= pi: the grid is too coarse to unwrap.
struct BranchJump : std::runtime_error {
  explicit BranchJump(const std::string& what) : std::runtime_error(what) {}
};

/// Parameter outside a closed form's domain.
struct DomainError : std::domain_error {
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// Adaptive quadrature could not meet the requested error estimate.
struct QuadratureFailure : std::runtime_error {
  explicit QuadratureFailure(const std::string& what) : std::runtime_error(what) {}
};

/// Fixed-point iteration hypothesis violated (sup norm above 1/4).
struct NormTooLarge : std::domain_error {
  explicit NormTooLarge(const std::string& what) : std::domain_error(what) {}
};

/// Fixed-point iteration failed to contract within the budget.
struct NoConvergence : std::runtime_error {
  explicit NoConvergence(const std::string& what) : std::runtime_error(what) {}
};

/// Importance proposal does not cover the target support.
struct ProposalMismatch : std::domain_error {
  explicit ProposalMismatch(const std::string& what) : std::domain_error(what) {}
};

/// Effective sample size collapsed: proposal badly mismatched.
struct DegenerateWeights : std::runtime_error {
  explicit DegenerateWeights(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed or inconsistent CSV input.
struct CsvError : std::runtime_error {
  explicit CsvError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace wpolar

#endif  // WPOLAR_ERRORS_HPP
