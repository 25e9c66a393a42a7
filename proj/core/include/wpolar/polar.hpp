// Copyright (c) 2026 The wpolar authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef WPOLAR_POLAR_HPP
#define WPOLAR_POLAR_HPP

#include "wpolar/diffeo.hpp"
#include "wpolar/grid.hpp"

namespace wpolar {

/// Polar coordinates of a positive path: orbit radius and diffeomorphism.
struct PolarPair {
  double rho;
  Diffeo phi;
};

/// Radial functional rho(x) = (int_0^1 x(t)^{-2} dt)^{-1/2}. Invariant
/// under the group action. Throws NonPositivePath if any value <= 0.
double rho_of(const Path& x);

/// Polar coordinates (rho, phi) of a positive path: phi is recovered by
/// inverting the monotone grid function rho^2 int_0^t x^{-2}. Warns on
/// paths whose minimum is below 1e-6 of their maximum, where the x^{-2}
/// quadrature degrades.
PolarPair decompose(const Path& x);

/// Positive path rho * sqrt(phi'(phi^{-1}(t))) on the grid of phi.
/// Endpoints use the exact stored derivatives.
Path reconstruct(const PolarPair& p);

inline Path reconstruct(double rho, const Diffeo& phi) {
  return reconstruct(PolarPair{rho, phi});
}

}  // namespace wpolar

#endif  // WPOLAR_POLAR_HPP
