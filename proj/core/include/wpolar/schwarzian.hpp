// Copyright (c) 2026 The wpolar authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef WPOLAR_SCHWARZIAN_HPP
#define WPOLAR_SCHWARZIAN_HPP

#include <functional>
#include <vector>

#include "wpolar/diffeo.hpp"
#include "wpolar/grid.hpp"

namespace wpolar {

/// A C^3 orientation-preserving map of [0,1] fixing the endpoints, given by
/// evaluators for f, f', f'' (and f''' when available analytically).
struct SmoothOuterMap {
  std::function<double(double)> f;
  std::function<double(double)> df;
  std::function<double(double)> d2f;
  std::function<double(double)> d3f;  // empty => stencil differentiation
  bool is_mobius = false;
  double beta = 0.0;
  double stencil_step = 1e-3;
};

SmoothOuterMap identity_map();
SmoothOuterMap mobius_map(double beta);
/// f(t) = (e^{ct} - 1)/(e^c - 1); its Schwarzian derivative is -c^2/2.
SmoothOuterMap exp_ramp_map(double c);
/// Spline-backed map from grid samples of f, f', f''.
SmoothOuterMap grid_map(GridSpec grid, std::vector<double> f,
                        std::vector<double> df, std::vector<double> d2f);

/// Schwarzian derivative Sch{f, t} = (f''/f')'(t) - (f''/f')^2(t) / 2.
/// Uses f''' when provided; otherwise a 4th-order stencil on f''/f' with
/// one-sided closure at the endpoints.
double schwarzian_of(const SmoothOuterMap& f, double t);

/// Density of the left-translated measure mu^g_sigma against mu_sigma:
///
///   p_g(phi) = (g'(0) g'(1))^{-1/2}
///              exp{ [ (g''(0)/g'(0)) phi'(0) - (g''(1)/g'(1)) phi'(1)
///                     + int_0^1 Sch{g, phi(tau)} (phi'(tau))^2 dtau ] / sigma^2 }.
///
/// For Moebius g the integral term vanishes identically and is skipped.
double radon_nikodym(const SmoothOuterMap& g, const Diffeo& phi, Dispersion sigma);

/// Closed Moebius form exp{(2 beta / sigma^2)(-phi'(0) + phi'(1)/(beta+1))},
/// evaluated from exact endpoint derivatives.
double p_mobius(double beta, double dphi0, double dphi1, Dispersion sigma);
double p_mobius(double beta, const Diffeo& phi, Dispersion sigma);

/// Output of the constructive inverse-Schwarzian solver.
struct SchwarzianInverseResult {
  SmoothOuterMap map;
  int iterations = 0;
  std::vector<double> step_norms;  // ||u_{k+1} - u_k|| per iteration
  Path u;                          // fixed point: u = v + (int_t^1 u)^2 / 2
  Path log_deriv_ratio;            // h = f''/f' on the grid, h(1) = 0
};

/// Solves Sch{f, .} = v for ||v|| <= 1/4 by fixed-point iteration of the
/// quadratic map u -> v + (int_t^1 u)^2/2 on the ball ||u|| <= 1/2
/// (contraction factor <= 1/2), then builds f with f'' (1) = 0 and
/// |f''(0)/f'(0)| <= 1/2 from the normalized double-exponential formula.
/// Throws NormTooLarge when ||v|| > 1/4 and NoConvergence if the iteration
/// budget is exhausted.
SchwarzianInverseResult schwarzian_inverse(const Path& v, double tol = 1e-12,
                                           int max_iter = 64);

}  // namespace wpolar

#endif  // WPOLAR_SCHWARZIAN_HPP
