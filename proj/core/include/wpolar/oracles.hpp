// Copyright (c) 2026 The wpolar authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef WPOLAR_ORACLES_HPP
#define WPOLAR_ORACLES_HPP

#include <map>
#include <string>

#include "wpolar/grid.hpp"

namespace wpolar::oracles {

/// Closed form of the diagonally-conditioned damped positive-path integral:
/// (1/(2 sqrt2)) (1/a - 1/sqrt(a^2 + 2)). Independent of sigma.
double lemma1_rhs(double a);

/// J(beta^2 / (2(beta+1))) = (rho / (sqrt(2 pi) sigma))
///                           exp{-(rho^2 / (2 sigma^2)) ln^2(beta+1)}.
double j_closed(double beta, double rho, double sigma);

/// sqrt(2/pi) (beta+1) ln(beta+1) / (sigma beta (beta+2))
///   * exp{-(rho^2/(2 sigma^2)) ln^2(beta+1)};
/// the removable singularity at beta = 0 is filled by its limit.
double lemma4_rhs(double beta, double rho, double sigma);

/// Radial integral of the diagonal family. For beta > 0 this is
/// sqrt(beta+1)/(beta(beta+2)); for beta in (-1,0) the sign-consistent
/// value is -(beta+1)^{3/2}/(beta(beta+2)) (the integral of a positive
/// integrand is positive on the whole domain).
double i2_closed(double beta);

struct GaussIntegrals {
  double Ia;  // int (1/r^2 + a) exp(-(b^2/2)(1/r^2 + a^2 r^2)) dr
  double Ib;  // int (1/r^2)     exp(-(b^2/2)(1/r^2 + a^2 r^2)) dr
  double Ic;  // int             exp(-(b^2/2)(1/r^2 + a^2 r^2)) dr
};

/// Closed forms sqrt(2pi)/b, sqrt(2pi)/(2b), sqrt(2pi)/(2ab), each times
/// exp(-a b^2).
GaussIntegrals gauss_integrals(double a, double b);

/// Closed form of the theta-conditioned damped integral
/// (1/(2 sqrt2)) [ (a^2 + (theta-1)^2/2)^{-1/2} - (a^2 + (theta+1)^2/2)^{-1/2} ];
/// reduces to lemma1_rhs at theta = 1. Independent of sigma.
double theorem2_lhs_closed(double theta, double a);

enum class FormulaId { Lemma1, Lemma3_J, Lemma4, I2, Ia, Ib, Ic };

/// A closed-form value with its parameters, for reporting.
struct ClosedFormValue {
  double value;
  FormulaId formula_id;
  std::map<std::string, double> params;
};

ClosedFormValue closed_form_value(FormulaId id, const std::map<std::string, double>& params);

/// Deterministic adaptive quadrature of the defining integrand of the given
/// formula, with relative error estimate <= 1e-8 (QuadratureFailure
/// otherwise). Supported: Lemma1, I2, Ia, Ib, Ic; the path-space integrals
/// (Lemma3_J, Lemma4) have no 1D defining integrand and are verified by
/// Monte Carlo instead.
double quadrature_oracle(FormulaId id, const std::map<std::string, double>& params);

/// Radial assembly: int_0^inf lemma4_rhs(beta, rho, sigma)
/// exp(-sigma^2/(8 rho^2)) d rho, by adaptive quadrature.
double i2_assembly_quadrature(double beta, double sigma);

}  // namespace wpolar::oracles

#endif  // WPOLAR_ORACLES_HPP
