// Copyright (c) 2026 The wpolar authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef WPOLAR_DIFFEO_HPP
#define WPOLAR_DIFFEO_HPP

#include <cmath>
#include <vector>

#include "wpolar/brownian.hpp"
#include "wpolar/grid.hpp"
#include "wpolar/rng.hpp"

namespace wpolar {

/// Orientation-preserving C^1 diffeomorphism of [0,1] fixing the endpoints,
/// stored in log-derivative coordinates:
///
///   xi(t) = ln phi'(t) - ln phi'(0),   phi(t) = int_0^t e^xi / int_0^1 e^xi.
///
/// The chart is canonical: phi values and derivatives are always derived
/// from xi (trapezoid normalizer), so chart round trips are exact on the
/// representation and endpoint derivatives need no interpolation.
class Diffeo {
 public:
  /// Build from the chart; requires xi(0) = 0.
  explicit Diffeo(Path xi);

  static Diffeo identity(GridSpec grid);

  const GridSpec& grid() const { return xi_.grid; }
  const Path& xi() const { return xi_; }
  const std::vector<double>& phi() const { return phi_; }
  double dlog_norm() const { return std::exp(log_norm_); }
  /// ln of the normalizer, computed shift-stably (survives chart values far
  /// beyond the double exponent range).
  double log_norm() const { return log_norm_; }

  double phi_prime(std::size_t i) const { return std::exp(xi_.values[i] - log_norm_); }
  double phi_prime0() const { return std::exp(-log_norm_); }
  double phi_prime1() const { return std::exp(xi_.values.back() - log_norm_); }

 private:
  Path xi_;
  std::vector<double> phi_;
  double log_norm_ = 0.0;
};

/// The chart map: returns xi with xi(0)=0. Exact inverse of a_inv on the
/// stored representation.
Path a_map(const Diffeo& phi);

/// The inverse chart map (normalized exponential antiderivative).
Diffeo a_inv(const Path& xi);

/// Moebius subfamily g_beta(t) = (beta+1) t / (beta t + 1), beta > -1.
/// Closed forms for all derivatives; Schwarzian derivative is identically 0.
struct MobiusDiffeo {
  double beta;

  explicit MobiusDiffeo(double b);

  double operator()(double t) const { return (beta + 1.0) * t / (beta * t + 1.0); }
  double deriv(double t) const {
    const double d = beta * t + 1.0;
    return (beta + 1.0) / (d * d);
  }
  double deriv2(double t) const {
    const double d = beta * t + 1.0;
    return -2.0 * beta * (beta + 1.0) / (d * d * d);
  }
  double deriv3(double t) const {
    const double d = beta * t + 1.0;
    return 6.0 * beta * beta * (beta + 1.0) / (d * d * d * d);
  }

  /// Index of g_b1 o g_b2 (again Moebius): b1 + b2 + b1 b2.
  static double compose_beta(double b1, double b2) { return b1 + b2 + b1 * b2; }
  /// Index of the inverse map: -beta / (beta + 1).
  static double inverse_beta(double b) { return -b / (b + 1.0); }

  MobiusDiffeo inverse() const { return MobiusDiffeo(inverse_beta(beta)); }
};

/// Group composition g o phi on the grid (monotone interpolation of g).
Diffeo compose(const Diffeo& g, const Diffeo& phi);

/// Composition with a Moebius outer map, using its closed-form derivative.
Diffeo compose(const MobiusDiffeo& g, const Diffeo& phi);

/// Grid representation of phi^{-1} via monotone interpolation;
/// compose(invert(phi), phi) is the identity within interpolation tolerance.
Diffeo invert(const Diffeo& phi);

/// Grid sample of the Moebius map as a Diffeo.
Diffeo mobius_as_diffeo(const MobiusDiffeo& g, GridSpec grid);

/// False when phi increments underflowed (chart swings beyond the double
/// exponent range). Such a sample's density weight underflows to zero as
/// well, so estimators drop it.
bool is_nondegenerate(const Diffeo& phi);

/// Sampler for the measure mu_sigma: the pushforward of the pinned Wiener
/// measure under the inverse chart.
Diffeo sample_mu(Dispersion sigma, GridSpec grid, DrawCtx& rng);

inline Diffeo sample_mu(Dispersion sigma, GridSpec grid, RngStream s, std::uint64_t k) {
  DrawCtx ctx(s, k);
  return sample_mu(sigma, grid, ctx);
}

}  // namespace wpolar

#endif  // WPOLAR_DIFFEO_HPP
