// Copyright (c) 2026 The wpolar authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef WPOLAR_PLANAR_HPP
#define WPOLAR_PLANAR_HPP

#include <complex>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "wpolar/diffeo.hpp"
#include "wpolar/grid.hpp"
#include "wpolar/mc.hpp"

namespace wpolar::planar {

/// Complex-valued path z = x + i y on a shared grid.
struct ComplexPath {
  Path re;
  Path im;

  ComplexPath() = default;
  ComplexPath(Path r, Path i);

  const GridSpec& grid() const { return re.grid; }
  std::size_t size() const { return re.size(); }
  std::complex<double> at(std::size_t i) const { return {re[i], im[i]}; }
  double modulus(std::size_t i) const { return std::hypot(re[i], im[i]); }
  double min_modulus() const;
};

/// Four-component polar coordinates of a nonvanishing complex path:
/// radius, diffeomorphism, base angle on S^1 = R/Z, and phase path.
struct PolarTuple2D {
  double r;
  Diffeo phi;
  double alpha;  // in [0,1)
  Path eta;      // eta(0) = 0
};

/// z(t) = (r / sqrt((phi^{-1})'(t))) exp(2 pi alpha i + i eta(phi^{-1}(t))).
/// The modulus is exactly the radial reconstruction of (r, phi).
ComplexPath l_map(const PolarTuple2D& p);

/// Inverse coordinates: (r, phi) from the modulus path, alpha from the
/// principal argument at t=0, eta by branch-tracked phase accumulation
/// along z(phi(t)). Throws VanishingPath when the modulus touches the
/// grid floor and BranchJump when an adjacent-node phase increment
/// reaches pi.
PolarTuple2D l_inv(const ComplexPath& z);

struct WeightedComplexPath {
  ComplexPath z;
  double weight = 1.0;
  double r = 0.0;  // radial coordinate of the generating tuple, when known
};

/// Product Wiener sample: independent real and imaginary components, each
/// with a Gaussian-importance Lebesgue start of scale q0_scale per
/// coordinate (weight = 1/proposal density; estimands must damp |z(0)|).
WeightedComplexPath sample_wc(Dispersion sigma, GridSpec grid, double q0_scale,
                              DrawCtx& rng);

/// Weight parameters of the radial product measure:
/// weight = alpha_total * r * exp(-kappa2 sigma^2 / r^2) phi'(0) phi'(1).
/// As printed the measure carries kappa2 = 1/4 and alpha_total = 1; the
/// verification sweeps candidates and reports which pair fits.
struct VarsigmaWeight {
  double kappa2 = 0.25;
  double alpha_total = 1.0;
};

/// Sample of the radial-coordinates measure: r from the proposal (Lebesgue
/// importance), phi from mu_{2 sigma/r}, eta from the pinned Wiener measure
/// with dispersion sigma/r, alpha uniform on [0,1).
WeightedComplexPath sample_varsigma(Dispersion sigma, GridSpec grid,
                                    const mc::Proposal& rho_proposal,
                                    const VarsigmaWeight& w, DrawCtx& rng);

struct ComplexFunctional {
  std::string name;
  std::function<double(const ComplexPath&)> fn;
};

struct Theorem4Result {
  std::vector<std::string> functional_names;
  std::vector<mc::MCEstimate> lhs;                  // product-measure side
  std::vector<VarsigmaWeight> combos;               // candidate weights
  std::vector<std::vector<mc::MCEstimate>> rhs;     // [combo][functional]
  std::vector<std::vector<double>> z;               // [combo][functional]
  std::optional<std::size_t> selected;              // unique passing combo
};

/// Two-sided comparison E_{product}[F] vs E_{radial}[F] for damped bounded
/// functionals, sweeping the radial exponent constant and the total mass
/// assigned to the angle coordinate.
Theorem4Result verify_theorem4(const mc::EstimatorConfig& cfg,
                               const std::vector<ComplexFunctional>& fs,
                               const std::vector<VarsigmaWeight>& combos,
                               double q0_scale = 0.7071067811865476);

/// Default sweep: kappa2 in {0, 1/8, 1/4} x alpha_total in {2 pi, 1}.
std::vector<VarsigmaWeight> default_weight_sweep();

}  // namespace wpolar::planar

#endif  // WPOLAR_PLANAR_HPP
