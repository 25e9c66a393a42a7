// Copyright (c) 2026 The wpolar authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef WPOLAR_MC_HPP
#define WPOLAR_MC_HPP

#include <cmath>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "wpolar/diffeo.hpp"
#include "wpolar/grid.hpp"
#include "wpolar/rng.hpp"

namespace wpolar::mc {

/// How positivity of a w_sigma path is decided.
///  - NodeIndicator: min over grid nodes only (misses excursions between
///    nodes; kept for the discretization-bias study).
///  - ExactBernoulli: node check plus, per step, a draw of whether the
///    interpolating Brownian bridge crossed zero. Unbiased at any grid.
///  - SurvivalWeight: closed-form whole-bridge survival probability as a
///    multiplicative weight; applicable when nothing else depends on the
///    path interior. Lowest variance.
enum class PositivityMode { NodeIndicator, ExactBernoulli, SurvivalWeight };

/// Importance proposal with strictly positive density on (0, inf).
struct Proposal {
  enum class Kind { HalfNormal, LogNormal };
  Kind kind = Kind::HalfNormal;
  double p1 = 1.0;  // HalfNormal: scale; LogNormal: log-space mean
  double p2 = 0.0;  // LogNormal: log-space sd

  double sample(DrawCtx& rng) const;
  double pdf(double x) const;

  static Proposal half_normal(double scale) {
    return Proposal{Kind::HalfNormal, scale, 0.0};
  }
  static Proposal log_normal(double mu_log, double sd_log) {
    return Proposal{Kind::LogNormal, mu_log, sd_log};
  }
};

struct EstimatorConfig {
  Dispersion sigma{1.0};
  double a = 1.0;       // damping coefficient of exp(-a^2 x^2(0) / sigma^2)
  double beta = 1.0;    // Moebius index
  double theta = 1.0;   // endpoint ratio in the theta-conditioned integrals
  double kappa = 0.125; // radial exponent constant under test
  std::size_t n_samples = 200000;
  GridSpec grid{513};
  std::optional<Proposal> rho_proposal;
  std::optional<Proposal> q0_proposal;
  RngStream stream{};
  int workers = 1;
  PositivityMode positivity = PositivityMode::ExactBernoulli;
};

/// A Monte Carlo estimate with its target when one exists.
struct MCEstimate {
  double mean = 0.0;
  double std_err = 0.0;
  std::size_t n = 0;
  std::optional<double> target;
  std::optional<double> z_score;
  double ess = 0.0;  // effective sample size of the weighted draws
};

struct PathFunctional {
  std::string name;
  std::function<double(const Path&)> fn;
};

struct DiffeoFunctional {
  std::string name;
  std::function<double(const Diffeo&)> fn;
};

/// Deterministic parallel evaluation: values[k] depends only on
/// (stream, k), and the reduction is a fixed pairwise summation, so the
/// result is bitwise independent of the worker count.
std::vector<double> mc_table(std::size_t n, std::size_t width, int workers,
                             const std::function<void(std::size_t, double*)>& fill);

double pairwise_sum(const double* v, std::size_t n, std::size_t stride = 1);

MCEstimate summarize(const std::vector<double>& values, std::size_t width,
                     std::size_t column, std::optional<double> target);

/// Paired difference z-score for two columns sharing the same samples.
double paired_z(const std::vector<double>& values, std::size_t width,
                std::size_t col_a, std::size_t col_b);

Proposal default_q0_proposal(const EstimatorConfig& cfg);
Proposal default_rho_proposal(const EstimatorConfig& cfg);

/// Diagonally conditioned damped integral over positive paths, estimated by
/// endpoint conditioning: the delta contributes the one-step transition
/// density at theta q0 - q0 = 0, and the conditioned path is a Brownian
/// bridge whose positivity is decided per cfg.positivity.
/// Target: oracles::lemma1_rhs(cfg.a).
MCEstimate estimate_lemma1(const EstimatorConfig& cfg);

/// The J integral at alpha = beta^2/(2(beta+1)), in the chart: the delta
/// pins xi(1) = 0, contributing the Gaussian density rho/(2 sqrt(2pi) sigma)
/// and the Jacobian 2 of y = exp(xi(1)/2); the remaining average runs over
/// chart bridges. Target: oracles::j_closed.
MCEstimate estimate_j(const EstimatorConfig& cfg, double rho);

/// Same conditioning with the delta rewritten through the endpoint value
/// x(0) = rho sqrt(phi'(0)) and the (phi'(0) phi'(1))^{3/4} weight; on the
/// conditioned set the integrand reduces to phi'(0) exp(-a^2 rho^2 phi'(0)
/// / sigma^2). Target: oracles::lemma4_rhs.
MCEstimate estimate_lemma4(const EstimatorConfig& cfg, double rho);

struct PairedResult {
  MCEstimate pullback;  // E[F(g^{-1} o phi)]
  MCEstimate weighted;  // E[p_g(phi) F(phi)]
  double z_diff = 0.0;  // paired z of the difference
};

/// Quasi-invariance cross-check for the Moebius family: pullback vs
/// density-weighted estimator over a shared sample stream.
PairedResult verify_theorem3(const EstimatorConfig& cfg, const DiffeoFunctional& F);

/// Total-mass check E[p_{g_beta}] = 1.
MCEstimate theorem3_mass(const EstimatorConfig& cfg);

struct TwoSided {
  MCEstimate lhs;
  MCEstimate rhs;
  double z = 0.0;  // (lhs - rhs) / sqrt(se_l^2 + se_r^2)
};

struct Theorem1Result {
  std::vector<std::string> functional_names;
  std::vector<MCEstimate> lhs;                     // one per functional
  std::vector<double> kappas;                      // candidate constants
  std::vector<std::vector<MCEstimate>> rhs;        // [kappa][functional]
  std::vector<std::vector<double>> z;              // [kappa][functional]
  std::optional<double> kappa_selected;            // unique kappa with all |z| <= 3
};

/// Two-sided polar-decomposition check: damped expectations of bounded
/// functionals under w_sigma (left) against the radial x chart sampler
/// (right), for each candidate radial exponent constant kappa.
Theorem1Result verify_theorem1(const EstimatorConfig& cfg,
                               const std::vector<PathFunctional>& fs,
                               const std::vector<double>& kappas);

/// Theta-conditioned two-sided check. Left: endpoint conditioning of
/// w_sigma with bridge positivity. Right: the chart delta at
/// xi(1) = 2 ln(theta) combined with a deterministic rho quadrature of
/// bridge-conditioned estimates.
TwoSided verify_theorem2(const EstimatorConfig& cfg);

}  // namespace wpolar::mc

#endif  // WPOLAR_MC_HPP
