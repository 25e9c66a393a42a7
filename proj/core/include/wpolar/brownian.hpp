// Copyright (c) 2026 The wpolar authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef WPOLAR_BROWNIAN_HPP
#define WPOLAR_BROWNIAN_HPP

#include "wpolar/grid.hpp"
#include "wpolar/rng.hpp"

namespace wpolar {

/// Wiener path pinned to 0 at t=0: independent centered Gaussian increments
/// with variance sigma^2 dt; x(1) is N(0, sigma^2).
Path sample_w0(Dispersion sigma, GridSpec grid, DrawCtx& rng);

inline Path sample_w0(Dispersion sigma, GridSpec grid, RngStream s, std::uint64_t k) {
  DrawCtx ctx(s, k);
  return sample_w0(sigma, grid, ctx);
}

/// Brownian bridge from start to end over [0,1]; endpoints are exact.
Path sample_bridge(Dispersion sigma, GridSpec grid, double start, double end,
                   DrawCtx& rng);

inline Path sample_bridge(Dispersion sigma, GridSpec grid, double start, double end,
                          RngStream s, std::uint64_t k) {
  DrawCtx ctx(s, k);
  return sample_bridge(sigma, grid, start, end, ctx);
}

/// Probability that the Brownian bridge joining (x0, x1) over one grid step
/// dips below zero: exp(-2 x0 x1 / (sigma^2 dt)) when both ends are positive.
inline double step_hit_probability(double x0, double x1, double sigma, double dt) {
  if (x0 <= 0.0 || x1 <= 0.0) return 1.0;
  return std::exp(-2.0 * x0 * x1 / (sigma * sigma * dt));
}

/// Checks positivity only at the grid nodes. Biased for continuous paths:
/// excursions below zero between nodes go unseen.
inline bool survives_positive_nodes(const Path& x) { return x.all_positive(); }

/// Samples, per step, whether the interpolating Brownian bridge crossed
/// zero. Unbiased indicator of the continuous path staying positive given
/// the grid values.
bool survives_positive_exact(const Path& x, Dispersion sigma, DrawCtx& rng);

/// Closed-form probability that a Brownian bridge from q0 to q1 over [0,1]
/// stays positive (reflection principle); zero when an endpoint is not.
inline double bridge_survival_weight(double q0, double q1, double sigma) {
  if (q0 <= 0.0 || q1 <= 0.0) return 0.0;
  return 1.0 - std::exp(-2.0 * q0 * q1 / (sigma * sigma));
}

}  // namespace wpolar

#endif  // WPOLAR_BROWNIAN_HPP
