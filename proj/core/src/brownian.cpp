// Copyright (c) 2026 The wpolar authors.
// SPDX-License-Identifier: Apache-2.0

#include "wpolar/brownian.hpp"

#include <cmath>

namespace wpolar {

Path sample_w0(Dispersion sigma, GridSpec grid, DrawCtx& rng) {
  Path p = Path::zeros(grid);
  const double sd = sigma.sigma * std::sqrt(grid.dt());
  for (std::size_t i = 1; i < p.size(); ++i)
    p[i] = p[i - 1] + sd * rng.normal();
  return p;
}

Path sample_bridge(Dispersion sigma, GridSpec grid, double start, double end,
                   DrawCtx& rng) {
  Path w = sample_w0(sigma, grid, rng);
  const double w1 = w.back();
  const double span = end - start;
  Path p = Path::zeros(grid);
  for (std::size_t i = 0; i < p.size(); ++i) {
    const double t = grid.t(static_cast<int>(i));
    p[i] = start + w[i] - t * w1 + t * span;
  }
  p[0] = start;
  p[p.size() - 1] = end;
  return p;
}

bool survives_positive_exact(const Path& x, Dispersion sigma, DrawCtx& rng) {
  if (!x.all_positive()) return false;
  const double dt = x.grid.dt();
  for (std::size_t i = 0; i + 1 < x.size(); ++i) {
    const double p_hit = step_hit_probability(x[i], x[i + 1], sigma.sigma, dt);
    if (rng.bernoulli(p_hit)) return false;
  }
  return true;
}

}  // namespace wpolar
