// Copyright (c) 2026 The wpolar authors.
// SPDX-License-Identifier: Apache-2.0

#include "wpolar/action.hpp"

#include <cmath>

#include "wpolar/interp.hpp"

namespace wpolar {

Path act(const Diffeo& phi, const Path& x) {
  const GridSpec grid = x.grid;
  const auto ts = grid.nodes();

  PchipInterpolator inv(phi.phi(), phi.grid().nodes());
  std::vector<double> s = inv.eval_sorted(ts);  // s_i = phi^{-1}(t_i)
  s.front() = 0.0;
  s.back() = 1.0;

  PchipInterpolator xv(ts, x.values);
  PchipInterpolator xiv(phi.grid().nodes(), phi.xi().values);
  const std::vector<double> x_at = xv.eval_sorted(s);
  const std::vector<double> xi_at = xiv.eval_sorted(s);

  const double log_norm = phi.log_norm();
  Path out = Path::zeros(grid);
  for (std::size_t i = 0; i < out.size(); ++i) {
    const double dphi = std::exp(xi_at[i] - log_norm);  // phi'(s_i)
    out[i] = x_at[i] * std::sqrt(dphi);
  }
  return out;
}

}  // namespace wpolar
