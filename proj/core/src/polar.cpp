// Copyright (c) 2026 The wpolar authors.
// SPDX-License-Identifier: Apache-2.0

#include "wpolar/polar.hpp"

#include <cmath>
#include <cstdio>

#include "wpolar/errors.hpp"
#include "wpolar/interp.hpp"

namespace wpolar {

namespace {

Path inverse_square(const Path& x) {
  if (!x.all_positive())
    throw NonPositivePath("path leaves the positive cone (value <= 0 on the grid)");
  Path w = Path::zeros(x.grid);
  for (std::size_t i = 0; i < x.size(); ++i) w[i] = 1.0 / (x[i] * x[i]);
  return w;
}

}  // namespace

double rho_of(const Path& x) {
  return 1.0 / std::sqrt(integrate(inverse_square(x)));
}

PolarPair decompose(const Path& x) {
  const Path w = inverse_square(x);
  if (x.min() < 1e-6 * x.max())
    std::fprintf(stderr,
                 "wpolar: decompose: min(x)=%g is below 1e-6*max(x)=%g; "
                 "x^-2 quadrature may be inaccurate\n",
                 x.min(), 1e-6 * x.max());

  std::vector<double> u = cumulative_trapezoid(w);  // phi^{-1}(t_i) / rho^2
  const double total = u.back();
  const double rho = 1.0 / std::sqrt(total);
  for (double& v : u) v /= total;
  u.front() = 0.0;
  u.back() = 1.0;

  const GridSpec grid = x.grid;
  const auto ts = grid.nodes();
  // phi = inverse of the monotone grid function u.
  PchipInterpolator inv(u, ts);
  std::vector<double> phi_vals = inv.eval_sorted(ts);
  phi_vals.front() = 0.0;
  phi_vals.back() = 1.0;

  // xi(s) = ln phi'(s) - ln phi'(0) = 2 ln(x(phi(s)) / x(0)),
  // since phi'(s) = x(phi(s))^2 / rho^2.
  PchipInterpolator xv(ts, x.values);
  const std::vector<double> x_at = xv.eval_sorted(phi_vals);
  Path xi = Path::zeros(grid);
  for (std::size_t i = 0; i < xi.size(); ++i)
    xi[i] = 2.0 * (std::log(x_at[i]) - std::log(x.values.front()));
  xi[0] = 0.0;

  return PolarPair{rho, a_inv(xi)};
}

Path reconstruct(const PolarPair& p) {
  const Diffeo& phi = p.phi;
  const GridSpec grid = phi.grid();
  const auto ts = grid.nodes();

  PchipInterpolator inv(phi.phi(), ts);
  std::vector<double> s = inv.eval_sorted(ts);
  s.front() = 0.0;
  s.back() = 1.0;

  PchipInterpolator xiv(ts, phi.xi().values);
  const std::vector<double> xi_at = xiv.eval_sorted(s);
  const double log_norm = phi.log_norm();

  Path out = Path::zeros(grid);
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = p.rho * std::sqrt(std::exp(xi_at[i] - log_norm));
  out[0] = p.rho * std::sqrt(phi.phi_prime0());
  out[out.size() - 1] = p.rho * std::sqrt(phi.phi_prime1());
  return out;
}

}  // namespace wpolar
