// Copyright (c) 2026 The wpolar authors.
// SPDX-License-Identifier: Apache-2.0

#include "wpolar/diffeo.hpp"

#include <cmath>
#include <stdexcept>

#include "wpolar/interp.hpp"

namespace wpolar {

Diffeo::Diffeo(Path xi) : xi_(std::move(xi)) {
  if (xi_.values.front() != 0.0)
    throw std::invalid_argument("Diffeo: xi(0) must be 0");
  // Shifted exponentials keep the cumulative integral inside the double
  // range for arbitrarily wild chart values.
  const double m = xi_.max();
  if (!std::isfinite(m) || !std::isfinite(xi_.min()))
    throw std::invalid_argument("Diffeo: xi must be finite");
  Path e = Path::zeros(xi_.grid);
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::exp(xi_.values[i] - m);
  phi_ = cumulative_trapezoid(e);
  const double total = phi_.back();
  log_norm_ = m + std::log(total);
  for (double& v : phi_) v /= total;
  phi_.front() = 0.0;
  phi_.back() = 1.0;
}

Diffeo Diffeo::identity(GridSpec grid) { return Diffeo(Path::zeros(grid)); }

Path a_map(const Diffeo& phi) { return phi.xi(); }

Diffeo a_inv(const Path& xi) { return Diffeo(xi); }

MobiusDiffeo::MobiusDiffeo(double b) : beta(b) {
  if (!(beta > -1.0)) throw std::invalid_argument("MobiusDiffeo: beta must be > -1");
}

Diffeo compose(const Diffeo& g, const Diffeo& phi) {
  const GridSpec grid = phi.grid();
  // xi_{g o phi}(t) = ln g'(phi(t)) + ln phi'(t) - (value at 0); g' comes
  // from g's chart evaluated at phi(t) by monotone interpolation.
  PchipInterpolator xi_g(g.grid().nodes(), g.xi().values);
  Path out = Path::zeros(grid);
  const std::vector<double>& pv = phi.phi();
  const std::vector<double> xi_at = xi_g.eval_sorted(pv);
  for (std::size_t i = 0; i < out.size(); ++i) {
    // ln psi'(t_i) up to a common constant: xi_g(phi) + xi_phi
    out[i] = xi_at[i] + phi.xi().values[i];
  }
  const double c = out[0];
  for (double& v : out.values) v -= c;
  out[0] = 0.0;
  return Diffeo(out);
}

Diffeo compose(const MobiusDiffeo& g, const Diffeo& phi) {
  const GridSpec grid = phi.grid();
  Path out = Path::zeros(grid);
  const std::vector<double>& pv = phi.phi();
  // psi' = (beta+1) phi' / (beta phi + 1)^2, hence
  // xi_psi = xi_phi - 2 ln(beta phi + 1)  (the t=0 term vanishes: phi(0)=0).
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = phi.xi().values[i] - 2.0 * std::log(g.beta * pv[i] + 1.0);
  out[0] = 0.0;
  return Diffeo(out);
}

Diffeo invert(const Diffeo& phi) {
  const GridSpec grid = phi.grid();
  // psi = phi^{-1} on the grid by inverse interpolation of (phi_i, t_i).
  PchipInterpolator inv(phi.phi(), grid.nodes());
  std::vector<double> psi = inv.eval_sorted(grid.nodes());
  psi.front() = 0.0;
  psi.back() = 1.0;
  // xi_psi(t) = ln psi'(t) - ln psi'(0) = -(xi_phi(psi(t)) - xi_phi(0))
  PchipInterpolator xi_interp(grid.nodes(), phi.xi().values);
  const std::vector<double> xi_at = xi_interp.eval_sorted(psi);
  Path out = Path::zeros(grid);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = -xi_at[i];
  out[0] = 0.0;
  return Diffeo(out);
}

Diffeo mobius_as_diffeo(const MobiusDiffeo& g, GridSpec grid) {
  Path xi = Path::zeros(grid);
  for (int i = 0; i < grid.n_points; ++i) {
    const double t = grid.t(i);
    xi[static_cast<std::size_t>(i)] =
        std::log(g.deriv(t)) - std::log(g.deriv(0.0));
  }
  xi[0] = 0.0;
  return Diffeo(xi);
}

bool is_nondegenerate(const Diffeo& phi) {
  const auto& v = phi.phi();
  for (std::size_t i = 1; i < v.size(); ++i)
    if (!(v[i] > v[i - 1])) return false;
  return true;
}

Diffeo sample_mu(Dispersion sigma, GridSpec grid, DrawCtx& rng) {
  return a_inv(sample_w0(sigma, grid, rng));
}

}  // namespace wpolar
