// Copyright (c) 2026 The wpolar authors.
// SPDX-License-Identifier: Apache-2.0

#include "wpolar/schwarzian.hpp"

#include <algorithm>
#include <cmath>
#include <memory>

#include "wpolar/errors.hpp"
#include "wpolar/interp.hpp"

namespace wpolar {

SmoothOuterMap identity_map() {
  SmoothOuterMap m;
  m.f = [](double t) { return t; };
  m.df = [](double) { return 1.0; };
  m.d2f = [](double) { return 0.0; };
  m.d3f = [](double) { return 0.0; };
  return m;
}

SmoothOuterMap mobius_map(double beta) {
  MobiusDiffeo g(beta);
  SmoothOuterMap m;
  m.f = [g](double t) { return g(t); };
  m.df = [g](double t) { return g.deriv(t); };
  m.d2f = [g](double t) { return g.deriv2(t); };
  m.d3f = [g](double t) { return g.deriv3(t); };
  m.is_mobius = true;
  m.beta = beta;
  return m;
}

SmoothOuterMap exp_ramp_map(double c) {
  if (c == 0.0) return identity_map();
  const double den = std::expm1(c);
  SmoothOuterMap m;
  m.f = [c, den](double t) { return std::expm1(c * t) / den; };
  m.df = [c, den](double t) { return c * std::exp(c * t) / den; };
  m.d2f = [c, den](double t) { return c * c * std::exp(c * t) / den; };
  m.d3f = [c, den](double t) { return c * c * c * std::exp(c * t) / den; };
  return m;
}

SmoothOuterMap grid_map(GridSpec grid, std::vector<double> f,
                        std::vector<double> df, std::vector<double> d2f) {
  const auto ts = grid.nodes();
  auto sf = std::make_shared<PchipInterpolator>(ts, std::move(f));
  auto sdf = std::make_shared<PchipInterpolator>(ts, std::move(df));
  auto sd2f = std::make_shared<PchipInterpolator>(ts, std::move(d2f));
  SmoothOuterMap m;
  m.f = [sf](double t) { return (*sf)(t); };
  m.df = [sdf](double t) { return (*sdf)(t); };
  m.d2f = [sd2f](double t) { return (*sd2f)(t); };
  m.stencil_step = grid.dt();
  return m;
}

namespace {

// d/dt of r = f''/f' by 4th-order finite differences with one-sided
// closure near the endpoints of [0,1].
double ratio_derivative_stencil(const SmoothOuterMap& f, double t) {
  const double h = f.stencil_step;
  auto r = [&f](double s) { return f.d2f(s) / f.df(s); };
  if (t - 2.0 * h >= 0.0 && t + 2.0 * h <= 1.0) {
    return (r(t - 2.0 * h) - 8.0 * r(t - h) + 8.0 * r(t + h) - r(t + 2.0 * h)) /
           (12.0 * h);
  }
  if (t + 4.0 * h <= 1.0) {
    return (-25.0 * r(t) + 48.0 * r(t + h) - 36.0 * r(t + 2.0 * h) +
            16.0 * r(t + 3.0 * h) - 3.0 * r(t + 4.0 * h)) /
           (12.0 * h);
  }
  return (25.0 * r(t) - 48.0 * r(t - h) + 36.0 * r(t - 2.0 * h) -
          16.0 * r(t - 3.0 * h) + 3.0 * r(t - 4.0 * h)) /
         (12.0 * h);
}

}  // namespace

double schwarzian_of(const SmoothOuterMap& f, double t) {
  const double ratio = f.d2f(t) / f.df(t);
  double dratio;
  if (f.d3f) {
    dratio = f.d3f(t) / f.df(t) - ratio * ratio;
  } else {
    dratio = ratio_derivative_stencil(f, t);
  }
  return dratio - 0.5 * ratio * ratio;
}

double radon_nikodym(const SmoothOuterMap& g, const Diffeo& phi, Dispersion sigma) {
  const double inv_s2 = 1.0 / (sigma.sigma * sigma.sigma);
  const double g0 = g.df(0.0), g1 = g.df(1.0);
  const double boundary =
      (g.d2f(0.0) / g0) * phi.phi_prime0() - (g.d2f(1.0) / g1) * phi.phi_prime1();
  double integral = 0.0;
  if (!g.is_mobius) {
    const GridSpec grid = phi.grid();
    Path integrand = Path::zeros(grid);
    for (int i = 0; i < grid.n_points; ++i) {
      const auto k = static_cast<std::size_t>(i);
      const double dp = phi.phi_prime(k);
      integrand[k] = schwarzian_of(g, phi.phi()[k]) * dp * dp;
    }
    integral = integrate(integrand);
  }
  return std::exp(inv_s2 * (boundary + integral)) / std::sqrt(g0 * g1);
}

double p_mobius(double beta, double dphi0, double dphi1, Dispersion sigma) {
  if (!(beta > -1.0)) throw DomainError("p_mobius: beta must be > -1");
  const double s2 = sigma.sigma * sigma.sigma;
  return std::exp((2.0 * beta / s2) * (-dphi0 + dphi1 / (beta + 1.0)));
}

double p_mobius(double beta, const Diffeo& phi, Dispersion sigma) {
  return p_mobius(beta, phi.phi_prime0(), phi.phi_prime1(), sigma);
}

SchwarzianInverseResult schwarzian_inverse(const Path& v, double tol, int max_iter) {
  if (v.sup_norm() > 0.25 + 1e-15)
    throw NormTooLarge("schwarzian_inverse: ||v|| must be <= 1/4");
  const GridSpec grid = v.grid;
  const std::size_t n = grid.size();
  const double h = grid.dt();

  // Right-tail antiderivative T[u](t_i) = int_{t_i}^1 u, composite trapezoid.
  auto right_integral = [&](const std::vector<double>& u) {
    std::vector<double> s(n);
    s[n - 1] = 0.0;
    for (std::size_t i = n - 1; i > 0; --i)
      s[i - 1] = s[i] + 0.5 * h * (u[i - 1] + u[i]);
    return s;
  };

  SchwarzianInverseResult res;
  std::vector<double> u(v.values);  // u_0 = v
  for (int it = 0; it < max_iter; ++it) {
    const std::vector<double> tail = right_integral(u);
    double diff = 0.0;
    std::vector<double> next(n);
    for (std::size_t i = 0; i < n; ++i) {
      next[i] = v.values[i] + 0.5 * tail[i] * tail[i];
      diff = std::max(diff, std::abs(next[i] - u[i]));
    }
    u.swap(next);
    res.step_norms.push_back(diff);
    res.iterations = it + 1;
    if (diff <= tol) break;
  }
  if (res.step_norms.empty() || res.step_norms.back() > tol)
    throw NoConvergence("schwarzian_inverse: fixed point did not converge");

  // h = f''/f' = -int_t^1 u, so h' = u and Sch{f} = u - h^2/2 = v.
  const std::vector<double> tail = right_integral(u);
  std::vector<double> hr(n);
  for (std::size_t i = 0; i < n; ++i) hr[i] = -tail[i];

  // f' proportional to exp(int_0^t h); normalize so f(0)=0, f(1)=1.
  Path hpath(grid, hr);
  const std::vector<double> H = cumulative_trapezoid(hpath);
  std::vector<double> fp(n);
  for (std::size_t i = 0; i < n; ++i) fp[i] = std::exp(H[i]);
  Path fppath(grid, fp);
  std::vector<double> fv = cumulative_trapezoid(fppath);
  const double norm = fv.back();
  std::vector<double> d2(n);
  for (std::size_t i = 0; i < n; ++i) {
    fv[i] /= norm;
    fp[i] /= norm;
    d2[i] = hr[i] * fp[i];
  }
  fv.front() = 0.0;
  fv.back() = 1.0;

  res.map = grid_map(grid, std::move(fv), std::move(fp), std::move(d2));
  res.u = Path(grid, std::move(u));
  res.log_deriv_ratio = Path(grid, std::move(hr));
  return res;
}

}  // namespace wpolar
