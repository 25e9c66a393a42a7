// Copyright (c) 2026 The wpolar authors.
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "wpolar/action.hpp"
#include "wpolar/brownian.hpp"
#include "wpolar/diffeo.hpp"
#include "wpolar/polar.hpp"

using namespace wpolar;

namespace {

// Kolmogorov-Smirnov distance against a callable CDF.
template <class Cdf>
double ks_statistic(std::vector<double> xs, Cdf cdf) {
  std::sort(xs.begin(), xs.end());
  const double n = static_cast<double>(xs.size());
  double d = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double c = cdf(xs[i]);
    d = std::max(d, std::abs(c - static_cast<double>(i) / n));
    d = std::max(d, std::abs(c - static_cast<double>(i + 1) / n));
  }
  return d;
}

double normal_cdf(double x, double sd) {
  return 0.5 * std::erfc(-x / (sd * std::numbers::sqrt2));
}

}  // namespace

TEST_CASE("integrate: trapezoid on the grid") {
  const GridSpec g(1001);
  Path one = Path::zeros(g), lin = Path::zeros(g), sq = Path::zeros(g);
  for (int i = 0; i < g.n_points; ++i) {
    const double t = g.t(i);
    one[static_cast<std::size_t>(i)] = 1.0;
    lin[static_cast<std::size_t>(i)] = t;
    sq[static_cast<std::size_t>(i)] = t * t;
  }
  CHECK(integrate(one) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(integrate(lin) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(std::abs(integrate(sq) - 1.0 / 3.0) < 1e-6);
}

TEST_CASE("sample_w0: pinned start, endpoint variance, covariance") {
  const GridSpec g(129);
  const Dispersion sigma(1.0);
  const RngStream s{2024, 0};
  const int n = 100000;
  const std::size_t i25 = 32, i75 = 96;  // t = 0.25, 0.75 on the 129 grid

  double m1 = 0.0, v1 = 0.0, cov = 0.0, m25 = 0.0, m75 = 0.0;
  std::vector<double> endpoints(n);
  for (int k = 0; k < n; ++k) {
    const Path p = sample_w0(sigma, g, s, static_cast<std::uint64_t>(k));
    CHECK(p[0] == 0.0);
    m1 += p.back();
    v1 += p.back() * p.back();
    m25 += p[i25];
    m75 += p[i75];
    cov += p[i25] * p[i75];
    endpoints[static_cast<std::size_t>(k)] = p.back();
  }
  m1 /= n; v1 /= n; m25 /= n; m75 /= n; cov /= n;
  CHECK(std::abs(m1) < 4.0 / std::sqrt(static_cast<double>(n)));
  CHECK(v1 == doctest::Approx(1.0).epsilon(0.02));
  CHECK(cov - m25 * m75 == doctest::Approx(0.25).epsilon(0.03));

  // Endpoint law N(0, sigma^2), KS at the 1% level.
  const double d = ks_statistic(std::move(endpoints),
                                [](double x) { return normal_cdf(x, 1.0); });
  CHECK(d * std::sqrt(static_cast<double>(n)) < 1.628);
}

TEST_CASE("increment independence over disjoint windows") {
  const GridSpec g(129);
  const RngStream s{11, 0};
  const int n = 50000;
  double c = 0.0, va = 0.0, vb = 0.0;
  for (int k = 0; k < n; ++k) {
    const Path p = sample_w0(Dispersion(1.0), g, s, static_cast<std::uint64_t>(k));
    const double a = p[32] - p[0];
    const double b = p[96] - p[64];
    c += a * b;
    va += a * a;
    vb += b * b;
  }
  const double corr = c / std::sqrt(va * vb);
  CHECK(std::abs(corr) < 4.0 / std::sqrt(static_cast<double>(n)));
}

TEST_CASE("sample_bridge: exact endpoints and interior variance") {
  const GridSpec g(257);
  const RngStream s{5, 3};
  const int n = 50000;
  double v = 0.0;
  for (int k = 0; k < n; ++k) {
    const Path p = sample_bridge(Dispersion(1.0), g, 0.0, 0.0, s,
                                 static_cast<std::uint64_t>(k));
    CHECK(p[0] == 0.0);
    CHECK(p.back() == 0.0);
    v += p[128] * p[128];
  }
  CHECK(v / n == doctest::Approx(0.25).epsilon(0.03));

  const Path q = sample_bridge(Dispersion(1.0), g, 1.0, 2.0, s, 999);
  CHECK(q[0] == 1.0);
  CHECK(q.back() == 2.0);

  // degenerate dispersion: the bridge hugs the pinned line
  const Path tiny = sample_bridge(Dispersion(1e-8), g, 0.0, 0.0, s, 1000);
  CHECK(tiny.sup_norm() < 1e-6);
}

TEST_CASE("bridge consistency: conditioned free paths match bridge marginals") {
  const GridSpec g(65);
  const RngStream s{77, 0};
  const double eps = 0.02;
  std::vector<double> mids;
  for (int k = 0; k < 200000 && mids.size() < 4000; ++k) {
    const Path p = sample_w0(Dispersion(1.0), g, s, static_cast<std::uint64_t>(k));
    if (std::abs(p.back()) < eps) mids.push_back(p[32]);
  }
  REQUIRE(mids.size() >= 1000);
  const double n = static_cast<double>(mids.size());
  // Bridge marginal at t = 1/2 given x(1) ~ 0: N(0, 1/4).
  const double d = ks_statistic(std::move(mids),
                                [](double x) { return normal_cdf(x, 0.5); });
  CHECK(d * std::sqrt(n) < 1.628);
}

TEST_CASE("act: identity, group law, positivity, radial invariance order") {
  const GridSpec g(513);
  Path x = Path::zeros(g);
  for (int i = 0; i < g.n_points; ++i)
    x[static_cast<std::size_t>(i)] = 1.5 + std::sin(2.0 * std::numbers::pi * g.t(i));

  const Path same = act(Diffeo::identity(g), x);
  double err = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i)
    err = std::max(err, std::abs(same[i] - x[i]));
  CHECK(err < 1e-10);

  // group law on smooth diffeos
  Path xi1 = Path::zeros(g), xi2 = Path::zeros(g);
  for (int i = 0; i < g.n_points; ++i) {
    const double t = g.t(i);
    xi1[static_cast<std::size_t>(i)] = 0.5 * std::sin(2.0 * std::numbers::pi * t);
    xi2[static_cast<std::size_t>(i)] = 0.4 * t * t - 0.2 * t;
  }
  const Diffeo gd = a_inv(xi1), hd = a_inv(xi2);
  const Path lhs = act(compose(gd, hd), x);
  const Path rhs = act(gd, act(hd, x));
  double gerr = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i)
    gerr = std::max(gerr, std::abs(lhs[i] - rhs[i]));
  CHECK(gerr < 5e-5);

  CHECK(act(gd, x).all_positive());

  // |rho(phi x) - rho(x)|/rho -> 0 at order >= 1 in dt
  double prev = -1.0;
  for (int np : {129, 257, 513, 1025}) {
    const GridSpec gg(np);
    Path xx = Path::zeros(gg);
    Path xi = Path::zeros(gg);
    for (int i = 0; i < np; ++i) {
      const double t = gg.t(i);
      xx[static_cast<std::size_t>(i)] = 1.5 + std::sin(2.0 * std::numbers::pi * t);
      xi[static_cast<std::size_t>(i)] = 0.5 * std::sin(2.0 * std::numbers::pi * t);
    }
    const double r0 = rho_of(xx);
    const double r1 = rho_of(act(a_inv(xi), xx));
    const double rel = std::abs(r1 - r0) / r0;
    if (prev > 0.0) CHECK(rel < prev / 1.8);  // at least first order
    prev = rel;
  }
}

TEST_CASE("reproducibility: identical (seed, stream, grid, sigma) bitwise") {
  const GridSpec g(513);
  const Path a = sample_w0(Dispersion(0.7), g, RngStream{99, 4}, 17);
  const Path b = sample_w0(Dispersion(0.7), g, RngStream{99, 4}, 17);
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i] == b[i]);
}
