// Copyright (c) 2026 The wpolar authors.
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "wpolar/errors.hpp"
#include "wpolar/planar.hpp"
#include "wpolar/polar.hpp"

using namespace wpolar;
using namespace wpolar::planar;

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

ComplexPath circle_path(GridSpec g, double winding, double radius = 1.0) {
  Path re = Path::zeros(g), im = Path::zeros(g);
  for (int i = 0; i < g.n_points; ++i) {
    const double t = g.t(i);
    re[static_cast<std::size_t>(i)] = radius * std::cos(kTwoPi * winding * t);
    im[static_cast<std::size_t>(i)] = radius * std::sin(kTwoPi * winding * t);
  }
  return ComplexPath(std::move(re), std::move(im));
}

ComplexPath smooth_loop(GridSpec g) {
  Path re = Path::zeros(g), im = Path::zeros(g);
  for (int i = 0; i < g.n_points; ++i) {
    const double t = g.t(i);
    const double mod = 1.0 + 0.4 * std::sin(kTwoPi * t) + 0.2 * t;
    const double ph = 0.7 * std::sin(2.0 * kTwoPi * t) + 1.3 * t;
    re[static_cast<std::size_t>(i)] = mod * std::cos(ph);
    im[static_cast<std::size_t>(i)] = mod * std::sin(ph);
  }
  return ComplexPath(std::move(re), std::move(im));
}

double sup_diff(const ComplexPath& a, const ComplexPath& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    d = std::max({d, std::abs(a.re[i] - b.re[i]), std::abs(a.im[i] - b.im[i])});
  return d;
}

}  // namespace

TEST_CASE("l_map: trivial tuples and the half-turn") {
  const GridSpec g(257);
  const PolarTuple2D one{1.0, Diffeo::identity(g), 0.0, Path::zeros(g)};
  const ComplexPath z1 = l_map(one);
  for (std::size_t i = 0; i < z1.size(); ++i) {
    CHECK(z1.re[i] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(std::abs(z1.im[i]) < 1e-12);
  }
  const PolarTuple2D half{1.0, Diffeo::identity(g), 0.5, Path::zeros(g)};
  const ComplexPath zm = l_map(half);
  for (std::size_t i = 0; i < zm.size(); ++i)
    CHECK(zm.re[i] == doctest::Approx(-1.0).epsilon(1e-12));
}

TEST_CASE("modulus of l_map equals the radial reconstruction exactly") {
  const GridSpec g(257);
  DrawCtx rng(RngStream{31, 0}, 0);
  const Diffeo phi = sample_mu(Dispersion(1.5), g, rng);
  Path eta = sample_w0(Dispersion(0.8), g, rng);
  const PolarTuple2D p{1.7, phi, 0.3, eta};
  const ComplexPath z = l_map(p);
  const Path mod = reconstruct(1.7, phi);
  for (std::size_t i = 0; i < z.size(); ++i)
    CHECK(z.modulus(i) == doctest::Approx(mod[i]).epsilon(1e-12));
}

TEST_CASE("rotation equivariance in alpha") {
  const GridSpec g(129);
  DrawCtx rng(RngStream{32, 0}, 0);
  const Diffeo phi = sample_mu(Dispersion(1.0), g, rng);
  const Path eta = sample_w0(Dispersion(1.0), g, rng);
  const double c = 0.2;
  const ComplexPath a = l_map(PolarTuple2D{1.0, phi, 0.1, eta});
  const ComplexPath b = l_map(PolarTuple2D{1.0, phi, 0.1 + c, eta});
  const double co = std::cos(kTwoPi * c), si = std::sin(kTwoPi * c);
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(b.re[i] == doctest::Approx(co * a.re[i] - si * a.im[i]).epsilon(1e-10));
    CHECK(b.im[i] == doctest::Approx(si * a.re[i] + co * a.im[i]).epsilon(1e-10));
  }
}

TEST_CASE("l_inv: constants and the unit circle loop") {
  const GridSpec g(513);
  Path re = Path::zeros(g), im = Path::zeros(g);
  for (auto& v : re.values) v = 2.5;
  const PolarTuple2D pc = l_inv(ComplexPath(re, im));
  CHECK(pc.r == doctest::Approx(2.5).epsilon(1e-12));
  CHECK(pc.alpha == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(pc.eta.sup_norm() < 1e-12);

  const PolarTuple2D pl = l_inv(circle_path(g, 1.0));
  CHECK(pl.r == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(pl.alpha == doctest::Approx(0.0).epsilon(1e-12));
  double iderr = 0.0, etaerr = 0.0;
  for (int i = 0; i < g.n_points; ++i) {
    iderr = std::max(iderr,
                     std::abs(pl.phi.phi()[static_cast<std::size_t>(i)] - g.t(i)));
    etaerr = std::max(etaerr, std::abs(pl.eta.values[static_cast<std::size_t>(i)] -
                                       kTwoPi * g.t(i)));
  }
  CHECK(iderr < 1e-9);
  CHECK(etaerr < 1e-8);
}

TEST_CASE("l_map(l_inv(z)) converges to z under refinement; eta is branch-stable") {
  double prev = -1.0;
  std::vector<double> eta_mid;
  for (int np : {257, 513, 1025}) {
    const GridSpec g(np);
    const ComplexPath z = smooth_loop(g);
    const PolarTuple2D p = l_inv(z);
    const ComplexPath back = l_map(p);
    const double err = sup_diff(z, back);
    if (prev > 0.0) CHECK(err < prev / 1.7);
    prev = err;
    eta_mid.push_back(p.eta.values[static_cast<std::size_t>((np - 1) / 2)]);
  }
  // eta at refinement differs by far less than a full turn
  CHECK(std::abs(eta_mid[2] - eta_mid[1]) < 0.01);
  CHECK(std::abs(eta_mid[1] - eta_mid[0]) < 0.01);
}

TEST_CASE("l_inv errors: vanishing modulus and branch jumps") {
  const GridSpec g(257);
  Path re = Path::zeros(g), im = Path::zeros(g);
  for (auto& v : re.values) v = 1.0;
  re[100] = 0.0;
  CHECK_THROWS_AS(l_inv(ComplexPath(re, im)), VanishingPath);

  // 2 windings on a 5-node grid: each increment is a half turn (= pi)
  const GridSpec coarse(5);
  CHECK_THROWS_AS(l_inv(circle_path(coarse, 2.0)), BranchJump);
}

TEST_CASE("sample_wc: independent components, no grid-vanishing paths") {
  const GridSpec g(65);
  const Dispersion sigma(1.0);
  const int n = 20000;
  double cxy = 0.0, mx = 0.0, my = 0.0, vx = 0.0, vy = 0.0;
  double min_mod = 1e300;
  for (int k = 0; k < n; ++k) {
    DrawCtx rng(RngStream{33, 0}, static_cast<std::uint64_t>(k));
    const auto s = sample_wc(sigma, g, 0.8, rng);
    const double x = s.z.re[40] - s.z.re[0];
    const double y = s.z.im[40] - s.z.im[0];
    mx += x; my += y; vx += x * x; vy += y * y; cxy += x * y;
    min_mod = std::min(min_mod, s.z.min_modulus());
  }
  mx /= n; my /= n;
  const double corr = (cxy / n - mx * my) /
                      std::sqrt((vx / n - mx * mx) * (vy / n - my * my));
  CHECK(std::abs(corr) < 4.0 / std::sqrt(static_cast<double>(n)));
  CHECK(min_mod > 0.0);  // exact grid zeros form a null set
}

TEST_CASE("sample_varsigma: alpha uniform, modulus law matches the 1D sampler") {
  const GridSpec g(129);
  const Dispersion sigma(1.0);
  const auto rp = mc::Proposal::log_normal(0.0, 0.4);
  const int n = 8000;

  std::vector<double> alphas;
  for (int k = 0; k < n; ++k) {
    DrawCtx rng(RngStream{34, 0}, static_cast<std::uint64_t>(k));
    const auto s = sample_varsigma(sigma, g, rp, VarsigmaWeight{}, rng);
    CHECK(s.weight >= 0.0);
  }
  // alpha marginal: uniform on [0,1), KS at the 1% level
  std::vector<double> a;
  for (int k = 0; k < n; ++k) {
    DrawCtx rng(RngStream{34, 0}, static_cast<std::uint64_t>(k));
    const double r = rp.sample(rng);
    const Diffeo phi = sample_mu(Dispersion(2.0 / r), g, rng);
    (void)phi;
    const Path eta = sample_w0(Dispersion(1.0 / r), g, rng);
    (void)eta;
    a.push_back(rng.uniform());
  }
  std::sort(a.begin(), a.end());
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    d = std::max(d, std::abs(a[i] - static_cast<double>(i) / n));
    d = std::max(d, std::abs(a[i] - static_cast<double>(i + 1) / n));
  }
  CHECK(d * std::sqrt(static_cast<double>(n)) < 1.628);

  // at fixed r, |z(t)| of the tuple sampler and the 1D radial
  // reconstruction are the same construction; compare midpoints
  const double r_fix = 1.3;
  std::vector<double> m2d, m1d;
  for (int k = 0; k < 4000; ++k) {
    DrawCtx rng(RngStream{35, 0}, static_cast<std::uint64_t>(k));
    const Diffeo phi = sample_mu(Dispersion(2.0 * 1.0 / r_fix), g, rng);
    const Path eta = sample_w0(Dispersion(1.0 / r_fix), g, rng);
    const ComplexPath z = l_map(PolarTuple2D{r_fix, phi, rng.uniform(), eta});
    m2d.push_back(z.modulus(64));

    DrawCtx rng2(RngStream{36, 0}, static_cast<std::uint64_t>(k));
    const Diffeo phi2 = sample_mu(Dispersion(2.0 * 1.0 / r_fix), g, rng2);
    m1d.push_back(reconstruct(r_fix, phi2)[64]);
  }
  // two-sample KS
  std::sort(m2d.begin(), m2d.end());
  std::sort(m1d.begin(), m1d.end());
  double ks = 0.0;
  std::size_t i = 0, j = 0;
  while (i < m2d.size() && j < m1d.size()) {
    if (m2d[i] <= m1d[j]) ++i; else ++j;
    ks = std::max(ks, std::abs(static_cast<double>(i) / m2d.size() -
                               static_cast<double>(j) / m1d.size()));
  }
  const double ne = std::sqrt(m2d.size() * m1d.size() /
                              static_cast<double>(m2d.size() + m1d.size()));
  CHECK(ks * ne < 1.628);
}
