// Copyright (c) 2026 The wpolar authors.
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>
#include <numbers>

#include "wpolar/action.hpp"
#include "wpolar/errors.hpp"
#include "wpolar/polar.hpp"

using namespace wpolar;

namespace {

Path make_path(GridSpec g, double (*f)(double)) {
  Path x = Path::zeros(g);
  for (int i = 0; i < g.n_points; ++i) x[static_cast<std::size_t>(i)] = f(g.t(i));
  return x;
}

double one_plus_t(double t) { return 1.0 + t; }
double wavy(double t) { return 2.0 + std::sin(2.0 * std::numbers::pi * t) + 0.3 * t; }

}  // namespace

TEST_CASE("rho_of: constants, 1+t, and the non-positive error") {
  const GridSpec g(1001);
  Path c = Path::zeros(g);
  for (auto& v : c.values) v = 3.7;
  CHECK(rho_of(c) == doctest::Approx(3.7).epsilon(1e-12));

  const Path lin = make_path(g, one_plus_t);
  CHECK(rho_of(lin) == doctest::Approx(std::numbers::sqrt2).epsilon(1e-6));

  Path bad = c;
  bad[5] = 0.0;
  CHECK_THROWS_AS(rho_of(bad), NonPositivePath);
  CHECK_THROWS_AS(decompose(bad), NonPositivePath);
}

TEST_CASE("decompose: constants give the identity, 1+t gives t/(2-t)") {
  const GridSpec g(1025);
  Path c = Path::zeros(g);
  for (auto& v : c.values) v = 2.0;
  const PolarPair pc = decompose(c);
  CHECK(pc.rho == doctest::Approx(2.0).epsilon(1e-12));
  double iderr = 0.0;
  for (int i = 0; i < g.n_points; ++i)
    iderr = std::max(iderr,
                     std::abs(pc.phi.phi()[static_cast<std::size_t>(i)] - g.t(i)));
  CHECK(iderr < 1e-10);

  const PolarPair pl = decompose(make_path(g, one_plus_t));
  CHECK(pl.rho == doctest::Approx(std::numbers::sqrt2).epsilon(1e-6));
  // phi(t) = t/(2-t); phi(1/2) = 1/3
  CHECK(pl.phi.phi()[512] == doctest::Approx(1.0 / 3.0).epsilon(1e-5));
}

TEST_CASE("reconstruct: constants, the inverse of the 1+t example") {
  const GridSpec g(1025);
  const Path flat = reconstruct(PolarPair{1.7, Diffeo::identity(g)});
  for (std::size_t i = 0; i < flat.size(); ++i)
    CHECK(flat[i] == doctest::Approx(1.7).epsilon(1e-12));

  // phi(t) = t/(2-t) in the chart: xi(s) = 2 ln(2/(2-s))
  Path xi = Path::zeros(g);
  for (int i = 0; i < g.n_points; ++i)
    xi[static_cast<std::size_t>(i)] = 2.0 * std::log(2.0 / (2.0 - g.t(i)));
  xi[0] = 0.0;
  const Path x = reconstruct(PolarPair{std::numbers::sqrt2, a_inv(xi)});
  double err = 0.0;
  for (int i = 0; i < g.n_points; ++i)
    err = std::max(err, std::abs(x[static_cast<std::size_t>(i)] - (1.0 + g.t(i))));
  CHECK(err < 5e-5);
}

TEST_CASE("round trips B and B^{-1}") {
  const GridSpec g(513);
  const Path x = make_path(g, wavy);
  const PolarPair p = decompose(x);
  const Path back = reconstruct(p);
  double err = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i)
    err = std::max(err, std::abs(back[i] - x[i]));
  CHECK(err / x.max() < 2e-4);

  CHECK(rho_of(back) == doctest::Approx(p.rho).epsilon(1e-4));

  // B^{-1} o B on (rho, phi): reconstruct then decompose
  const PolarPair again = decompose(back);
  CHECK(again.rho == doctest::Approx(p.rho).epsilon(2e-5));
  double perr = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i)
    perr = std::max(perr, std::abs(again.phi.phi()[i] - p.phi.phi()[i]));
  CHECK(perr < 1e-4);
}

TEST_CASE("equivariance: act multiplies the diffeo part on the left") {
  const GridSpec g(1025);
  const Path x = make_path(g, wavy);
  const MobiusDiffeo gb(0.8);
  const Diffeo gd = mobius_as_diffeo(gb, g);
  const Path gx = act(gd, x);

  const PolarPair p0 = decompose(x);
  const PolarPair p1 = decompose(gx);
  CHECK(p1.rho == doctest::Approx(p0.rho).epsilon(2e-3));

  const Diffeo expected = compose(gb, p0.phi);
  double err = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i)
    err = std::max(err, std::abs(p1.phi.phi()[i] - expected.phi()[i]));
  CHECK(err < 2e-3);
}
