// Copyright (c) 2026 The wpolar authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef WPOLAR_GRID_HPP
#define WPOLAR_GRID_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace wpolar {

/// Uniform grid t_i = i/(n_points-1) on [0,1], endpoints included.
struct GridSpec {
  int n_points = 513;

  GridSpec() = default;
  explicit GridSpec(int n) : n_points(n) {
    if (n_points < 3) throw std::invalid_argument("GridSpec: n_points must be >= 3");
  }

  double dt() const { return 1.0 / (n_points - 1); }
  double t(int i) const { return static_cast<double>(i) / (n_points - 1); }
  std::size_t size() const { return static_cast<std::size_t>(n_points); }

  std::vector<double> nodes() const {
    std::vector<double> ts(size());
    for (int i = 0; i < n_points; ++i) ts[static_cast<std::size_t>(i)] = t(i);
    return ts;
  }

  friend bool operator==(const GridSpec& a, const GridSpec& b) {
    return a.n_points == b.n_points;
  }
};

/// Wiener dispersion sigma > 0: increments over dt have variance sigma^2 dt.
struct Dispersion {
  double sigma = 1.0;

  Dispersion() = default;
  explicit Dispersion(double s) : sigma(s) {
    if (!(sigma > 0.0)) throw std::invalid_argument("Dispersion: sigma must be > 0");
  }
};

/// A continuous function on [0,1] sampled on a uniform grid.
struct Path {
  GridSpec grid;
  std::vector<double> values;

  Path() = default;
  Path(GridSpec g, std::vector<double> v) : grid(g), values(std::move(v)) {
    if (values.size() != grid.size())
      throw std::invalid_argument("Path: values length must equal n_points");
  }

  static Path zeros(GridSpec g) { return Path(g, std::vector<double>(g.size(), 0.0)); }

  double operator[](std::size_t i) const { return values[i]; }
  double& operator[](std::size_t i) { return values[i]; }
  double front() const { return values.front(); }
  double back() const { return values.back(); }
  std::size_t size() const { return values.size(); }

  double min() const { return *std::min_element(values.begin(), values.end()); }
  double max() const { return *std::max_element(values.begin(), values.end()); }
  double sup_norm() const {
    double m = 0.0;
    for (double v : values) m = std::max(m, std::abs(v));
    return m;
  }
  bool all_positive() const { return min() > 0.0; }
};

/// Composite trapezoid value of the integral of p over [0,1].
inline double integrate(const Path& p) {
  const double h = p.grid.dt();
  double s = 0.5 * (p.values.front() + p.values.back());
  for (std::size_t i = 1; i + 1 < p.values.size(); ++i) s += p.values[i];
  return s * h;
}

/// Cumulative trapezoid antiderivative on the grid; out[0] = 0.
inline std::vector<double> cumulative_trapezoid(const Path& p) {
  const double h = p.grid.dt();
  std::vector<double> out(p.size());
  out[0] = 0.0;
  for (std::size_t i = 1; i < p.size(); ++i)
    out[i] = out[i - 1] + 0.5 * h * (p.values[i - 1] + p.values[i]);
  return out;
}

}  // namespace wpolar

#endif  // WPOLAR_GRID_HPP
