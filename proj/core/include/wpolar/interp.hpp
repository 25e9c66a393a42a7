// Copyright (c) 2026 The wpolar authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef WPOLAR_INTERP_HPP
#define WPOLAR_INTERP_HPP

#include <cstddef>
#include <vector>

namespace wpolar {

/// Shape-preserving piecewise-cubic Hermite interpolant (Fritsch-Carlson
/// slopes). Monotone data produce a monotone interpolant, which is what the
/// diffeomorphism inversion code relies on.
class PchipInterpolator {
 public:
  PchipInterpolator() = default;
  /// x must be strictly increasing, x.size() == y.size() >= 2.
  PchipInterpolator(std::vector<double> x, std::vector<double> y);

  /// Evaluate at a single point; queries are clamped to [x0, xn].
  double operator()(double xq) const;

  /// Evaluate at a nondecreasing sequence of query points in O(n + m)
  /// using a walking segment index.
  std::vector<double> eval_sorted(const std::vector<double>& xq) const;

  std::size_t size() const { return x_.size(); }

 private:
  double eval_segment(std::size_t k, double xq) const;
  std::size_t find_segment(double xq) const;

  std::vector<double> x_, y_, d_;
};

/// Slopes for segment-local Hermite evaluation, exposed for reuse.
std::vector<double> pchip_slopes(const std::vector<double>& x,
                                 const std::vector<double>& y);

}  // namespace wpolar

#endif  // WPOLAR_INTERP_HPP
