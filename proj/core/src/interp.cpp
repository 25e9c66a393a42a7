// Copyright (c) 2026 The wpolar authors.
// SPDX-License-Identifier: Apache-2.0

#include "wpolar/interp.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace wpolar {

std::vector<double> pchip_slopes(const std::vector<double>& x,
                                 const std::vector<double>& y) {
  const std::size_t n = x.size();
  std::vector<double> d(n);
  if (n == 2) {
    d[0] = d[1] = (y[1] - y[0]) / (x[1] - x[0]);
    return d;
  }
  // One-sided first-order endpoint slopes keep the interpolant monotone.
  d[0] = (y[1] - y[0]) / (x[1] - x[0]);
  d[n - 1] = (y[n - 1] - y[n - 2]) / (x[n - 1] - x[n - 2]);
  for (std::size_t k = 1; k + 1 < n; ++k) {
    const double hkm1 = x[k] - x[k - 1];
    const double hk = x[k + 1] - x[k];
    const double dkm1 = (y[k] - y[k - 1]) / hkm1;
    const double dk = (y[k + 1] - y[k]) / hk;
    if (dkm1 * dk <= 0.0) {
      d[k] = 0.0;
    } else {
      const double w1 = 2.0 * hk + hkm1;
      const double w2 = hk + 2.0 * hkm1;
      d[k] = (w1 + w2) / (w1 / dkm1 + w2 / dk);
    }
  }
  return d;
}

PchipInterpolator::PchipInterpolator(std::vector<double> x, std::vector<double> y)
    : x_(std::move(x)), y_(std::move(y)) {
  if (x_.size() != y_.size() || x_.size() < 2)
    throw std::invalid_argument("PchipInterpolator: need matching sizes >= 2");
  for (std::size_t i = 1; i < x_.size(); ++i)
    if (!(x_[i] > x_[i - 1]))
      throw std::invalid_argument("PchipInterpolator: x must be strictly increasing");
  d_ = pchip_slopes(x_, y_);
}

double PchipInterpolator::eval_segment(std::size_t k, double xq) const {
  const double h = x_[k + 1] - x_[k];
  const double t = (xq - x_[k]) / h;
  const double t2 = t * t;
  const double t3 = t2 * t;
  const double h00 = 2.0 * t3 - 3.0 * t2 + 1.0;
  const double h10 = t3 - 2.0 * t2 + t;
  const double h01 = -2.0 * t3 + 3.0 * t2;
  const double h11 = t3 - t2;
  return h00 * y_[k] + h * h10 * d_[k] + h01 * y_[k + 1] + h * h11 * d_[k + 1];
}

std::size_t PchipInterpolator::find_segment(double xq) const {
  const auto it = std::upper_bound(x_.begin(), x_.end(), xq);
  std::size_t k = static_cast<std::size_t>(it - x_.begin());
  if (k == 0) return 0;
  if (k >= x_.size()) return x_.size() - 2;
  return k - 1;
}

double PchipInterpolator::operator()(double xq) const {
  if (xq <= x_.front()) return y_.front();
  if (xq >= x_.back()) return y_.back();
  return eval_segment(find_segment(xq), xq);
}

std::vector<double> PchipInterpolator::eval_sorted(const std::vector<double>& xq) const {
  std::vector<double> out(xq.size());
  std::size_t k = 0;
  const std::size_t last = x_.size() - 2;
  for (std::size_t i = 0; i < xq.size(); ++i) {
    const double q = xq[i];
    if (q <= x_.front()) {
      out[i] = y_.front();
      continue;
    }
    if (q >= x_.back()) {
      out[i] = y_.back();
      continue;
    }
    while (k < last && x_[k + 1] < q) ++k;
    out[i] = eval_segment(k, q);
  }
  return out;
}

}  // namespace wpolar
