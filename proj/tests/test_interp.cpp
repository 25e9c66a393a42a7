#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "wpolar/interp.hpp"

using wpolar::PchipInterpolator;

TEST_CASE("pchip reproduces nodes and preserves monotonicity") {
  std::vector<double> x, y;
  for (int i = 0; i <= 20; ++i) {
    const double t = i / 20.0;
    x.push_back(t);
    y.push_back(t * t * t + 0.1 * t);  // strictly increasing
  }
  PchipInterpolator s(x, y);
  for (std::size_t i = 0; i < x.size(); ++i)
    CHECK(s(x[i]) == doctest::Approx(y[i]).epsilon(1e-14));

  double prev = s(0.0);
  for (int i = 1; i <= 2000; ++i) {
    const double v = s(i / 2000.0);
    CHECK(v >= prev - 1e-14);
    prev = v;
  }
}

TEST_CASE("pchip converges at second order on smooth data") {
  double prev_err = -1.0;
  for (int n : {33, 65, 129, 257}) {
    std::vector<double> x(static_cast<std::size_t>(n)), y(x.size());
    for (int i = 0; i < n; ++i) {
      x[static_cast<std::size_t>(i)] = static_cast<double>(i) / (n - 1);
      y[static_cast<std::size_t>(i)] =
          std::sin(2.0 * std::numbers::pi * x[static_cast<std::size_t>(i)]);
    }
    PchipInterpolator s(x, y);
    double err = 0.0;
    for (int j = 0; j <= 5000; ++j) {
      const double t = j / 5000.0;
      err = std::max(err, std::abs(s(t) - std::sin(2.0 * std::numbers::pi * t)));
    }
    if (prev_err > 0.0) CHECK(err < prev_err / 3.0);
    prev_err = err;
  }
}

TEST_CASE("eval_sorted matches pointwise evaluation") {
  std::vector<double> x, y;
  for (int i = 0; i <= 50; ++i) {
    x.push_back(i / 50.0);
    y.push_back(std::exp(x.back()));
  }
  PchipInterpolator s(x, y);
  std::vector<double> q;
  for (int i = 0; i <= 333; ++i) q.push_back(i / 333.0);
  const auto batch = s.eval_sorted(q);
  for (std::size_t i = 0; i < q.size(); ++i) CHECK(batch[i] == s(q[i]));
}

TEST_CASE("clamping outside the data range") {
  PchipInterpolator s({0.0, 0.5, 1.0}, {1.0, 2.0, 4.0});
  CHECK(s(-1.0) == 1.0);
  CHECK(s(2.0) == 4.0);
}
