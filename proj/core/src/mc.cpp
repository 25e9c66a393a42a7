// Copyright (c) 2026 The wpolar authors.
// SPDX-License-Identifier: Apache-2.0

#include "wpolar/mc.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <mutex>
#include <thread>

#include "wpolar/brownian.hpp"
#include "wpolar/errors.hpp"
#include "wpolar/oracles.hpp"
#include "wpolar/polar.hpp"
#include "wpolar/schwarzian.hpp"

namespace wpolar::mc {

namespace {

constexpr double kSqrt2Pi = 2.5066282746310002;

RngStream substream(RngStream s, std::uint32_t offset) {
  return RngStream{s.seed, s.stream_id + offset};
}

void run_chunks(std::size_t n, int workers,
                const std::function<void(std::size_t, std::size_t)>& body) {
  const int nw = std::max(1, workers);
  if (nw == 1 || n < 2048) {
    body(0, n);
    return;
  }
  std::vector<std::thread> pool;
  std::exception_ptr first_error;
  std::mutex error_mutex;
  const std::size_t chunk = (n + nw - 1) / nw;
  for (int w = 0; w < nw; ++w) {
    const std::size_t lo = std::min(n, w * chunk);
    const std::size_t hi = std::min(n, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([&, lo, hi] {
      try {
        body(lo, hi);
      } catch (...) {
        const std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

// trapezoid of exp(xi) over [0,1]; phi'(0) of the chart image is 1/this.
double exp_trapezoid(const Path& xi) {
  const double h = xi.grid.dt();
  double s = 0.5 * (std::exp(xi.values.front()) + std::exp(xi.values.back()));
  for (std::size_t i = 1; i + 1 < xi.size(); ++i) s += std::exp(xi.values[i]);
  return s * h;
}

}  // namespace

double Proposal::sample(DrawCtx& rng) const {
  switch (kind) {
    case Kind::HalfNormal:
      return p1 * std::abs(rng.normal());
    case Kind::LogNormal:
      return std::exp(p1 + p2 * rng.normal());
  }
  return 0.0;
}

double Proposal::pdf(double x) const {
  if (x <= 0.0) return 0.0;
  switch (kind) {
    case Kind::HalfNormal:
      return std::sqrt(2.0 / std::numbers::pi) / p1 *
             std::exp(-x * x / (2.0 * p1 * p1));
    case Kind::LogNormal: {
      const double z = (std::log(x) - p1) / p2;
      return std::exp(-0.5 * z * z) / (x * p2 * kSqrt2Pi);
    }
  }
  return 0.0;
}

std::vector<double> mc_table(std::size_t n, std::size_t width, int workers,
                             const std::function<void(std::size_t, double*)>& fill) {
  std::vector<double> v(n * width);
  run_chunks(n, workers, [&](std::size_t lo, std::size_t hi) {
    for (std::size_t k = lo; k < hi; ++k) fill(k, v.data() + k * width);
  });
  return v;
}

double pairwise_sum(const double* v, std::size_t n, std::size_t stride) {
  if (n <= 8) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += v[i * stride];
    return s;
  }
  const std::size_t half = n / 2;
  return pairwise_sum(v, half, stride) + pairwise_sum(v + half * stride, n - half, stride);
}

MCEstimate summarize(const std::vector<double>& values, std::size_t width,
                     std::size_t column, std::optional<double> target) {
  const std::size_t n = values.size() / width;
  std::vector<double> sq(n), ab(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double v = values[k * width + column];
    sq[k] = v * v;
    ab[k] = std::abs(v);
  }
  const double sum = pairwise_sum(values.data() + column, n, width);
  const double sum2 = pairwise_sum(sq.data(), n);
  const double sum_abs = pairwise_sum(ab.data(), n);

  MCEstimate est;
  est.n = n;
  est.mean = sum / static_cast<double>(n);
  const double var =
      std::max(0.0, (sum2 - sum * sum / static_cast<double>(n)) /
                        (static_cast<double>(n) - 1.0));
  est.std_err = std::sqrt(var / static_cast<double>(n));
  est.ess = sum2 > 0.0 ? sum_abs * sum_abs / sum2 : 0.0;
  est.target = target;
  if (target && est.std_err > 0.0) est.z_score = (est.mean - *target) / est.std_err;
  return est;
}

double paired_z(const std::vector<double>& values, std::size_t width,
                std::size_t col_a, std::size_t col_b) {
  const std::size_t n = values.size() / width;
  std::vector<double> d(n);
  for (std::size_t k = 0; k < n; ++k)
    d[k] = values[k * width + col_a] - values[k * width + col_b];
  const MCEstimate e = summarize(d, 1, 0, 0.0);
  return e.z_score.value_or(0.0);
}

Proposal default_q0_proposal(const EstimatorConfig& cfg) {
  // Matched to the damping exp(-a^2 q0^2/sigma^2) combined with the
  // endpoint-conditioning Gaussian at ratio theta, so the importance weight
  // times those factors is constant.
  const double c = 2.0 * cfg.a * cfg.a + (cfg.theta - 1.0) * (cfg.theta - 1.0);
  return Proposal::half_normal(cfg.sigma.sigma / std::sqrt(c));
}

Proposal default_rho_proposal(const EstimatorConfig& cfg) {
  // Centered at the saddle of exp(-kappa sigma^2/rho^2 - a^2 rho^2/sigma^2).
  const double kap = std::max(cfg.kappa, 0.02);
  const double mode = std::pow(kap, 0.25) * cfg.sigma.sigma / std::sqrt(cfg.a);
  return Proposal::log_normal(std::log(mode), 0.8);
}

MCEstimate estimate_lemma1(const EstimatorConfig& cfg) {
  const Proposal prop = cfg.q0_proposal.value_or(default_q0_proposal(cfg));
  if (prop.pdf(1.0) <= 0.0 || prop.pdf(0.01) <= 0.0)
    throw ProposalMismatch("q0 proposal must cover (0, inf)");
  const double sigma = cfg.sigma.sigma;
  const double s2 = sigma * sigma;
  const double trans = 1.0 / (kSqrt2Pi * sigma);
  const RngStream stream = substream(cfg.stream, 0);

  const auto values = mc_table(
      cfg.n_samples, 1, cfg.workers, [&](std::size_t k, double* out) {
        DrawCtx rng(stream, k);
        const double q0 = prop.sample(rng);
        const double w = std::exp(-cfg.a * cfg.a * q0 * q0 / s2) / prop.pdf(q0);
        double surv = 0.0;
        switch (cfg.positivity) {
          case PositivityMode::SurvivalWeight:
            surv = bridge_survival_weight(q0, q0, sigma);
            break;
          case PositivityMode::NodeIndicator: {
            const Path b = sample_bridge(cfg.sigma, cfg.grid, q0, q0, rng);
            surv = survives_positive_nodes(b) ? 1.0 : 0.0;
            break;
          }
          case PositivityMode::ExactBernoulli: {
            const Path b = sample_bridge(cfg.sigma, cfg.grid, q0, q0, rng);
            surv = survives_positive_exact(b, cfg.sigma, rng) ? 1.0 : 0.0;
            break;
          }
        }
        out[0] = w * trans * surv;
      });
  return summarize(values, 1, 0, oracles::lemma1_rhs(cfg.a));
}

MCEstimate estimate_j(const EstimatorConfig& cfg, double rho) {
  const double sigma = cfg.sigma.sigma;
  const double alpha = cfg.beta * cfg.beta / (2.0 * (cfg.beta + 1.0));
  const Dispersion chart_disp(2.0 * sigma / rho);
  const double pref = rho / (kSqrt2Pi * sigma);
  const double damp = alpha * rho * rho / (sigma * sigma);
  const RngStream stream = substream(cfg.stream, 0);

  const auto values = mc_table(
      cfg.n_samples, 1, cfg.workers, [&](std::size_t k, double* out) {
        DrawCtx rng(stream, k);
        const Path xi = sample_bridge(chart_disp, cfg.grid, 0.0, 0.0, rng);
        const double dphi0 = 1.0 / exp_trapezoid(xi);
        out[0] = pref * std::exp(-damp * dphi0);
      });
  return summarize(values, 1, 0, oracles::j_closed(cfg.beta, rho, sigma));
}

MCEstimate estimate_lemma4(const EstimatorConfig& cfg, double rho) {
  const double sigma = cfg.sigma.sigma;
  const double a2 = cfg.beta * cfg.beta / (2.0 * (cfg.beta + 1.0));
  const Dispersion chart_disp(2.0 * sigma / rho);
  const double pref = 1.0 / (kSqrt2Pi * sigma);
  const double damp = a2 * rho * rho / (sigma * sigma);
  const RngStream stream = substream(cfg.stream, 0);

  const auto values = mc_table(
      cfg.n_samples, 1, cfg.workers, [&](std::size_t k, double* out) {
        DrawCtx rng(stream, k);
        const Path xi = sample_bridge(chart_disp, cfg.grid, 0.0, 0.0, rng);
        const double dphi0 = 1.0 / exp_trapezoid(xi);
        out[0] = pref * dphi0 * std::exp(-damp * dphi0);
      });
  return summarize(values, 1, 0, oracles::lemma4_rhs(cfg.beta, rho, sigma));
}

PairedResult verify_theorem3(const EstimatorConfig& cfg, const DiffeoFunctional& F) {
  const MobiusDiffeo g_inv(MobiusDiffeo::inverse_beta(cfg.beta));
  const RngStream stream = substream(cfg.stream, 0);

  const auto values = mc_table(
      cfg.n_samples, 2, cfg.workers, [&](std::size_t k, double* out) {
        DrawCtx rng(stream, k);
        const Diffeo phi = sample_mu(cfg.sigma, cfg.grid, rng);
        const Diffeo pulled = compose(g_inv, phi);
        out[0] = F.fn(pulled);
        out[1] = p_mobius(cfg.beta, phi, cfg.sigma) * F.fn(phi);
      });

  PairedResult res;
  res.pullback = summarize(values, 2, 0, std::nullopt);
  res.weighted = summarize(values, 2, 1, std::nullopt);
  res.z_diff = paired_z(values, 2, 0, 1);
  return res;
}

MCEstimate theorem3_mass(const EstimatorConfig& cfg) {
  const RngStream stream = substream(cfg.stream, 1);
  const auto values = mc_table(
      cfg.n_samples, 1, cfg.workers, [&](std::size_t k, double* out) {
        DrawCtx rng(stream, k);
        const Diffeo phi = sample_mu(cfg.sigma, cfg.grid, rng);
        out[0] = p_mobius(cfg.beta, phi, cfg.sigma);
      });
  return summarize(values, 1, 0, 1.0);
}

Theorem1Result verify_theorem1(const EstimatorConfig& cfg,
                               const std::vector<PathFunctional>& fs,
                               const std::vector<double>& kappas) {
  const double sigma = cfg.sigma.sigma;
  const double s2 = sigma * sigma;
  const std::size_t nf = fs.size();
  const std::size_t nk = kappas.size();
  const Proposal qp = cfg.q0_proposal.value_or(default_q0_proposal(cfg));
  const Proposal rp = cfg.rho_proposal.value_or(default_rho_proposal(cfg));

  // Left side: damped positive Wiener paths with Lebesgue-start importance.
  const RngStream lhs_stream = substream(cfg.stream, 0);
  const auto lhs_values = mc_table(
      cfg.n_samples, nf, cfg.workers, [&](std::size_t k, double* out) {
        DrawCtx rng(lhs_stream, k);
        const double q0 = qp.sample(rng);
        const double w = std::exp(-cfg.a * cfg.a * q0 * q0 / s2) / qp.pdf(q0);
        Path x = sample_w0(cfg.sigma, cfg.grid, rng);
        for (double& v : x.values) v += q0;
        bool alive;
        if (cfg.positivity == PositivityMode::NodeIndicator)
          alive = survives_positive_nodes(x);
        else
          alive = survives_positive_exact(x, cfg.sigma, rng);
        for (std::size_t f = 0; f < nf; ++f)
          out[f] = alive ? w * fs[f].fn(x) : 0.0;
      });

  // Right side: radial coordinate plus chart sample; the kappa candidates
  // reuse the same draws since they only scale the weight.
  const RngStream rhs_stream = substream(cfg.stream, 1);
  const std::size_t width = nk * nf + nk;  // values then weights per kappa
  const auto rhs_values = mc_table(
      cfg.n_samples, width, cfg.workers, [&](std::size_t k, double* out) {
        DrawCtx rng(rhs_stream, k);
        const double rho = rp.sample(rng);
        const Dispersion chart_disp(2.0 * sigma / rho);
        const Path xi = sample_w0(chart_disp, cfg.grid, rng);
        const Diffeo phi = a_inv(xi);
        if (!is_nondegenerate(phi)) {
          // chart increments underflowed; the density weight is zero too
          for (std::size_t c = 0; c < width; ++c) out[c] = 0.0;
          return;
        }
        const Path x = reconstruct(rho, phi);
        const double dp0 = phi.phi_prime0();
        const double dp1 = phi.phi_prime1();
        const double base = std::pow(dp0 * dp1, 0.75) *
                            std::exp(-cfg.a * cfg.a * rho * rho * dp0 / s2) /
                            rp.pdf(rho);
        for (std::size_t j = 0; j < nk; ++j) {
          const double w = base * std::exp(-kappas[j] * s2 / (rho * rho));
          for (std::size_t f = 0; f < nf; ++f)
            out[j * nf + f] = w * fs[f].fn(x);
          out[nk * nf + j] = w;
        }
      });

  Theorem1Result res;
  res.kappas = kappas;
  for (const auto& f : fs) res.functional_names.push_back(f.name);
  for (std::size_t f = 0; f < nf; ++f)
    res.lhs.push_back(summarize(lhs_values, nf, f, std::nullopt));

  res.rhs.resize(nk);
  res.z.resize(nk);
  std::size_t n_pass = 0;
  for (std::size_t j = 0; j < nk; ++j) {
    const MCEstimate wsum = summarize(rhs_values, width, nk * nf + j, std::nullopt);
    if (wsum.ess < 0.01 * static_cast<double>(cfg.n_samples))
      throw DegenerateWeights("theorem1: effective sample size below 1% of n");
    bool all_ok = true;
    for (std::size_t f = 0; f < nf; ++f) {
      const MCEstimate r = summarize(rhs_values, width, j * nf + f, std::nullopt);
      const double se =
          std::sqrt(r.std_err * r.std_err + res.lhs[f].std_err * res.lhs[f].std_err);
      const double z = se > 0.0 ? (res.lhs[f].mean - r.mean) / se : 0.0;
      res.rhs[j].push_back(r);
      res.z[j].push_back(z);
      all_ok = all_ok && std::abs(z) <= 3.0;
    }
    if (all_ok) {
      ++n_pass;
      res.kappa_selected = kappas[j];
    }
  }
  if (n_pass != 1) res.kappa_selected.reset();
  return res;
}

TwoSided verify_theorem2(const EstimatorConfig& cfg) {
  const double sigma = cfg.sigma.sigma;
  const double s2 = sigma * sigma;
  const double theta = cfg.theta;
  const Proposal qp = cfg.q0_proposal.value_or(default_q0_proposal(cfg));

  TwoSided res;

  // Left: delta at x(1) = theta x(0) via the transition density, Brownian
  // bridge to the conditioned endpoint, positivity by exact sampling.
  {
    const RngStream stream = substream(cfg.stream, 0);
    const double dens_pref = 1.0 / (kSqrt2Pi * sigma);
    const auto values = mc_table(
        cfg.n_samples, 1, cfg.workers, [&](std::size_t k, double* out) {
          DrawCtx rng(stream, k);
          const double q0 = qp.sample(rng);
          const double w = std::exp(-cfg.a * cfg.a * q0 * q0 / s2) / qp.pdf(q0);
          const double dens =
              dens_pref *
              std::exp(-q0 * q0 * (theta - 1.0) * (theta - 1.0) / (2.0 * s2));
          double surv;
          if (cfg.positivity == PositivityMode::SurvivalWeight) {
            surv = bridge_survival_weight(q0, theta * q0, sigma);
          } else {
            const Path b = sample_bridge(cfg.sigma, cfg.grid, q0, theta * q0, rng);
            surv = survives_positive_exact(b, cfg.sigma, rng) ? 1.0 : 0.0;
          }
          out[0] = w * dens * surv;
        });
    res.lhs = summarize(values, 1, 0, oracles::theorem2_lhs_closed(theta, cfg.a));
  }

  // Right: chart delta at xi(1) = 2 ln(theta), Simpson quadrature over rho
  // of bridge-conditioned estimates with the radial factor exp(-s^2/8r^2).
  {
    const double ltheta = std::log(theta);
    const std::size_t m = 97;  // odd count for composite Simpson
    const double r_lo = 0.04 * sigma;
    const double r_hi =
        sigma * std::min(12.0, std::max(5.0, 7.0 / std::max(cfg.a, std::abs(ltheta))));
    const double h = (r_hi - r_lo) / static_cast<double>(m - 1);
    const std::size_t n_node = std::max<std::size_t>(cfg.n_samples / m, 500);

    double total = 0.0;
    double var = 0.0;
    for (std::size_t j = 0; j < m; ++j) {
      const double rho = r_lo + h * static_cast<double>(j);
      const double simpson_w =
          (j == 0 || j == m - 1) ? h / 3.0 : (j % 2 == 1 ? 4.0 * h / 3.0 : 2.0 * h / 3.0);
      const double pref = (1.0 / (kSqrt2Pi * sigma)) * std::sqrt(theta) *
                          std::exp(-rho * rho * ltheta * ltheta / (2.0 * s2)) *
                          std::exp(-s2 / (8.0 * rho * rho));
      const Dispersion chart_disp(2.0 * sigma / rho);
      const double damp = cfg.a * cfg.a * rho * rho / s2;
      const RngStream stream = substream(cfg.stream, 16 + static_cast<std::uint32_t>(j));
      const auto values = mc_table(
          n_node, 1, cfg.workers, [&](std::size_t k, double* out) {
            DrawCtx rng(stream, k);
            const Path xi =
                sample_bridge(chart_disp, cfg.grid, 0.0, 2.0 * ltheta, rng);
            const double dphi0 = 1.0 / exp_trapezoid(xi);
            out[0] = dphi0 * std::exp(-damp * dphi0);
          });
      const MCEstimate inner = summarize(values, 1, 0, std::nullopt);
      total += simpson_w * pref * inner.mean;
      var += simpson_w * pref * inner.std_err * simpson_w * pref * inner.std_err;
    }
    res.rhs.mean = total;
    res.rhs.std_err = std::sqrt(var);
    res.rhs.n = n_node * m;
    res.rhs.target = oracles::theorem2_lhs_closed(theta, cfg.a);
    if (res.rhs.std_err > 0.0)
      res.rhs.z_score = (res.rhs.mean - *res.rhs.target) / res.rhs.std_err;
  }

  const double se = std::sqrt(res.lhs.std_err * res.lhs.std_err +
                              res.rhs.std_err * res.rhs.std_err);
  res.z = se > 0.0 ? (res.lhs.mean - res.rhs.mean) / se : 0.0;
  return res;
}

}  // namespace wpolar::mc
