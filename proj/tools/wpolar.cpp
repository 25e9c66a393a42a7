// Copyright (c) 2026 The wpolar authors.
// SPDX-License-Identifier: Apache-2.0
//
// Command line front end: run verification suites, decompose/reconstruct
// paths, and emit CSV/JSON artifacts.
//
// Exit codes: 0 all checks pass, 1 verification failure, 2 usage error,
// 3 I/O error.

#include <CLI11.hpp>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <string>
#include <vector>

#include "wpolar/brownian.hpp"
#include "wpolar/csv.hpp"
#include "wpolar/errors.hpp"
#include "wpolar/planar.hpp"
#include "wpolar/polar.hpp"
#include "wpolar/runner.hpp"

namespace fs = std::filesystem;

namespace {

struct CliOptions {
  wpolar::VerifyOptions verify;
  std::vector<std::string> checks;
  std::string input;
  std::string output_dir = ".";
  std::string format = "csv";
  std::string kind = "w0";
  double rho = 1.0;
  double start = 0.0;
  double end = 0.0;
  int count = 1;
};

std::string join_path(const std::string& dir, const std::string& name) {
  return (fs::path(dir) / name).string();
}

int cmd_verify(const CliOptions& opt) {
  for (const auto& c : opt.checks) {
    const auto known = wpolar::known_checks();
    if (std::find(known.begin(), known.end(), c) == known.end()) {
      std::fprintf(stderr, "unknown check id: %s\n", c.c_str());
      return 2;
    }
  }
  const wpolar::Report rep = wpolar::run_verify(opt.checks, opt.verify);
  const std::string file = join_path(opt.output_dir, "verify_report.json");
  rep.write(file);
  for (const auto& c : rep.checks) {
    std::printf("%-38s %s", c.check_id.c_str(), c.pass ? "pass" : "FAIL");
    if (c.z_score) std::printf("  z=%+.2f", *c.z_score);
    std::printf("\n");
  }
  std::printf("report: %s\n", file.c_str());
  return rep.all_pass() ? 0 : 1;
}

int cmd_decompose(const CliOptions& opt) {
  const wpolar::Path x = wpolar::csv::read_path(opt.input);
  const wpolar::PolarPair p = wpolar::decompose(x);
  const std::string stem = fs::path(opt.input).stem().string();
  const std::string out = join_path(opt.output_dir, stem + "_diffeo.csv");
  wpolar::csv::write_diffeo(out, p.phi);
  std::printf("rho %.17g\n", p.rho);
  std::printf("diffeo: %s\n", out.c_str());
  return 0;
}

int cmd_reconstruct(const CliOptions& opt) {
  const wpolar::Diffeo d = wpolar::csv::read_diffeo(opt.input);
  const wpolar::Path x = wpolar::reconstruct(opt.rho, d);
  const std::string stem = fs::path(opt.input).stem().string();
  const std::string out = join_path(opt.output_dir, stem + "_path.csv");
  wpolar::csv::write_path(out, x);
  std::printf("path: %s\n", out.c_str());
  return 0;
}

void write_path_json(const std::string& file, const wpolar::Path& p) {
  nlohmann::ordered_json j;
  j["t"] = p.grid.nodes();
  j["value"] = p.values;
  std::ofstream out(file);
  if (!out) throw wpolar::CsvError("cannot write " + file);
  out << j.dump(2) << '\n';
}

int cmd_sample(const CliOptions& opt) {
  const wpolar::GridSpec grid(opt.verify.n_points);
  const wpolar::Dispersion sigma(opt.verify.sigma);
  const wpolar::RngStream stream{opt.verify.seed, 0};
  const bool json = opt.format == "json";
  const std::string ext = json ? ".json" : ".csv";
  auto emit_path = [&](const std::string& stem, const wpolar::Path& p) {
    const std::string file = join_path(opt.output_dir, stem + ext);
    if (json)
      write_path_json(file, p);
    else
      wpolar::csv::write_path(file, p);
  };
  for (int k = 0; k < opt.count; ++k) {
    const std::string tag = std::to_string(k);
    if (opt.kind == "w0") {
      emit_path("w0_" + tag, wpolar::sample_w0(sigma, grid, stream, k));
    } else if (opt.kind == "bridge") {
      emit_path("bridge_" + tag,
                wpolar::sample_bridge(sigma, grid, opt.start, opt.end, stream, k));
    } else if (opt.kind == "mu") {
      const auto d = wpolar::sample_mu(sigma, grid, stream, k);
      wpolar::csv::write_diffeo(join_path(opt.output_dir, "mu_" + tag + ".csv"), d);
    } else if (opt.kind == "wc") {
      wpolar::DrawCtx rng(stream, k);
      const auto s = wpolar::planar::sample_wc(sigma, grid, 0.7071067811865476, rng);
      wpolar::csv::write_complex(join_path(opt.output_dir, "wc_" + tag + ".csv"), s.z);
    } else {
      std::fprintf(stderr, "unknown sample kind: %s\n", opt.kind.c_str());
      return 2;
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"polar coordinates and verification suite for Wiener path measures"};
  app.require_subcommand(1);

  CliOptions opt;

  auto add_common = [&opt](CLI::App* sub) {
    sub->add_option("--seed", opt.verify.seed, "base RNG seed");
    sub->add_option("--n-points", opt.verify.n_points, "grid nodes (>= 3)");
    sub->add_option("--sigma", opt.verify.sigma, "Wiener dispersion");
    sub->add_option("-o,--out", opt.output_dir, "output directory")
        ->envname("WPOLAR_OUT");
  };

  CLI::App* verify = app.add_subcommand("verify", "run verification checks");
  add_common(verify);
  verify->add_option("--check", opt.checks,
                     "check ids (default: all): lemma1 j lemma4 theorem1 "
                     "theorem2 theorem3 theorem4 oracles roundtrips");
  verify->add_option("--n", opt.verify.n, "Monte Carlo samples per estimator");
  verify->add_option("--a", opt.verify.a, "damping coefficient a");
  verify->add_option("--beta", opt.verify.beta, "Moebius index beta");
  verify->add_option("--rho", opt.verify.rho, "radial coordinate for j/lemma4");
  verify->add_option("--theta", opt.verify.theta, "endpoint ratio theta");
  double kappa_flag = -1.0;
  verify->add_option("--kappa", kappa_flag,
                     "restrict the radial exponent sweep to one value");
  verify->add_option("--workers", opt.verify.workers,
                     "worker threads (results are identical for any value)");

  CLI::App* decompose = app.add_subcommand("decompose", "path CSV -> rho + diffeo CSV");
  add_common(decompose);
  decompose->add_option("--in", opt.input, "input path CSV")->required();

  CLI::App* reconstruct =
      app.add_subcommand("reconstruct", "diffeo CSV + rho -> path CSV");
  add_common(reconstruct);
  reconstruct->add_option("--in", opt.input, "input diffeo CSV")->required();
  reconstruct->add_option("--rho", opt.rho, "radial coordinate")->required();

  CLI::App* sample = app.add_subcommand("sample", "write sample paths/diffeos");
  add_common(sample);
  sample->add_option("--kind", opt.kind, "w0 | bridge | mu | wc");
  sample->add_option("--format", opt.format, "csv | json (paths only)");
  sample->add_option("--count", opt.count, "number of samples");
  sample->add_option("--start", opt.start, "bridge start value");
  sample->add_option("--end", opt.end, "bridge end value");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (kappa_flag >= 0.0) opt.verify.kappa = kappa_flag;

  try {
    std::error_code ec;
    fs::create_directories(opt.output_dir, ec);
    if (verify->parsed()) return cmd_verify(opt);
    if (decompose->parsed()) return cmd_decompose(opt);
    if (reconstruct->parsed()) return cmd_reconstruct(opt);
    if (sample->parsed()) return cmd_sample(opt);
  } catch (const wpolar::CsvError& e) {
    std::fprintf(stderr, "I/O error: %s\n", e.what());
    return 3;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 2;
}
