// Copyright (c) 2026 The wpolar authors.
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "wpolar/brownian.hpp"
#include "wpolar/csv.hpp"
#include "wpolar/errors.hpp"
#include "wpolar/runner.hpp"

using namespace wpolar;

namespace {

std::string tmp_file(const std::string& name) {
  return (std::filesystem::temp_directory_path() / name).string();
}

}  // namespace

TEST_CASE("path CSV round trip is bit exact") {
  const GridSpec g(129);
  DrawCtx rng(RngStream{41, 0}, 0);
  const Path p = sample_w0(Dispersion(1.0), g, rng);
  const std::string f = tmp_file("wpolar_path.csv");
  csv::write_path(f, p);
  const Path q = csv::read_path(f);
  REQUIRE(q.size() == p.size());
  for (std::size_t i = 0; i < p.size(); ++i) CHECK(q[i] == p[i]);
}

TEST_CASE("diffeo CSV round trip revalidates the chart") {
  const GridSpec g(65);
  DrawCtx rng(RngStream{42, 0}, 0);
  const Diffeo d = sample_mu(Dispersion(1.0), g, rng);
  const std::string f = tmp_file("wpolar_diffeo.csv");
  csv::write_diffeo(f, d);
  const Diffeo e = csv::read_diffeo(f);
  for (std::size_t i = 0; i < g.size(); ++i) {
    CHECK(e.phi()[i] == d.phi()[i]);
    CHECK(e.xi().values[i] == d.xi().values[i]);
  }
}

TEST_CASE("complex CSV round trip") {
  const GridSpec g(65);
  DrawCtx rng(RngStream{43, 0}, 0);
  const auto s = planar::sample_wc(Dispersion(1.0), g, 0.7, rng);
  const std::string f = tmp_file("wpolar_complex.csv");
  csv::write_complex(f, s.z);
  const auto z = csv::read_complex(f);
  for (std::size_t i = 0; i < g.size(); ++i) {
    CHECK(z.re[i] == s.z.re[i]);
    CHECK(z.im[i] == s.z.im[i]);
  }
}

TEST_CASE("CSV validation: header, uniformity, chart consistency") {
  const std::string f = tmp_file("wpolar_bad.csv");
  {
    std::ofstream out(f);
    out << "time,value\n0,0\n0.5,1\n1,2\n";
  }
  CHECK_THROWS_AS(csv::read_path(f), CsvError);
  {
    std::ofstream out(f);
    out << "t,value\n0,0\n0.4999,1\n1,2\n";  // not uniform to 1e-12
  }
  CHECK_THROWS_AS(csv::read_path(f), CsvError);
  {
    std::ofstream out(f);
    out << "t,phi,xi\n0,0,0\n0.5,0.9,0\n1,1,0\n";  // phi inconsistent with xi
  }
  CHECK_THROWS_AS(csv::read_diffeo(f), CsvError);
  CHECK_THROWS_AS(csv::read_path(tmp_file("wpolar_missing.csv")), CsvError);
}

TEST_CASE("report JSON: determinism modulo wall time, pass logic") {
  VerifyOptions opt;
  opt.seed = 7;
  opt.n = 2000;
  opt.n_points = 65;
  opt.workers = 2;

  Report a, b;
  a.seed = b.seed = opt.seed;
  a.checks = run_check("lemma1", opt);
  b.checks = run_check("lemma1", opt);
  CHECK(a.to_json(false) == b.to_json(false));
  CHECK(a.checks.size() == 1);
  CHECK(a.checks[0].check_id == "lemma1");

  // different seed changes the bytes
  VerifyOptions opt2 = opt;
  opt2.seed = 8;
  Report c;
  c.seed = opt2.seed;
  c.checks = run_check("lemma1", opt2);
  CHECK(a.to_json(false) != c.to_json(false));

  CheckResult bad;
  bad.check_id = "x";
  bad.pass = false;
  Report d = a;
  CHECK(d.all_pass());
  d.checks.push_back(bad);
  CHECK_FALSE(d.all_pass());

  const std::string f = tmp_file("wpolar_report.json");
  a.write(f);
  std::ifstream in(f);
  std::string first;
  std::getline(in, first);
  CHECK(first == "{");
}
