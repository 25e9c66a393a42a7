// Copyright (c) 2026 The wpolar authors.
// SPDX-License-Identifier: Apache-2.0

#include "wpolar/csv.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

#include "wpolar/errors.hpp"

namespace wpolar::csv {

namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

struct Table {
  std::vector<std::vector<double>> cols;
  GridSpec grid{3};
};

Table read_table(const std::string& file, const std::string& header) {
  std::ifstream in(file);
  if (!in) throw CsvError("cannot open " + file);
  std::string line;
  if (!std::getline(in, line)) throw CsvError(file + ": empty file");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != header)
    throw CsvError(file + ": expected header '" + header + "', got '" + line + "'");

  const std::size_t ncol = 1 + std::count(header.begin(), header.end(), ',');
  std::vector<std::vector<double>> cols(ncol);
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::stringstream ss(line);
    std::string cell;
    for (std::size_t c = 0; c < ncol; ++c) {
      if (!std::getline(ss, cell, ',')) throw CsvError(file + ": short row");
      cols[c].push_back(std::stod(cell));
    }
  }
  const std::size_t n = cols[0].size();
  if (n < 3) throw CsvError(file + ": need at least 3 rows");

  Table t;
  t.grid = GridSpec(static_cast<int>(n));
  for (std::size_t i = 0; i < n; ++i) {
    const double expect = t.grid.t(static_cast<int>(i));
    if (std::abs(cols[0][i] - expect) > 1e-12)
      throw CsvError(file + ": grid is not uniform on [0,1] to 1e-12");
  }
  t.cols = std::move(cols);
  return t;
}

}  // namespace

void write_path(const std::string& file, const Path& p) {
  std::ofstream out(file);
  if (!out) throw CsvError("cannot write " + file);
  out << "t,value\n";
  for (std::size_t i = 0; i < p.size(); ++i)
    out << fmt(p.grid.t(static_cast<int>(i))) << ',' << fmt(p[i]) << '\n';
}

Path read_path(const std::string& file) {
  Table t = read_table(file, "t,value");
  return Path(t.grid, std::move(t.cols[1]));
}

void write_diffeo(const std::string& file, const Diffeo& d) {
  std::ofstream out(file);
  if (!out) throw CsvError("cannot write " + file);
  out << "t,phi,xi\n";
  for (std::size_t i = 0; i < d.grid().size(); ++i)
    out << fmt(d.grid().t(static_cast<int>(i))) << ',' << fmt(d.phi()[i]) << ','
        << fmt(d.xi().values[i]) << '\n';
}

Diffeo read_diffeo(const std::string& file) {
  Table t = read_table(file, "t,phi,xi");
  if (t.cols[2].front() != 0.0) throw CsvError(file + ": xi(0) must be 0");
  Diffeo d(Path(t.grid, std::move(t.cols[2])));
  // Revalidate the stored phi column against the chart reconstruction.
  for (std::size_t i = 0; i < d.grid().size(); ++i)
    if (std::abs(d.phi()[i] - t.cols[1][i]) > 1e-12)
      throw CsvError(file + ": phi column inconsistent with xi chart");
  return d;
}

void write_complex(const std::string& file, const planar::ComplexPath& z) {
  std::ofstream out(file);
  if (!out) throw CsvError("cannot write " + file);
  out << "t,re,im\n";
  for (std::size_t i = 0; i < z.size(); ++i)
    out << fmt(z.grid().t(static_cast<int>(i))) << ',' << fmt(z.re[i]) << ','
        << fmt(z.im[i]) << '\n';
}

planar::ComplexPath read_complex(const std::string& file) {
  Table t = read_table(file, "t,re,im");
  return planar::ComplexPath(Path(t.grid, std::move(t.cols[1])),
                             Path(t.grid, std::move(t.cols[2])));
}

}  // namespace wpolar::csv
