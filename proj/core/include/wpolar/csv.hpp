// Copyright (c) 2026 The wpolar authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef WPOLAR_CSV_HPP
#define WPOLAR_CSV_HPP

#include <string>

#include "wpolar/diffeo.hpp"
#include "wpolar/grid.hpp"
#include "wpolar/planar.hpp"

namespace wpolar::csv {

// Path CSV: header "t,value", one row per grid node. Readers validate grid
// uniformity to 1e-12. Diffeo CSV: "t,phi,xi"; the loader rebuilds the
// diffeomorphism from xi and revalidates the stored phi column against it.
// Complex path CSV: "t,re,im".

void write_path(const std::string& file, const Path& p);
Path read_path(const std::string& file);

void write_diffeo(const std::string& file, const Diffeo& d);
Diffeo read_diffeo(const std::string& file);

void write_complex(const std::string& file, const planar::ComplexPath& z);
planar::ComplexPath read_complex(const std::string& file);

}  // namespace wpolar::csv

#endif  // WPOLAR_CSV_HPP
