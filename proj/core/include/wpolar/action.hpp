// Copyright (c) 2026 The wpolar authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef WPOLAR_ACTION_HPP
#define WPOLAR_ACTION_HPP

#include "wpolar/diffeo.hpp"
#include "wpolar/grid.hpp"

namespace wpolar {

/// Group action of a diffeomorphism on a path:
///
///   (phi x)(t) = x(phi^{-1}(t)) / sqrt((phi^{-1})'(t)).
///
/// phi^{-1} is obtained by monotone interpolation; its derivative comes
/// from the exact relation (phi^{-1})'(t) = 1 / phi'(phi^{-1}(t)) with
/// phi' read off the chart. Positive paths map to positive paths, and the
/// radial functional is preserved up to interpolation error.
Path act(const Diffeo& phi, const Path& x);

}  // namespace wpolar

#endif  // WPOLAR_ACTION_HPP
