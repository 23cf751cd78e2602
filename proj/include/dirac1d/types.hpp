// Copyright 2026 The dirac1d Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>
#include <complex>

namespace dirac1d {

using Real = double;
using Complex = std::complex<Real>;
using Index = Eigen::Index;

// Dense sample arrays; Array (not Matrix) so elementwise expressions compose.
using Vec = Eigen::ArrayXd;
using CVec = Eigen::ArrayXcd;

/// Sign branch of the effective Schroedinger-like potential U_pm = Vp^2 pm Vp'.
/// plus corresponds to the upper spinor component, minus to the lower one.
enum class Branch { plus, minus };

inline constexpr Real branch_sign(Branch b) { return b == Branch::plus ? 1.0 : -1.0; }

inline constexpr const char* branch_name(Branch b) { return b == Branch::plus ? "plus" : "minus"; }

}  // namespace dirac1d
