// Copyright 2026 The dirac1d Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <dirac1d/grid.hpp>
#include <dirac1d/types.hpp>

namespace dirac1d {

/// Two-component spinor sampled on a grid, with its energy E.
/// Convention: upper is the component coupled to V_Sigma, lower to V_Delta.
class Spinor {
 public:
  Spinor(Grid grid, CVec upper, CVec lower, Real energy);

  const Grid& grid() const { return grid_; }
  const CVec& upper() const { return upper_; }
  const CVec& lower() const { return lower_; }
  Real energy() const { return energy_; }
  bool is_normalized() const { return normalized_; }

  friend Spinor normalize(const Spinor& spinor);
  friend Spinor restrict_to_window(const Spinor& spinor, Real lo, Real hi);

 private:
  Grid grid_;
  CVec upper_;
  CVec lower_;
  Real energy_;
  bool normalized_ = false;
};

/// Trapezoidal quadrature of |f|^2 over the grid.
Real l2_norm_squared(const CVec& f, Real h);

/// integral of (|psi_+|^2 + |psi_-|^2) dx by trapezoid.
Real norm_squared(const Spinor& spinor);

/// Returns the unit-norm rescaling. Throws ZeroSpinorError on (numerically)
/// vanishing input.
Spinor normalize(const Spinor& spinor);

/// Restriction to the grid nodes inside [lo, hi]; spacing is preserved.
Spinor restrict_to_window(const Spinor& spinor, Real lo, Real hi);

}  // namespace dirac1d
