// Copyright 2026 The dirac1d Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <dirac1d/errors.hpp>
#include <dirac1d/types.hpp>

namespace dirac1d {

/// Uniform grid on [x_min, x_max] with 0 < x_min < x_max.
class Grid {
 public:
  Grid(Real x_min, Real x_max, Index n);

  Real x_min() const { return x_min_; }
  Real x_max() const { return x_max_; }
  Index size() const { return n_; }
  Real spacing() const { return h_; }
  Real node(Index i) const { return x_min_ + h_ * static_cast<Real>(i); }
  Vec nodes() const { return Vec::LinSpaced(n_, x_min_, x_max_); }

  /// Same span, spacing halved (node-aligned refinement).
  Grid refined() const { return Grid(x_min_, x_max_, 2 * n_ - 1); }

  bool operator==(const Grid&) const = default;

 private:
  Real x_min_;
  Real x_max_;
  Index n_;
  Real h_;
};

}  // namespace dirac1d
