// Copyright 2026 The dirac1d Authors
// SPDX-License-Identifier: Apache-2.0

#include <dirac1d/grid.hpp>

#include <string>

namespace dirac1d {

Grid::Grid(Real x_min, Real x_max, Index n) : x_min_(x_min), x_max_(x_max), n_(n) {
  if (!(x_min > 0.0)) {
    throw DomainError("grid requires x_min > 0, got " + std::to_string(x_min));
  }
  if (!(x_max > x_min)) {
    throw DomainError("grid requires x_max > x_min");
  }
  if (n < 4) {
    throw DomainError("grid requires at least 4 nodes, got " + std::to_string(n));
  }
  h_ = (x_max_ - x_min_) / static_cast<Real>(n_ - 1);
}

}  // namespace dirac1d
