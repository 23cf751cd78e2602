// Copyright 2026 The dirac1d Authors
// SPDX-License-Identifier: Apache-2.0

#include <dirac1d/spinor.hpp>

#include <dirac1d/errors.hpp>

#include <cmath>
#include <string>
#include <utility>

namespace dirac1d {

Spinor::Spinor(Grid grid, CVec upper, CVec lower, Real energy)
    : grid_(std::move(grid)), upper_(std::move(upper)), lower_(std::move(lower)), energy_(energy) {
  if (upper_.size() != grid_.size() || lower_.size() != grid_.size()) {
    throw DomainError("spinor components must have exactly one sample per grid node");
  }
}

Real l2_norm_squared(const CVec& f, Real h) {
  const Index n = f.size();
  Real sum = 0.5 * (std::norm(f[0]) + std::norm(f[n - 1]));
  for (Index i = 1; i < n - 1; ++i) sum += std::norm(f[i]);
  return sum * h;
}

Real norm_squared(const Spinor& spinor) {
  const Real h = spinor.grid().spacing();
  return l2_norm_squared(spinor.upper(), h) + l2_norm_squared(spinor.lower(), h);
}

Spinor normalize(const Spinor& spinor) {
  const Real n2 = norm_squared(spinor);
  if (!(n2 > 1e-280)) {
    throw ZeroSpinorError("cannot normalize a (numerically) zero spinor, |psi|^2 = " +
                          std::to_string(n2));
  }
  const Real scale = 1.0 / std::sqrt(n2);
  Spinor out(spinor.grid(), spinor.upper() * scale, spinor.lower() * scale, spinor.energy());
  out.normalized_ = true;
  return out;
}

Spinor restrict_to_window(const Spinor& spinor, Real lo, Real hi) {
  const Grid& g = spinor.grid();
  const Real h = g.spacing();
  Index first = 0;
  while (first < g.size() && g.node(first) < lo - 0.5 * h) ++first;
  Index last = g.size() - 1;
  while (last > first && g.node(last) > hi + 0.5 * h) --last;
  const Index n = last - first + 1;
  if (n < 4) throw DomainError("window leaves fewer than 4 grid nodes");
  Grid sub(g.node(first), g.node(last), n);
  Spinor out(sub, spinor.upper().segment(first, n), spinor.lower().segment(first, n),
             spinor.energy());
  return out;
}

}  // namespace dirac1d
