// Copyright 2026 The dirac1d Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <dirac1d/grid.hpp>
#include <dirac1d/potential.hpp>
#include <dirac1d/types.hpp>

#include <string>
#include <vector>

namespace dirac1d {

/// Left-end treatment of the discretized problem.
///  - wall: plain Dirichlet u(x_min) = 0; correct when x_min is a physical
///    boundary (particle in a box) or the potential is regular there.
///  - singular_origin: x_min is a numerical cutoff for the half line (0, inf);
///    the stencil absorbs the indicial behavior u ~ x^s of the inverse-square
///    term so the Friedrichs solution is resolved.
enum class LeftBoundary { wall, singular_origin };

/// One-dimensional Schroedinger-like eigenproblem
///   -u'' + U_branch(x) u = eps u,   eps = E^2 - m^2,
/// with U_pm = Vp^2 pm Vp' on [x_min, x_max].
struct SLProblem {
  Branch branch = Branch::minus;
  PotentialTerm p = PotentialTerm::Zero();
  Real boundary_exp = 1.0;  // indicial exponent s, >= 1/2 (Friedrichs)
  Grid grid;
  Index levels = 1;
  LeftBoundary left_bc = LeftBoundary::singular_origin;
};

/// Builds an SLProblem with the Friedrichs boundary exponent for p's Coulomb
/// strength. Validates levels >= 1.
SLProblem make_sl_problem(Branch branch, const PotentialTerm& p, const Grid& grid, Index levels,
                          LeftBoundary left_bc = LeftBoundary::singular_origin);

enum class Provenance { numeric, analytic, isolated };

const char* provenance_name(Provenance p);

struct SpectrumEntry {
  int n = 0;
  Real epsilon = 0;
  Real E_plus = 0;   // +sqrt(m^2 + eps) when real
  Real E_minus = 0;  // -sqrt(m^2 + eps) when real
  Provenance provenance = Provenance::numeric;
  Real est_error = 0;
  bool threshold = false;   // eps = 0 candidate: E = -m handled by the isolated construction
  bool has_real_E = true;   // false when eps < -m^2 (no real energy)
};

struct SpectrumReport {
  std::vector<SpectrumEntry> entries;
  Real a = 0;
  Real b = 0;
  Real m = 0;
  std::string branch;  // "plus" | "minus" | "" for merged reports
  /// Set for |a| < 1/2 with a singular term: the inverse-square coupling is
  /// then in the limit-circle regime and the spectrum depends on the chosen
  /// self-adjoint extension (we report the Friedrichs one).
  bool extension_dependent = false;
};

}  // namespace dirac1d
