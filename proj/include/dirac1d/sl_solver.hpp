// Copyright 2026 The dirac1d Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <dirac1d/sl_problem.hpp>
#include <dirac1d/tridiag.hpp>

#include <optional>
#include <vector>

namespace dirac1d {

/// Larger root of the indicial equation s(s-1) = a^2 pm a:
///   s = (1 + |2a pm 1|) / 2  >= 1/2.
/// This is the Friedrichs self-adjoint extension exponent of the
/// inverse-square term of U_pm.
Real boundary_exponent(Real a, Branch branch);

/// Discretization of -u'' + U u = eps u on the interior nodes (dimension
/// grid.size() - 2), Dirichlet at both ends.
///
/// wall mode: the plain three-point stencil, diag = 2/h^2 + U(x_i),
/// off-diagonal -1/h^2. Throws GridTooCoarseError when h^2 max|U| >= 0.5.
///
/// singular_origin mode: conservative stencil with x^{2s} flux weights.
/// Writing u = x^s w removes the inverse-square part of U exactly, so the
/// matrix entries are
///   off(i,i+1) = -x_{i+1/2}^{2s} / (h^2 x_i^s x_{i+1}^s)
///   diag(i)    = (x_{i+1/2}^{2s} + x_{i-1/2}^{2s}) / (h^2 x_i^{2s}) + U_reg(x_i)
/// with U_reg the regular (non-inverse-square) part of U, plus a matched
/// closure of the first row against the Frobenius behavior at x_min. The
/// coarseness guard applies to U_reg.
SymTridiag build_matrix(const SLProblem& problem);

struct SLSolution {
  SpectrumReport report;
  Grid grid;                        // fine grid the eigenfunctions live on
  std::vector<Vec> eigenfunctions;  // one per entry, full-grid samples (zero ends)
};

/// Lowest `levels` eigenvalues by Sturm bisection on the assembled matrix,
/// refined by one grid-halving Richardson extrapolation;
/// est_error = |eps_fine - eps_extrap|. Eigenfunctions from the fine grid by
/// inverse iteration, with degenerate pairs ordered by node count.
/// Throws NonConvergedError when the two grids disagree by more than
/// nonconverged_rel relative; entries with eps < -m^2 get has_real_E = false.
SLSolution solve_spectrum_full(const SLProblem& problem, Real m, Real nonconverged_rel = 1e-4);

SpectrumReport solve_spectrum(const SLProblem& problem, Real m, Real nonconverged_rel = 1e-4);

/// Which second-order equation is solved: the upper component obeys U_plus,
/// the lower obeys U_minus.
enum class Route { upper, lower };

const char* route_name(Route r);

Branch route_branch(Route r);

/// Default half-line discretization for a confining pseudoscalar term with
/// slope b and `levels` requested levels: node spacing 1e-3/sqrt(b) before
/// refinement, x_min = 1e-9/sqrt(b) (numerical cutoff only; the matched
/// stencil carries the boundary behavior), x_max far enough that U exceeds
/// the largest sought eps by about 40.
Grid default_solver_grid(Real a, Real b, Index levels);

/// Solves via the chosen component route for a pure pseudoscalar
/// configuration (throws NotPurePseudoscalarError otherwise); eps = 0 entries
/// are marked as threshold candidates.
SLSolution solve_via_route_full(Route route, const LorentzPotentials& pots,
                                const PhysicalParams& params, Index levels,
                                std::optional<Grid> grid = std::nullopt,
                                Real nonconverged_rel = 1e-4);

SpectrumReport solve_via_route(Route route, const LorentzPotentials& pots,
                               const PhysicalParams& params, Index levels,
                               std::optional<Grid> grid = std::nullopt,
                               Real nonconverged_rel = 1e-4);

}  // namespace dirac1d
