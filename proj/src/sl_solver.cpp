// Copyright 2026 The dirac1d Authors
// SPDX-License-Identifier: Apache-2.0

#include <dirac1d/sl_solver.hpp>

#include <dirac1d/dirac_core.hpp>
#include <dirac1d/errors.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <utility>

namespace dirac1d {

Real boundary_exponent(Real a, Branch branch) {
  return 0.5 * (1.0 + std::abs(2.0 * a + branch_sign(branch)));
}

SLProblem make_sl_problem(Branch branch, const PotentialTerm& p, const Grid& grid, Index levels,
                          LeftBoundary left_bc) {
  if (levels < 1) throw ConfigError("levels must be >= 1");
  const Real a = components(p).coulomb;
  return SLProblem{branch, p, boundary_exponent(a, branch), grid, levels, left_bc};
}

const char* provenance_name(Provenance p) {
  switch (p) {
    case Provenance::numeric: return "numeric";
    case Provenance::analytic: return "analytic";
    case Provenance::isolated: return "isolated";
  }
  return "unknown";
}

const char* route_name(Route r) { return r == Route::upper ? "upper" : "lower"; }

Branch route_branch(Route r) { return r == Route::upper ? Branch::plus : Branch::minus; }

namespace {

// Regular (non-inverse-square) part of U_pm for a term with components
// (coulomb a, linear b, constant c):
//   U_pm = (a^2 pm a)/x^2 + (b x + c)^2 - 2ab pm b + 2c(...)/...
// For the closed enumeration V = -a/x + b x + c,
//   V^2 = a^2/x^2 + b^2x^2 + c^2 - 2ab + 2bcx - 2ac/x
//   V'  = a/x^2 + b
// so U_pm has inverse-square coefficient (a^2 pm a), a -2ac/x piece, and the
// rest is polynomial. The -1/x piece only appears when both a constant and a
// Coulomb part are present (never for the pure terms used here).
struct USplit {
  Real inv_sq;  // coefficient of 1/x^2
  Real inv;     // coefficient of 1/x
  Real c0;      // constant
  Real c1;      // coefficient of x
  Real c2;      // coefficient of x^2
};

USplit split_effective_potential(const PotentialTerm& p, Branch branch) {
  const TermComponents tc = components(p);
  const Real a = tc.coulomb, b = tc.linear, c = tc.constant;
  const Real sg = branch_sign(branch);
  USplit u;
  u.inv_sq = a * a + sg * a;
  u.inv = -2.0 * a * c;
  u.c0 = c * c - 2.0 * a * b + sg * b;
  u.c1 = 2.0 * b * c;
  u.c2 = b * b;
  return u;
}

Real regular_part(const USplit& u, Real x) { return u.inv / x + u.c0 + x * (u.c1 + x * u.c2); }

}  // namespace

SymTridiag build_matrix(const SLProblem& problem) {
  const Grid& g = problem.grid;
  const Index n = g.size();
  const Real h = g.spacing();
  const Index dim = n - 2;
  SymTridiag t{Vec(dim), Vec(dim - 1)};

  if (problem.left_bc == LeftBoundary::wall) {
    Real max_abs_u = 0;
    for (Index i = 0; i < dim; ++i) {
      const Real u = effective_sl_potential(problem.p, problem.branch, g.node(i + 1));
      max_abs_u = std::max(max_abs_u, std::abs(u));
      t.diag[i] = 2.0 / (h * h) + u;
    }
    if (h * h * max_abs_u >= 0.5) {
      throw GridTooCoarseError("h^2 * max|U| = " + std::to_string(h * h * max_abs_u) +
                               " >= 0.5; refine the grid");
    }
    t.off.setConstant(-1.0 / (h * h));
    return t;
  }

  // singular-origin stencil
  const Real s = problem.boundary_exp;
  const USplit usp = split_effective_potential(problem.p, problem.branch);
  Real max_abs_reg = 0;
  for (Index i = 0; i < dim; ++i) {
    const Real x = g.node(i + 1);
    const Real xp = x + 0.5 * h;
    const Real xm = x - 0.5 * h;
    const Real reg = regular_part(usp, x);
    max_abs_reg = std::max(max_abs_reg, std::abs(reg));
    t.diag[i] =
        (std::pow(xp, 2.0 * s) + std::pow(xm, 2.0 * s)) / (h * h * std::pow(x, 2.0 * s)) + reg;
  }
  if (h * h * max_abs_reg >= 0.5) {
    throw GridTooCoarseError("h^2 * max|U_reg| = " + std::to_string(h * h * max_abs_reg) +
                             " >= 0.5; refine the grid");
  }
  for (Index i = 0; i + 1 < dim; ++i) {
    const Real xi = g.node(i + 1);
    const Real xj = g.node(i + 2);
    t.off[i] = -std::pow(xi + 0.5 * h, 2.0 * s) / (h * h * std::pow(xi, s) * std::pow(xj, s));
  }
  // matched closure of the first row: the stencil reference to u(x_min) uses
  // the Frobenius leading behavior u ~ x^s instead of the hard zero.
  const Real x0 = g.node(0);
  const Real x1 = g.node(1);
  const Real rho = std::pow(x0 / x1, s);
  t.diag[0] -= std::pow(x1 - 0.5 * h, 2.0 * s) / (h * h * std::pow(x1, s) * std::pow(x0, s)) * rho;
  return t;
}

namespace {

Vec eigenvalues_of(const SLProblem& problem, const Grid& grid) {
  SLProblem p = problem;
  p.grid = grid;
  const SymTridiag t = build_matrix(p);
  return lowest_eigenvalues(t, problem.levels);
}

}  // namespace

SLSolution solve_spectrum_full(const SLProblem& problem, Real m, Real nonconverged_rel) {
  if (problem.levels < 1) throw ConfigError("levels must be >= 1");
  const Grid coarse = problem.grid;
  const Grid fine = coarse.refined();

  const Vec eps_coarse = eigenvalues_of(problem, coarse);
  const Vec eps_fine = eigenvalues_of(problem, fine);

  const Index k = problem.levels;
  SLSolution sol{{}, fine, {}};
  SpectrumReport& rep = sol.report;
  const TermComponents tc = components(problem.p);
  rep.a = tc.coulomb;
  rep.b = tc.linear;
  rep.m = m;
  rep.branch = branch_name(problem.branch);
  rep.extension_dependent =
      problem.left_bc == LeftBoundary::singular_origin && std::abs(tc.coulomb) < 0.5;

  // one grid-halving Richardson step (the stencil error is O(h^2))
  std::vector<Real> lambdas(k);
  for (Index i = 0; i < k; ++i) {
    const Real extrap = (4.0 * eps_fine[i] - eps_coarse[i]) / 3.0;
    const Real rel = std::abs(eps_coarse[i] - eps_fine[i]) /
                     std::max<Real>(1.0, std::abs(eps_fine[i]));
    if (rel > nonconverged_rel) {
      throw NonConvergedError("level " + std::to_string(i) + ": coarse/fine grids disagree by " +
                              std::to_string(rel) + " relative (tolerance " +
                              std::to_string(nonconverged_rel) + ")");
    }
    lambdas[i] = extrap;
    SpectrumEntry e;
    e.n = static_cast<int>(i);
    e.epsilon = extrap;
    e.est_error = std::abs(eps_fine[i] - extrap);
    e.provenance = Provenance::numeric;
    const Real e2 = m * m + extrap;
    e.has_real_E = e2 >= 0.0;
    e.E_plus = e.has_real_E ? std::sqrt(e2) : std::numeric_limits<Real>::quiet_NaN();
    e.E_minus = e.has_real_E ? -std::sqrt(e2) : std::numeric_limits<Real>::quiet_NaN();
    rep.entries.push_back(e);
  }

  // eigenfunctions on the fine grid
  SLProblem pf = problem;
  pf.grid = fine;
  const SymTridiag tf = build_matrix(pf);
  const Vec eps_for_vectors = eps_fine;
  std::vector<Vec> interior(k);
  std::vector<Real> lam_fine(k);
  for (Index i = 0; i < k; ++i) {
    lam_fine[i] = eps_for_vectors[i];
    interior[i] = eigenvector(tf, eps_for_vectors[i]);
  }
  order_degenerate_by_node_count(lam_fine, interior);
  for (Index i = 0; i < k; ++i) {
    Vec full = Vec::Zero(fine.size());
    full.segment(1, fine.size() - 2) = interior[i];
    sol.eigenfunctions.push_back(std::move(full));
  }
  return sol;
}

SpectrumReport solve_spectrum(const SLProblem& problem, Real m, Real nonconverged_rel) {
  return solve_spectrum_full(problem, m, nonconverged_rel).report;
}

Grid default_solver_grid(Real a, Real b, Index levels) {
  if (!(b > 0)) throw ConfigError("default solver grid requires a confining slope b > 0");
  const Real sb = std::sqrt(b);
  const Real x_min = 1e-9 / sb;
  const Real s_hi = std::max(boundary_exponent(a, Branch::plus), boundary_exponent(a, Branch::minus));
  const Real eps_max = std::max<Real>(
      0.0, b * (4.0 * static_cast<Real>(levels - 1) + 2.0 * s_hi + 1.0) + 2.0 * std::abs(a) * b + b);
  const Real x_max = std::max(8.0 / sb, std::sqrt(eps_max + 40.0) / b);
  const Real h_target = 1e-3 / sb;
  const Index n = static_cast<Index>(std::llround((x_max - x_min) / h_target)) + 1;
  return Grid(x_min, x_min + h_target * static_cast<Real>(n - 1), n);
}

SLSolution solve_via_route_full(Route route, const LorentzPotentials& pots,
                                const PhysicalParams& params, Index levels,
                                std::optional<Grid> grid, Real nonconverged_rel) {
  if (!pots.v.is_zero() || !pots.s.is_zero()) {
    throw NotPurePseudoscalarError(
        "component routes require a pure pseudoscalar configuration (V_v = V_s = 0)");
  }
  if (pots.p.is_zero()) {
    throw NotPurePseudoscalarError("pseudoscalar coupling is identically zero");
  }
  const TermComponents tc = components(pots.p);
  if (!(tc.linear > 0)) {
    throw ConfigError("confining slope b must be positive, got b=" + std::to_string(tc.linear));
  }
  const Branch branch = route_branch(route);
  const Grid g = grid ? *grid : default_solver_grid(tc.coulomb, tc.linear, levels);
  const SLProblem problem = make_sl_problem(branch, pots.p, g, levels);
  SLSolution sol = solve_spectrum_full(problem, params.m, nonconverged_rel);

  // eps = 0 candidates: threshold energies E = -m (resolved by the isolated
  // construction, not by this second-order problem)
  const Real thr_tol = 1e-6 * std::max<Real>(1.0, 4.0 * tc.linear);
  for (SpectrumEntry& e : sol.report.entries) {
    if (std::abs(e.epsilon) <= thr_tol) e.threshold = true;
  }
  return sol;
}

SpectrumReport solve_via_route(Route route, const LorentzPotentials& pots,
                               const PhysicalParams& params, Index levels,
                               std::optional<Grid> grid, Real nonconverged_rel) {
  return solve_via_route_full(route, pots, params, levels, grid, nonconverged_rel).report;
}

}  // namespace dirac1d
