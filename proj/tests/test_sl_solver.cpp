// Copyright 2026 The dirac1d Authors
// SPDX-License-Identifier: Apache-2.0

#include <dirac1d/sl_solver.hpp>

#include <dirac1d/cornell_analytic.hpp>
#include <dirac1d/errors.hpp>

#include <doctest.h>

#include <cmath>

using namespace dirac1d;

TEST_CASE("wall-mode stencil matches the three-point Laplacian") {
  const Grid grid(1.0, 4.0, 4);  // h = 1, two interior nodes
  const SLProblem prob = make_sl_problem(Branch::plus, PotentialTerm::Zero(), grid, 1,
                                         LeftBoundary::wall);
  const SymTridiag t = build_matrix(prob);
  REQUIRE(t.size() == 2);
  CHECK(t.diag[0] == doctest::Approx(2.0));
  CHECK(t.diag[1] == doctest::Approx(2.0));
  CHECK(t.off[0] == doctest::Approx(-1.0));
}

TEST_CASE("coarseness guard") {
  // h = 1 with U up to ~1e4 violates h^2 max|U| < 1/2
  const Grid grid(1.0, 101.0, 101);
  const SLProblem prob = make_sl_problem(Branch::plus, PotentialTerm::Linear(1.0), grid, 1,
                                         LeftBoundary::wall);
  CHECK_THROWS_AS(build_matrix(prob), GridTooCoarseError);
}

TEST_CASE("cornell assembly smoke case") {
  const Grid grid(1e-3, 8.0, 8001);
  const SLProblem prob = make_sl_problem(Branch::plus, PotentialTerm::Cornell(1, 1), grid, 4);
  CHECK_NOTHROW(build_matrix(prob));
}

TEST_CASE("free particle in a box") {
  // U = 0 on (~0, L]: eps_n = (n pi / L)^2
  const Real L = M_PI;
  const Grid grid(1e-9, L + 1e-9, 2001);
  const SLProblem prob = make_sl_problem(Branch::plus, PotentialTerm::Zero(), grid, 3,
                                         LeftBoundary::wall);
  const SpectrumReport rep = solve_spectrum(prob, 0.0);
  for (int n = 1; n <= 3; ++n) {
    CHECK(std::abs(rep.entries[n - 1].epsilon - n * n) < 1e-7);
  }
}

TEST_CASE("numeric spectrum matches the closed form") {
  const PhysicalParams params{1.0};
  const LorentzPotentials pots{PotentialTerm::Zero(), PotentialTerm::Zero(),
                               PotentialTerm::Cornell(1, 1)};
  SUBCASE("minus branch eps = (0, 4, 8)") {
    const SpectrumReport rep = solve_via_route(Route::lower, pots, params, 3);
    CHECK(std::abs(rep.entries[0].epsilon - 0.0) < 1e-6);
    CHECK(std::abs(rep.entries[1].epsilon - 4.0) < 1e-6 * 4);
    CHECK(std::abs(rep.entries[2].epsilon - 8.0) < 1e-6 * 8);
    CHECK(rep.entries[0].threshold);
    CHECK_FALSE(rep.entries[1].threshold);
    CHECK(rep.entries[1].E_plus == doctest::Approx(std::sqrt(5.0)).epsilon(1e-7));
    CHECK(rep.entries[2].E_plus == doctest::Approx(3.0).epsilon(1e-7));
  }
  SUBCASE("plus branch eps = (4, 8, 12)") {
    const SpectrumReport rep = solve_via_route(Route::upper, pots, params, 3);
    CHECK(std::abs(rep.entries[0].epsilon - 4.0) < 1e-6 * 4);
    CHECK(std::abs(rep.entries[1].epsilon - 8.0) < 1e-6 * 8);
    CHECK(std::abs(rep.entries[2].epsilon - 12.0) < 1e-6 * 12);
    CHECK(rep.entries[0].E_plus == doctest::Approx(std::sqrt(5.0)).epsilon(1e-7));
    CHECK(rep.entries[1].E_plus == doctest::Approx(3.0).epsilon(1e-7));
    CHECK(rep.entries[2].E_plus == doctest::Approx(std::sqrt(13.0)).epsilon(1e-7));
  }
}

TEST_CASE("spectrum report invariants") {
  const PhysicalParams params{1.0};
  const LorentzPotentials pots{PotentialTerm::Zero(), PotentialTerm::Zero(),
                               PotentialTerm::Cornell(2, 0.5)};
  const SpectrumReport rep = solve_via_route(Route::lower, pots, params, 4);
  for (std::size_t i = 1; i < rep.entries.size(); ++i) {
    CHECK(rep.entries[i].epsilon > rep.entries[i - 1].epsilon);
  }
  for (const SpectrumEntry& e : rep.entries) {
    CHECK(e.est_error >= 0.0);
    CHECK(e.has_real_E);
    // every bound level comes with both energy signs
    CHECK(e.E_minus == doctest::Approx(-e.E_plus));
  }
  CHECK_FALSE(rep.extension_dependent);
}

TEST_CASE("partner spectra interlace for a >= 1/2") {
  const PhysicalParams params{1.0};
  const LorentzPotentials pots{PotentialTerm::Zero(), PotentialTerm::Zero(),
                               PotentialTerm::Cornell(1, 1)};
  const SpectrumReport plus = solve_via_route(Route::upper, pots, params, 3);
  const SpectrumReport minus = solve_via_route(Route::lower, pots, params, 4);
  for (int n = 0; n < 3; ++n) {
    const Real scale = std::max<Real>(1.0, std::abs(minus.entries[n + 1].epsilon));
    CHECK(std::abs(plus.entries[n].epsilon - minus.entries[n + 1].epsilon) / scale < 1e-6);
  }
}

TEST_CASE("a-independence of the bound spectrum") {
  const PhysicalParams params{1.0};
  SpectrumReport base;
  bool first = true;
  for (Real a : {0.5, 2.0}) {
    const LorentzPotentials pots{PotentialTerm::Zero(), PotentialTerm::Zero(),
                                 PotentialTerm::Cornell(a, 1.0)};
    const SpectrumReport rep = solve_via_route(Route::lower, pots, params, 3);
    if (first) {
      base = rep;
      first = false;
      continue;
    }
    for (std::size_t i = 0; i < rep.entries.size(); ++i) {
      const Real scale = std::max<Real>(1.0, std::abs(base.entries[i].epsilon));
      CHECK(std::abs(rep.entries[i].epsilon - base.entries[i].epsilon) / scale < 1e-6);
    }
  }
}

TEST_CASE("route guards") {
  const PhysicalParams params{1.0};
  const LorentzPotentials contaminated{PotentialTerm::Constant(1), PotentialTerm::Zero(),
                                       PotentialTerm::Cornell(1, 1)};
  CHECK_THROWS_AS(solve_via_route(Route::upper, contaminated, params, 2),
                  NotPurePseudoscalarError);
  const LorentzPotentials nothing{};
  CHECK_THROWS_AS(solve_via_route(Route::upper, nothing, params, 2), NotPurePseudoscalarError);
  const LorentzPotentials unconfined{PotentialTerm::Zero(), PotentialTerm::Zero(),
                                     PotentialTerm::Cornell(1, -1)};
  CHECK_THROWS_AS(solve_via_route(Route::upper, unconfined, params, 2), ConfigError);
}

TEST_CASE("unattainable agreement tolerance reports non-convergence") {
  const PhysicalParams params{1.0};
  const LorentzPotentials pots{PotentialTerm::Zero(), PotentialTerm::Zero(),
                               PotentialTerm::Cornell(1, 1)};
  const Grid coarse(1e-6, 8.0, 401);
  CHECK_THROWS_AS(solve_via_route(Route::upper, pots, params, 2, coarse, 1e-13),
                  NonConvergedError);
}

TEST_CASE("limit-circle window is flagged extension dependent") {
  const PhysicalParams params{1.0};
  const LorentzPotentials pots{PotentialTerm::Zero(), PotentialTerm::Zero(),
                               PotentialTerm::Cornell(0.25, 1.0)};
  const SpectrumReport rep = solve_via_route(Route::lower, pots, params, 2);
  CHECK(rep.extension_dependent);
  // Friedrichs minus-branch levels for a < 1/2: eps_n = 4bn + 2b(1 - 2a)
  CHECK(std::abs(rep.entries[0].epsilon - 1.0) < 1e-6);
  CHECK(std::abs(rep.entries[1].epsilon - 5.0) < 5e-6);
}

TEST_CASE("bisection eigenvalues converge at second order") {
  // unextrapolated single-grid eigenvalues vs the closed form, fitted slope
  const PotentialTerm p = PotentialTerm::Cornell(1, 1);
  std::vector<Real> hs{4e-3, 2e-3, 1e-3};
  std::vector<Real> errs;
  for (Real h : hs) {
    const Index n = static_cast<Index>(std::llround(8.0 / h)) + 1;
    const Grid grid(1e-9, 1e-9 + h * static_cast<Real>(n - 1), n);
    const SLProblem prob = make_sl_problem(Branch::plus, p, grid, 2);
    const SymTridiag t = build_matrix(prob);
    const Vec eps = lowest_eigenvalues(t, 2);
    errs.push_back(std::abs(eps[1] - 8.0));
  }
  Real sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < hs.size(); ++i) {
    sx += std::log(hs[i]);
    sy += std::log(errs[i]);
    sxx += std::log(hs[i]) * std::log(hs[i]);
    sxy += std::log(hs[i]) * std::log(errs[i]);
  }
  const Real slope = (3 * sxy - sx * sy) / (3 * sxx - sx * sx);
  CHECK(slope > 1.8);
  CHECK(slope < 2.2);
}

TEST_CASE("eigenfunctions match the closed-form shapes") {
  const PhysicalParams params{1.0};
  const LorentzPotentials pots{PotentialTerm::Zero(), PotentialTerm::Zero(),
                               PotentialTerm::Cornell(1, 1)};
  const SLSolution sol = solve_via_route_full(Route::upper, pots, params, 2);
  for (int n = 0; n < 2; ++n) {
    const Vec x = sol.grid.nodes();
    Vec exact(x.size());
    for (Index i = 0; i < x.size(); ++i) {
      exact[i] = analytic_wavefunction(n, Branch::plus, 1.0, 1.0, x[i]);
    }
    exact /= std::sqrt(exact.matrix().squaredNorm());
    Vec num = sol.eigenfunctions[n];
    num /= std::sqrt(num.matrix().squaredNorm());
    if ((num * exact).sum() < 0) num = -num;
    CHECK((num - exact).abs().maxCoeff() < 1e-5);
  }
}
