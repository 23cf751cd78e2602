// Copyright 2026 The dirac1d Authors
// SPDX-License-Identifier: Apache-2.0

#include <dirac1d/cornell_analytic.hpp>

#include <dirac1d/dirac_core.hpp>
#include <dirac1d/sl_solver.hpp>

#include <doctest.h>

#include <Eigen/Eigenvalues>

#include <cmath>
#include <random>

using namespace dirac1d;

TEST_CASE("boundary exponents") {
  CHECK(boundary_exponent(1.0, Branch::plus) == doctest::Approx(2.0));
  CHECK(boundary_exponent(0.0, Branch::plus) == doctest::Approx(1.0));
  CHECK(boundary_exponent(0.0, Branch::minus) == doctest::Approx(1.0));
  CHECK(boundary_exponent(1.0, Branch::minus) == doctest::Approx(1.0));
  CHECK(boundary_exponent(0.25, Branch::minus) == doctest::Approx(0.75));
  CHECK(boundary_exponent(0.5, Branch::minus) == doctest::Approx(0.5));
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> dist(-6.0, 6.0);
  for (int i = 0; i < 200; ++i) {
    const Real a = dist(rng);
    CHECK(boundary_exponent(a, Branch::plus) >= 0.5);
    CHECK(boundary_exponent(a, Branch::minus) >= 0.5);
  }
}

TEST_CASE("laguerre recurrence against hand-expanded values") {
  // L_2^{(1/2)}(t) = 15/8 - 5 t / 2 + t^2 / 2
  const Real t = 1.3;
  CHECK(laguerre(2, 0.5, t) == doctest::Approx(15.0 / 8 - 2.5 * t + 0.5 * t * t).epsilon(1e-14));
  CHECK(laguerre(0, 1.7, 0.4) == 1.0);
  CHECK(laguerre(1, 1.7, 0.4) == doctest::Approx(1.0 + 1.7 - 0.4));
  // derivative identity d/dt L_n^a = -L_{n-1}^{a+1}
  CHECK(laguerre_derivative(2, 0.5, t) == doctest::Approx(-laguerre(1, 1.5, t)));
}

TEST_CASE("closed-form levels") {
  CHECK(analytic_epsilon(0, Branch::minus, 1.0, 1.0) == doctest::Approx(0.0));
  CHECK(analytic_epsilon(2, Branch::plus, 1.0, 1.0) == doctest::Approx(12.0));
  CHECK(analytic_epsilon(0, Branch::plus, 0.0, 1.0) == doctest::Approx(4.0));
  // a <= -1/2: both branches coincide, from the general formula
  CHECK(analytic_epsilon(0, Branch::plus, -1.0, 1.0) == doctest::Approx(6.0));
  CHECK(analytic_epsilon(0, Branch::minus, -1.0, 1.0) == doctest::Approx(6.0));

  SUBCASE("a >= 1/2 simplifications") {
    for (Real a : {0.5, 1.0, 2.0, 5.0}) {
      for (Real b : {0.5, 1.0, 2.0}) {
        for (int n = 0; n < 5; ++n) {
          CHECK(analytic_epsilon(n, Branch::minus, a, b) == doctest::Approx(4.0 * b * n));
          CHECK(analytic_epsilon(n, Branch::plus, a, b) == doctest::Approx(4.0 * b * (n + 1)));
        }
      }
    }
  }

  SUBCASE("equal spacing 4b for all a") {
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> adist(-3.0, 3.0);
    std::uniform_real_distribution<double> bdist(0.1, 4.0);
    for (int i = 0; i < 200; ++i) {
      const Real a = adist(rng), b = bdist(rng);
      for (Branch br : {Branch::plus, Branch::minus}) {
        const int n = i % 6;
        CHECK(analytic_epsilon(n + 1, br, a, b) - analytic_epsilon(n, br, a, b) ==
              doctest::Approx(4.0 * b).epsilon(1e-13));
      }
    }
  }

  CHECK_THROWS_AS(analytic_epsilon(0, Branch::plus, 1.0, -1.0), ConfigError);
  CHECK_THROWS_AS(analytic_epsilon(0, Branch::plus, 1.0, 0.0), ConfigError);
}

TEST_CASE("wavefunctions: positivity, nodes, and the n=1 zero") {
  // n = 0 is strictly positive
  for (Real x : {0.05, 0.3, 1.0, 2.7}) {
    CHECK(analytic_wavefunction(0, Branch::minus, 1.0, 1.0, x) > 0.0);
  }
  // n = 1, a = 1, b = 1, minus (s = 1): single zero at x = sqrt(3/2)
  const Real xz = std::sqrt(1.5);
  CHECK(std::abs(analytic_wavefunction(1, Branch::minus, 1.0, 1.0, xz)) < 1e-14);
  CHECK(analytic_wavefunction(1, Branch::minus, 1.0, 1.0, xz - 0.1) *
            analytic_wavefunction(1, Branch::minus, 1.0, 1.0, xz + 0.1) <
        0.0);
  // node counts on a sampling grid
  for (int n = 0; n < 4; ++n) {
    const Vec x = Vec::LinSpaced(4000, 0.01, 8.0);
    const Vec u = analytic_wavefunction(n, Branch::plus, 2.0, 1.0, x);
    int sign_changes = 0;
    for (Index i = 1; i < x.size(); ++i) {
      if (u[i - 1] * u[i] < 0) ++sign_changes;
    }
    CHECK(sign_changes == n);
  }
}

TEST_CASE("wavefunction satisfies the differential equation") {
  // residual oracle: 5-point finite difference for u'' against
  // (U_pm - eps) u at random interior points
  std::mt19937 rng(2024);
  std::uniform_real_distribution<double> xs(0.2, 4.0);
  // large enough that the ~1e-14 absolute noise of the polynomial evaluation
  // survives the 1/h^2 amplification; the Richardson step keeps the
  // truncation below that
  const Real h = 4e-3;
  struct Case {
    int n;
    Branch br;
    Real a, b;
  };
  for (const Case& c : {Case{0, Branch::minus, 1.0, 1.0}, Case{1, Branch::plus, 1.0, 1.0},
                        Case{2, Branch::minus, 2.0, 0.5}, Case{1, Branch::minus, 0.5, 2.0},
                        Case{3, Branch::plus, 0.25, 1.0}, Case{0, Branch::plus, -1.0, 1.0}}) {
    const Real eps = analytic_epsilon(c.n, c.br, c.a, c.b);
    const PotentialTerm p = PotentialTerm::Cornell(c.a, c.b);
    auto u = [&](Real x) { return analytic_wavefunction(c.n, c.br, c.a, c.b, x); };
    auto d2 = [&](Real x, Real step) {
      return (-u(x + 2 * step) + 16 * u(x + step) - 30 * u(x) + 16 * u(x - step) -
              u(x - 2 * step)) /
             (12 * step * step);
    };
    for (int i = 0; i < 100; ++i) {
      const Real x = xs(rng);
      // one Richardson step on the fourth-order stencil
      const Real upp = (16.0 * d2(x, h) - d2(x, 2 * h)) / 15.0;
      const Real lhs = -upp + effective_sl_potential(p, c.br, x) * u(x);
      const Real rhs = eps * u(x);
      // relative to the local equation scale; |u| alone collapses at the
      // interior zeros of L_n and the finite-difference roundoff floor takes
      // over there
      const Real u_ref = std::max({std::abs(u(x - 4 * h)), std::abs(u(x - 2 * h)),
                                   std::abs(u(x)), std::abs(u(x + 2 * h)),
                                   std::abs(u(x + 4 * h))});
      const Real scale =
          (std::abs(effective_sl_potential(p, c.br, x)) + std::abs(eps) + 1.0) * u_ref;
      CHECK(std::abs(lhs - rhs) / scale < 1e-9);
    }
  }
}

TEST_CASE("closed-form derivative matches finite differences") {
  const Real h = 1e-6;
  for (Real x : {0.4, 1.1, 2.3}) {
    for (int n : {0, 1, 3}) {
      const Real fd = (oscillator_wavefunction(n, 1.5, 1.0, x + h) -
                       oscillator_wavefunction(n, 1.5, 1.0, x - h)) /
                      (2 * h);
      CHECK(oscillator_wavefunction_derivative(n, 1.5, 1.0, x) ==
            doctest::Approx(fd).epsilon(1e-8));
    }
  }
}

TEST_CASE("analytic spectrum reports") {
  const SpectrumReport minus = analytic_spectrum_report(1.0, 1.0, 1.0, 3, Branch::minus);
  REQUIRE(minus.entries.size() == 3);
  CHECK(minus.entries[0].epsilon == doctest::Approx(0.0));
  CHECK(minus.entries[0].threshold);
  CHECK(minus.entries[1].epsilon == doctest::Approx(4.0));
  CHECK(minus.entries[1].E_plus == doctest::Approx(std::sqrt(5.0)));
  CHECK(minus.entries[1].E_minus == doctest::Approx(-std::sqrt(5.0)));
  CHECK(minus.entries[2].E_plus == doctest::Approx(3.0));
  for (const SpectrumEntry& e : minus.entries) {
    CHECK(e.provenance == Provenance::analytic);
    CHECK(e.est_error == 0.0);
  }

  // a-independence of the spectrum for a >= 1/2
  const SpectrumReport a2 = analytic_spectrum_report(2.0, 1.0, 1.0, 2, Branch::minus);
  CHECK(a2.entries[0].epsilon == doctest::Approx(0.0));
  CHECK(a2.entries[1].epsilon == doctest::Approx(4.0));

  // a = -1: eps_0 = 6, E = +-sqrt(7), no threshold entry on either branch
  const AnalyticReports am1 = analytic_spectrum_reports(-1.0, 1.0, 1.0, 1);
  CHECK(am1.minus.entries[0].epsilon == doctest::Approx(6.0));
  CHECK(am1.plus.entries[0].epsilon == doctest::Approx(6.0));
  CHECK(am1.minus.entries[0].E_plus == doctest::Approx(std::sqrt(7.0)));
  CHECK_FALSE(am1.minus.entries[0].threshold);
  CHECK_FALSE(am1.plus.entries[0].threshold);
}

TEST_CASE("analytic formula against brute-force diagonalization (spot check)") {
  // The full 12-pair gate runs in the acceptance suite; here two pairs keep
  // the unit tests honest and fast.
  for (const auto& [a, b] : {std::pair<Real, Real>{1.0, 1.0}, {0.5, 2.0}}) {
    for (Branch br : {Branch::plus, Branch::minus}) {
      const Grid grid(1e-9 / std::sqrt(b), 8.0 / std::sqrt(b), 3001);
      const SLProblem prob = make_sl_problem(br, PotentialTerm::Cornell(a, b), grid, 3);
      const SymTridiag t = build_matrix(prob);
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
      es.computeFromTridiagonal(t.diag.matrix(), t.off.matrix(), Eigen::EigenvaluesOnly);
      for (int n = 0; n < 3; ++n) {
        const Real exact = analytic_epsilon(n, br, a, b);
        CHECK(std::abs(es.eigenvalues()[n] - exact) / std::max<Real>(1.0, exact) < 2e-4);
      }
    }
  }
}
