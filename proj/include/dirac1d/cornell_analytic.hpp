// Copyright 2026 The dirac1d Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <dirac1d/grid.hpp>
#include <dirac1d/sl_problem.hpp>
#include <dirac1d/spinor.hpp>
#include <dirac1d/types.hpp>

namespace dirac1d {

/// Generalized Laguerre polynomial L_n^{(alpha)}(t) by the three-term
/// recurrence (stable for moderate n).
Real laguerre(int n, Real alpha, Real t);

/// d/dt L_n^{(alpha)}(t) = -L_{n-1}^{(alpha+1)}(t).
Real laguerre_derivative(int n, Real alpha, Real t);

/// Closed-form levels of -u'' + [(a^2 pm a)/x^2 + b^2 x^2 - 2ab pm b] u = eps u
/// on the half line with boundary exponent s:
///   eps_n = b (4n + 2s + 1) - 2ab pm b.
/// With the default (Friedrichs) exponent s = boundary_exponent(a, branch)
/// this is the spectrum the numerical solver converges to. Levels are spaced
/// by exactly 4b.
Real analytic_epsilon(int n, Branch branch, Real a, Real b);

/// Same formula with an explicit exponent s (any indicial root); used for the
/// threshold zero mode in the limit-circle window |a| < 1/2.
Real analytic_epsilon_with_exponent(int n, Real s, Real a, Real b, Branch branch);

/// Unnormalized eigenfunction of the singular oscillator with exponent s:
///   u_n(x) = x^s exp(-b x^2 / 2) L_n^{(s - 1/2)}(b x^2),
/// having exactly n interior zeros on (0, inf).
Real oscillator_wavefunction(int n, Real s, Real b, Real x);
Vec oscillator_wavefunction(int n, Real s, Real b, const Vec& x);

/// du_n/dx in closed form.
Real oscillator_wavefunction_derivative(int n, Real s, Real b, Real x);
Vec oscillator_wavefunction_derivative(int n, Real s, Real b, const Vec& x);

/// Eigenfunction for the Friedrichs exponent of branch (a, b).
Real analytic_wavefunction(int n, Branch branch, Real a, Real b, Real x);
Vec analytic_wavefunction(int n, Branch branch, Real a, Real b, const Vec& x);

/// First k closed-form levels of one branch, with provenance = analytic and
/// eps = 0 entries marked as threshold candidates.
SpectrumReport analytic_spectrum_report(Real a, Real b, Real m, Index k, Branch branch);

/// Both branches stacked (minus first), matching the two SL routes.
struct AnalyticReports {
  SpectrumReport plus;
  SpectrumReport minus;
};
AnalyticReports analytic_spectrum_reports(Real a, Real b, Real m, Index k);

/// Exact eigenspinor built from the plus-branch level n: the upper component
/// is the closed-form U_+ eigenfunction, the lower follows from the exact
/// first-order relation psi_- = -i (psi_+' - Vp psi_+) / (E + m) with
/// E = energy_sign * sqrt(m^2 + eps_n^+). Normalized on the grid.
Spinor analytic_spinor(int n, int energy_sign, Real a, Real b, Real m, const Grid& grid);

}  // namespace dirac1d
