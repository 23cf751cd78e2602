// Copyright 2026 The dirac1d Authors
// SPDX-License-Identifier: Apache-2.0

#include <dirac1d/cornell_analytic.hpp>

#include <dirac1d/errors.hpp>
#include <dirac1d/sl_solver.hpp>

#include <cmath>
#include <limits>
#include <string>

namespace dirac1d {

Real laguerre(int n, Real alpha, Real t) {
  if (n < 0) throw DomainError("Laguerre degree must be >= 0");
  if (n == 0) return 1.0;
  Real lk_minus = 1.0;
  Real lk = 1.0 + alpha - t;
  for (int k = 1; k < n; ++k) {
    const Real lk_plus =
        ((2.0 * k + 1.0 + alpha - t) * lk - (k + alpha) * lk_minus) / static_cast<Real>(k + 1);
    lk_minus = lk;
    lk = lk_plus;
  }
  return lk;
}

Real laguerre_derivative(int n, Real alpha, Real t) {
  if (n == 0) return 0.0;
  return -laguerre(n - 1, alpha + 1.0, t);
}

namespace {

void check_confining(Real b) {
  if (!(b > 0)) {
    throw ConfigError("closed-form levels require a confining slope b > 0, got b=" +
                      std::to_string(b));
  }
}

}  // namespace

Real analytic_epsilon_with_exponent(int n, Real s, Real a, Real b, Branch branch) {
  check_confining(b);
  if (n < 0) throw DomainError("level index must be >= 0");
  return b * (4.0 * n + 2.0 * s + 1.0) - 2.0 * a * b + branch_sign(branch) * b;
}

Real analytic_epsilon(int n, Branch branch, Real a, Real b) {
  return analytic_epsilon_with_exponent(n, boundary_exponent(a, branch), a, b, branch);
}

Real oscillator_wavefunction(int n, Real s, Real b, Real x) {
  if (!(x > 0)) throw DomainError("wavefunction defined for x > 0");
  check_confining(b);
  const Real t = b * x * x;
  return std::pow(x, s) * std::exp(-0.5 * t) * laguerre(n, s - 0.5, t);
}

Vec oscillator_wavefunction(int n, Real s, Real b, const Vec& x) {
  Vec out(x.size());
  for (Index i = 0; i < x.size(); ++i) out[i] = oscillator_wavefunction(n, s, b, x[i]);
  return out;
}

Real oscillator_wavefunction_derivative(int n, Real s, Real b, Real x) {
  if (!(x > 0)) throw DomainError("wavefunction defined for x > 0");
  check_confining(b);
  const Real t = b * x * x;
  const Real lag = laguerre(n, s - 0.5, t);
  const Real dlag = laguerre_derivative(n, s - 0.5, t);
  // d/dx [x^s e^{-t/2} L(t)] with dt/dx = 2 b x
  return std::pow(x, s) * std::exp(-0.5 * t) *
         ((s / x - b * x) * lag + 2.0 * b * x * dlag);
}

Vec oscillator_wavefunction_derivative(int n, Real s, Real b, const Vec& x) {
  Vec out(x.size());
  for (Index i = 0; i < x.size(); ++i) out[i] = oscillator_wavefunction_derivative(n, s, b, x[i]);
  return out;
}

Real analytic_wavefunction(int n, Branch branch, Real a, Real b, Real x) {
  return oscillator_wavefunction(n, boundary_exponent(a, branch), b, x);
}

Vec analytic_wavefunction(int n, Branch branch, Real a, Real b, const Vec& x) {
  return oscillator_wavefunction(n, boundary_exponent(a, branch), b, x);
}

SpectrumReport analytic_spectrum_report(Real a, Real b, Real m, Index k, Branch branch) {
  check_confining(b);
  if (k < 1) throw ConfigError("levels must be >= 1");
  SpectrumReport rep;
  rep.a = a;
  rep.b = b;
  rep.m = m;
  rep.branch = branch_name(branch);
  rep.extension_dependent = std::abs(a) < 0.5 && a != 0.0;
  const Real thr_tol = 1e-12 * std::max<Real>(1.0, b);
  for (Index i = 0; i < k; ++i) {
    SpectrumEntry e;
    e.n = static_cast<int>(i);
    e.epsilon = analytic_epsilon(static_cast<int>(i), branch, a, b);
    e.provenance = Provenance::analytic;
    e.est_error = 0.0;
    e.threshold = std::abs(e.epsilon) <= thr_tol;
    const Real e2 = m * m + e.epsilon;
    e.has_real_E = e2 >= 0.0;
    e.E_plus = e.has_real_E ? std::sqrt(e2) : std::numeric_limits<Real>::quiet_NaN();
    e.E_minus = e.has_real_E ? -std::sqrt(e2) : std::numeric_limits<Real>::quiet_NaN();
    rep.entries.push_back(e);
  }
  return rep;
}

AnalyticReports analytic_spectrum_reports(Real a, Real b, Real m, Index k) {
  return {analytic_spectrum_report(a, b, m, k, Branch::plus),
          analytic_spectrum_report(a, b, m, k, Branch::minus)};
}

Spinor analytic_spinor(int n, int energy_sign, Real a, Real b, Real m, const Grid& grid) {
  check_confining(b);
  if (energy_sign != 1 && energy_sign != -1) throw DomainError("energy_sign must be +1 or -1");
  const Real s_up = boundary_exponent(a, Branch::plus);
  const Real eps = analytic_epsilon(n, Branch::plus, a, b);
  const Real E = energy_sign * std::sqrt(m * m + eps);
  const PotentialTerm p = PotentialTerm::Cornell(a, b);
  const Vec x = grid.nodes();
  const Vec up = oscillator_wavefunction(n, s_up, b, x);
  const Vec dup = oscillator_wavefunction_derivative(n, s_up, b, x);
  // psi_- from the exact first-order relation (E != -m away from threshold)
  CVec upper = up.cast<Complex>();
  CVec lower(x.size());
  const Complex mi(0.0, -1.0);
  for (Index i = 0; i < x.size(); ++i) {
    lower[i] = mi / (E + m) * (dup[i] - p.value(x[i]) * up[i]);
  }
  return normalize(Spinor(grid, upper, lower, E));
}

}  // namespace dirac1d
