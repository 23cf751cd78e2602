// Copyright 2026 The dirac1d Authors
// SPDX-License-Identifier: Apache-2.0

#include <dirac1d/dirac_core.hpp>

#include <dirac1d/errors.hpp>

#include <cmath>
#include <string>

namespace dirac1d {

Real effective_sl_potential(const PotentialTerm& p, Branch branch, Real x) {
  const Real v = p.value(x);
  return v * v + branch_sign(branch) * p.derivative(x);
}

Vec effective_sl_potential(const PotentialTerm& p, Branch branch, const Vec& x) {
  Vec out(x.size());
  for (Index i = 0; i < x.size(); ++i) out[i] = effective_sl_potential(p, branch, x[i]);
  return out;
}

namespace {

// sign = +1: (d/dx + Vp) f = e^{-v} (e^{+v} f)'
// sign = -1: (d/dx - Vp) f = e^{+v} (e^{-v} f)'
// Gauge factors enter only through v(x_i) - v(x_j) of neighbor nodes.
CVec gauged_derivative(const CVec& f, const PotentialTerm& p, const Grid& grid, Real sign) {
  const Index n = grid.size();
  if (f.size() != n) throw DomainError("component sample count does not match the grid");
  const Real h = grid.spacing();
  const Vec v = p.antiderivative(grid.nodes());
  auto w = [&](Index j, Index i) { return std::exp(sign * (v[j] - v[i])); };
  CVec out(n);
  for (Index i = 1; i < n - 1; ++i) {
    out[i] = (w(i + 1, i) * f[i + 1] - w(i - 1, i) * f[i - 1]) / (2.0 * h);
  }
  out[0] = (-3.0 * f[0] + 4.0 * w(1, 0) * f[1] - w(2, 0) * f[2]) / (2.0 * h);
  out[n - 1] =
      (3.0 * f[n - 1] - 4.0 * w(n - 2, n - 1) * f[n - 2] + w(n - 3, n - 1) * f[n - 3]) / (2.0 * h);
  return out;
}

}  // namespace

CVec apply_ddx_plus_vp(const CVec& f, const PotentialTerm& p, const Grid& grid) {
  return gauged_derivative(f, p, grid, +1.0);
}

CVec apply_ddx_minus_vp(const CVec& f, const PotentialTerm& p, const Grid& grid) {
  return gauged_derivative(f, p, grid, -1.0);
}

Real dirac_residual(const Spinor& spinor, const LorentzPotentials& pots,
                    const PhysicalParams& params) {
  if (!spinor.is_normalized()) {
    throw DomainError("dirac_residual requires a normalized spinor");
  }
  const Grid& g = spinor.grid();
  const Index n = g.size();
  const Real h = g.spacing();
  const Real m = params.m;
  const Real E = spinor.energy();

  // resolution guard: h max|V| must be small or the stencil is meaningless.
  // The Coulomb part of the pseudoscalar term is exempt: the gauge factors
  // carry it exactly, so only its regular remainder must be resolved.
  const TermComponents pc = components(pots.p);
  Real max_v = 0;
  for (Index i = 0; i < n; ++i) {
    const Real x = g.node(i);
    const auto [vs, vd] = sigma_delta(pots, x);
    const Real p_reg = std::abs(pc.linear * x + pc.constant);
    max_v = std::max({max_v, std::abs(vs), std::abs(vd), p_reg});
  }
  if (h * max_v >= 0.5) {
    throw GridTooCoarseError("h * max|V| = " + std::to_string(h * max_v) +
                             " >= 0.5; the grid does not resolve the potentials");
  }

  // row 1: -i (psi_-' + Vp psi_-) + (m + V_Sigma - E) psi_+
  // row 2: -i (psi_+' - Vp psi_+) + (-m + V_Delta - E) psi_-
  const CVec d_lower = apply_ddx_plus_vp(spinor.lower(), pots.p, g);
  const CVec d_upper = apply_ddx_minus_vp(spinor.upper(), pots.p, g);
  const Complex mi(0.0, -1.0);
  Real sum = 0;
  for (Index i = 1; i < n - 1; ++i) {
    const Real x = g.node(i);
    const auto [vs, vd] = sigma_delta(pots, x);
    const Complex r1 = mi * d_lower[i] + (m + vs - E) * spinor.upper()[i];
    const Complex r2 = mi * d_upper[i] + (-m + vd - E) * spinor.lower()[i];
    sum += std::norm(r1) + std::norm(r2);
  }
  return std::sqrt(sum * h);
}

CVec recover_component(const CVec& known, RecoverFrom which, Real E,
                       const LorentzPotentials& pots, const PhysicalParams& params,
                       const Grid& grid) {
  const Real m = params.m;
  const Complex mi(0.0, -1.0);
  if (which == RecoverFrom::upper) {
    if (std::abs(E + m) < 1e-12) {
      throw ThresholdEnergyError(
          "E = -m: the first-order relation for psi_- degenerates; "
          "use the isolated-solution construction");
    }
    return (mi / (E + m)) * apply_ddx_minus_vp(known, pots.p, grid);
  }
  if (std::abs(E - m) < 1e-12) {
    throw ThresholdEnergyError(
        "E = +m: the first-order relation for psi_+ degenerates; "
        "use the isolated-solution construction");
  }
  return (mi / (E - m)) * apply_ddx_plus_vp(known, pots.p, grid);
}

}  // namespace dirac1d
