// Copyright 2026 The dirac1d Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <dirac1d/grid.hpp>
#include <dirac1d/potential.hpp>
#include <dirac1d/spinor.hpp>
#include <dirac1d/types.hpp>

namespace dirac1d {

/// Effective Sturm-Liouville potential U_pm(x) = Vp(x)^2 pm Vp'(x) with the
/// exact symbolic derivative. For Cornell(a, b):
///   U_pm(x) = (a^2 pm a)/x^2 + b^2 x^2 - 2ab pm b.
Real effective_sl_potential(const PotentialTerm& p, Branch branch, Real x);
Vec effective_sl_potential(const PotentialTerm& p, Branch branch, const Vec& x);

/// First-order combinations entering the Dirac system,
///   (d/dx + Vp) f  and  (d/dx - Vp) f,
/// discretized by centered differences of the gauge-transformed samples
/// e^{mp v} f with v the superpotential (the antiderivative of Vp):
///   (d/dx + Vp) f = e^{-v} d/dx (e^{+v} f),
///   (d/dx - Vp) f = e^{+v} d/dx (e^{-v} f).
/// Only exponentials of v-differences between neighbor nodes appear, so the
/// evaluation never overflows. Interior nodes use the 3-point centered
/// stencil; the ends use one-sided 3-point stencils of the same order.
CVec apply_ddx_plus_vp(const CVec& f, const PotentialTerm& p, const Grid& grid);
CVec apply_ddx_minus_vp(const CVec& f, const PotentialTerm& p, const Grid& grid);

/// Grid L2 norm of (H - E) psi for the Dirac operator
///   H = sigma_1 p + sigma_3 m + (I+sigma_3)/2 V_Sigma + (I-sigma_3)/2 V_Delta
///       + sigma_2 Vp,
/// with p = -i d/dx discretized as above. The norm is taken over interior
/// nodes (where the centered stencil exists). A true eigenspinor gives a
/// residual that vanishes as O(h^2).
///
/// Requires a normalized spinor and a grid that resolves the potentials
/// (h * max|V| < 0.5 over the grid).
Real dirac_residual(const Spinor& spinor, const LorentzPotentials& pots,
                    const PhysicalParams& params);

enum class RecoverFrom { upper, lower };

/// Recovers the partner component from the first-order Dirac relation
///   psi_- = -i (psi_+' - Vp psi_+) / (E + m)   [from upper, E != -m]
///   psi_+ = -i (psi_-' + Vp psi_-) / (E - m)   [from lower, E != +m]
/// on the same grid. Throws ThresholdEnergyError when |E pm m| < 1e-12: at
/// the threshold energies the relation degenerates and the isolated
/// construction applies instead.
CVec recover_component(const CVec& known, RecoverFrom which, Real E,
                       const LorentzPotentials& pots, const PhysicalParams& params,
                       const Grid& grid);

}  // namespace dirac1d
