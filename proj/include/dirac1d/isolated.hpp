// Copyright 2026 The dirac1d Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <dirac1d/grid.hpp>
#include <dirac1d/potential.hpp>
#include <dirac1d/spinor.hpp>
#include <dirac1d/types.hpp>

#include <optional>
#include <string>

namespace dirac1d {

/// v(x) - v(x0) for the superpotential v = integral of Vp. Closed form for
/// the symbolic term enumeration; for Cornell(a, b):
///   v(x) - v(x0) = -a log(x/x0) + b (x^2 - x0^2) / 2.
Real superpotential_v(const PotentialTerm& p, Real x, Real x0);

/// I_pm(x) = pm 2m * integral_{x0}^{x} e^{pm 2 v(y)} dy with the canonical
/// antiderivative v (zero integration constant); x0 enters only as the lower
/// limit, so changing it shifts I by an additive constant that the
/// normalization constants absorb. Adaptive quadrature at rel_tol; throws
/// DivergentIntegralError when the integrand overflows before x is reached.
Real quadrature_I(Branch sign, Real m, const PotentialTerm& p, Real x, Real x0,
                  Real rel_tol = 1e-10);

/// lim_{x->inf} I_-(x) = -2m integral_{x0}^{inf} e^{-2v}; finite for a
/// confining term (b > 0). The tail cutoff is chosen where the integrand
/// drops below 1e-300.
Real quadrature_I_limit(Real m, const PotentialTerm& p, Real x0, Real rel_tol = 1e-10);

/// Threshold energies at which the Sturm-Liouville reduction degenerates.
enum class ThresholdSign { E_minus_m, E_plus_m };

const char* threshold_name(ThresholdSign t);

struct IsolatedCandidate {
  ThresholdSign which = ThresholdSign::E_minus_m;
  Complex N_plus = 0;
  Complex N_minus = 1;
  Real x0 = 1.0;  // reference point (lower limit of the I quadrature)
  bool normalizable = false;
  std::string reason;
};

/// Assembles the threshold solution
///   E = -m:  psi_+ = N_+ e^{+v},  psi_- = [N_- - i N_+ I_+(x)] e^{-v}
///   E = +m:  psi_- = N_- e^{-v},  psi_+ = [N_+ - i N_- I_-(x)] e^{+v}
/// on the grid and normalizes it. For E = +m the free constant N_+ is fixed
/// to i N_- I_-(inf), the unique choice that can cancel the divergence of
/// e^{+v} at infinity. Throws NotNormalizableError with a diagnostic naming
/// the divergent component and end. x0 defaults to 1/sqrt(b).
Spinor build_isolated(ThresholdSign which, const PhysicalParams& params, const PotentialTerm& p,
                      Complex N_plus, Complex N_minus, const Grid& grid,
                      std::optional<Real> x0 = std::nullopt);

struct IsolatedClassification {
  Real a = 0;
  Real b = 0;
  Real m = 0;
  bool e_minus_m_exists = false;
  bool e_plus_m_exists = false;
  std::string reason_minus;
  std::string reason_plus;
};

/// Decides the existence of normalizable threshold solutions for the Cornell
/// term by the truncated-norm Cauchy test over dyadic windows (no exponent
/// arithmetic enters the decision).
IsolatedClassification classify_isolated(Real a, Real b, Real m);

/// Dyadic-window convergence test for integral_0^{x_hi} f dx with f >= 0:
/// windows [x_hi 2^{-k-1}, x_hi 2^{-k}] must decay geometrically. Exposed for
/// the oracle tests.
bool origin_integrable(const std::function<Real(Real)>& f, Real x_hi);

}  // namespace dirac1d
