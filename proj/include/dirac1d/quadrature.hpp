// Copyright 2026 The dirac1d Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <dirac1d/errors.hpp>
#include <dirac1d/types.hpp>

#include <cmath>
#include <string>
#include <vector>

namespace dirac1d {

struct QuadratureResult {
  Real value = 0;
  Real error = 0;
};

namespace detail {

// Gauss 7 / Kronrod 15 on [-1, 1]: abscissa, Gauss weight, Kronrod weight.
inline constexpr Real kGK15[8][3] = {
    {0.000000000000000, 0.417959183673469, 0.209482141084728},
    {0.405845151377397, 0.381830050505119, 0.190350578064785},
    {0.741531185599394, 0.279705391489277, 0.140653259715525},
    {0.949107912342759, 0.129484966168870, 0.063092092629979},
    {0.207784955007898, 0.0, 0.204432940075298},
    {0.586087235467691, 0.0, 0.169004726639267},
    {0.864864423359769, 0.0, 0.104790010322250},
    {0.991455371120813, 0.0, 0.022935322010529},
};

template <class F>
QuadratureResult gk15(const F& f, Real a, Real b) {
  const Real mid = 0.5 * (a + b);
  const Real half = 0.5 * (b - a);
  const Real f0 = f(mid);
  Real gauss = kGK15[0][1] * f0;
  Real kron = kGK15[0][2] * f0;
  for (int i = 1; i < 8; ++i) {
    const Real dx = half * kGK15[i][0];
    const Real fi = f(mid + dx) + f(mid - dx);
    gauss += kGK15[i][1] * fi;
    kron += kGK15[i][2] * fi;
  }
  gauss *= half;
  kron *= half;
  const Real diff = std::abs(gauss - kron);
  // standard Kronrod error model (200 |G-K|)^{3/2}
  const Real err = diff > 0 ? std::pow(200.0 * diff, 1.5) : 0.0;
  return {kron, std::min(err, diff * 200.0)};
}

}  // namespace detail

/// Adaptive Gauss-Kronrod 7-15 on [a, b]. Bisects intervals until the local
/// error estimate meets rel_tol * |integral| or abs_tol. Throws
/// DivergentIntegralError when the integrand overflows, signalling a
/// divergent integrand rather than silently truncating.
template <class F>
QuadratureResult integrate(const F& f, Real a, Real b, Real rel_tol = 1e-10,
                           Real abs_tol = 1e-300, int max_intervals = 4000) {
  if (a == b) return {0.0, 0.0};
  struct Seg {
    Real a, b, value, error;
  };
  auto eval_checked = [&](Real xa, Real xb) {
    QuadratureResult r = detail::gk15(f, xa, xb);
    if (!std::isfinite(r.value)) {
      throw DivergentIntegralError("integrand overflows on [" + std::to_string(xa) + ", " +
                                   std::to_string(xb) + "]");
    }
    return r;
  };
  std::vector<Seg> segs;
  {
    QuadratureResult r = eval_checked(a, b);
    segs.push_back({a, b, r.value, r.error});
  }
  while (true) {
    Real total = 0, err = 0;
    for (const Seg& s : segs) {
      total += s.value;
      err += s.error;
    }
    if (err <= rel_tol * std::abs(total) + abs_tol) return {total, err};
    if (static_cast<int>(segs.size()) >= max_intervals) {
      throw NonConvergedError("adaptive quadrature failed to converge: error " +
                              std::to_string(err) + " after " + std::to_string(segs.size()) +
                              " intervals");
    }
    // split the worst interval
    int worst = 0;
    for (int i = 1; i < static_cast<int>(segs.size()); ++i) {
      if (segs[i].error > segs[worst].error) worst = i;
    }
    Seg s = segs[worst];
    const Real mid = 0.5 * (s.a + s.b);
    QuadratureResult left = eval_checked(s.a, mid);
    QuadratureResult right = eval_checked(mid, s.b);
    segs[worst] = {s.a, mid, left.value, left.error};
    segs.push_back({mid, s.b, right.value, right.error});
  }
}

}  // namespace dirac1d
