// Copyright 2026 The dirac1d Authors
// SPDX-License-Identifier: Apache-2.0

#include <dirac1d/isolated.hpp>

#include <dirac1d/errors.hpp>
#include <dirac1d/quadrature.hpp>

#include <cmath>
#include <cstdio>
#include <functional>
#include <string>

namespace dirac1d {

const char* threshold_name(ThresholdSign t) {
  return t == ThresholdSign::E_minus_m ? "E=-m" : "E=+m";
}

Real superpotential_v(const PotentialTerm& p, Real x, Real x0) {
  if (!(x > 0) || !(x0 > 0)) throw DomainError("superpotential requires x, x0 > 0");
  return p.antiderivative(x) - p.antiderivative(x0);
}

namespace {

constexpr Real kExpOverflow = 700.0;  // exp argument beyond which doubles overflow

void check_confining(const TermComponents& tc) {
  if (!(tc.linear > 0)) {
    throw ConfigError("isolated-solution machinery requires a confining slope b > 0");
  }
}

// Upper cutoff X where e^{-2A(y)} has decayed below ~1e-300 relative to the
// region of interest; b > 0 guarantees existence.
Real minus_tail_cutoff(const PotentialTerm& p, Real x0) {
  const TermComponents tc = components(p);
  check_confining(tc);
  Real x = std::max(x0, 1.0 / std::sqrt(tc.linear));
  for (int it = 0; it < 60; ++it) {
    // solve 2A(x) ~ 690: b x^2 - 2a log x + 2c x = 690
    const Real target = 690.0 + 2.0 * tc.coulomb * std::log(std::max(x, Real(1e-300)));
    const Real disc = std::max(target, Real(1.0));
    Real xn;
    if (tc.constant != 0.0) {
      xn = (-tc.constant + std::sqrt(tc.constant * tc.constant + tc.linear * disc)) / tc.linear;
    } else {
      xn = std::sqrt(disc / tc.linear);
    }
    if (std::abs(xn - x) < 1e-9 * std::max(Real(1), x)) {
      x = xn;
      break;
    }
    x = xn;
  }
  return std::max(x, x0 * 1.0000001);
}

}  // namespace

Real quadrature_I(Branch sign, Real m, const PotentialTerm& p, Real x, Real x0, Real rel_tol) {
  if (!(x > 0) || !(x0 > 0)) throw DomainError("quadrature_I requires x, x0 > 0");
  if (m == 0.0) return 0.0;
  const Real sgn = branch_sign(sign);
  // overflow pre-check at the endpoints (monotone pieces make these the
  // candidates for the largest integrand values together with interior
  // extrema of A, which for the closed term family lie between)
  const Real lo = std::min(x, x0), hi = std::max(x, x0);
  for (Real probe : {lo, hi, 0.5 * (lo + hi)}) {
    if (2.0 * sgn * p.antiderivative(probe) > kExpOverflow) {
      throw DivergentIntegralError(std::string("integrand e^{") + (sgn > 0 ? "+" : "-") +
                                   "2v} overflows near x=" + std::to_string(probe) +
                                   "; the integral diverges at this end");
    }
  }
  auto f = [&](Real y) { return std::exp(2.0 * sgn * p.antiderivative(y)); };
  const QuadratureResult r = integrate(f, x0, x, rel_tol);
  return sgn * 2.0 * m * r.value;
}

Real quadrature_I_limit(Real m, const PotentialTerm& p, Real x0, Real rel_tol) {
  if (!(x0 > 0)) throw DomainError("quadrature_I_limit requires x0 > 0");
  if (m == 0.0) return 0.0;
  const Real cutoff = minus_tail_cutoff(p, x0);
  auto f = [&](Real y) { return std::exp(-2.0 * p.antiderivative(y)); };
  const QuadratureResult r = integrate(f, x0, cutoff, rel_tol);
  return -2.0 * m * r.value;
}

bool origin_integrable(const std::function<Real(Real)>& f, Real x_hi) {
  Real total = 0.0;
  Real prev = -1.0;
  int flat_or_growing = 0;
  Real hi = x_hi;
  for (int k = 0; k < 60; ++k) {
    const Real lo = 0.5 * hi;
    Real w;
    try {
      w = integrate(f, lo, hi, 1e-8, 1e-305).value;
    } catch (const Error&) {
      return false;  // overflow in a window: divergent
    }
    if (!std::isfinite(w) || w > 1e60) return false;
    total += w;
    if (prev >= 0.0) {
      if (w >= 0.98 * prev) {
        if (++flat_or_growing >= 3) return false;  // windows not decaying
      } else {
        flat_or_growing = 0;
      }
    }
    if (total > 0 && w < 1e-13 * total) return true;  // tail converged
    prev = w;
    hi = lo;
  }
  // windows still decaying after 60 halvings: geometric tail, integrable
  return flat_or_growing == 0;
}

namespace {

struct IsolatedParts {
  Vec v;        // v(x_i) relative to x0
  CVec upper;
  CVec lower;
};

// Right-tail integrals T(x_i) = integral_{x_i}^{cutoff} e^{-2v} dy, cumulative
// per grid cell plus the off-grid tail.
Vec right_tail_integrals(const PotentialTerm& p, const Grid& grid, Real rel_tol) {
  const Index n = grid.size();
  auto f = [&](Real y) { return std::exp(-2.0 * p.antiderivative(y)); };
  Vec tail(n);
  const Real cutoff = minus_tail_cutoff(p, grid.x_max());
  Real acc = cutoff > grid.x_max() ? integrate(f, grid.x_max(), cutoff, rel_tol).value : 0.0;
  tail[n - 1] = acc;
  for (Index i = n - 2; i >= 0; --i) {
    acc += detail::gk15(f, grid.node(i), grid.node(i + 1)).value;
    tail[i] = acc;
  }
  return tail;
}

}  // namespace

Spinor build_isolated(ThresholdSign which, const PhysicalParams& params, const PotentialTerm& p,
                      Complex N_plus, Complex N_minus, const Grid& grid,
                      std::optional<Real> x0_opt) {
  const TermComponents tc = components(p);
  check_confining(tc);
  if (N_plus == Complex(0) && N_minus == Complex(0)) {
    throw DomainError("at least one of the constants N_+, N_- must be nonzero");
  }
  const Real x0 = x0_opt.value_or(1.0 / std::sqrt(tc.linear));
  const Real a = tc.coulomb;
  const Real m = params.m;
  const Vec x = grid.nodes();
  const Real A0 = p.antiderivative(x0);
  Vec v(x.size());
  for (Index i = 0; i < x.size(); ++i) v[i] = p.antiderivative(x[i]) - A0;

  const Complex iunit(0.0, 1.0);
  CVec upper(x.size()), lower(x.size());

  if (which == ThresholdSign::E_minus_m) {
    // psi_+ = N_+ e^{+v}; for b > 0, e^{+v} ~ e^{b x^2 / 2} at infinity
    if (N_plus != Complex(0)) {
      throw NotNormalizableError(
          "E=-m: psi_+ = N_+ e^{+v} grows like e^{b x^2/2} at large x for any N_+ != 0");
    }
    if (!(a > -0.5)) {
      // |psi_-|^2 ~ x^{2a} at the origin
      throw NotNormalizableError(
          "E=-m: |psi_-|^2 = |N_-|^2 x^{2a} is not integrable at the origin (a <= -1/2)");
    }
    for (Index i = 0; i < x.size(); ++i) {
      upper[i] = Complex(0.0);
      lower[i] = N_minus * std::exp(-v[i]);
    }
    return normalize(Spinor(grid, upper, lower, -m));
  }

  // E = +m: psi_- = N_- e^{-v}; psi_+ = [N_+ - i N_- I_-(x)] e^{+v}
  if (N_minus == Complex(0)) {
    throw NotNormalizableError(
        "E=+m: with N_- = 0, psi_+ = N_+ e^{+v} grows like e^{b x^2/2} at large x");
  }
  if (!(a > -0.5)) {
    throw NotNormalizableError(
        "E=+m: |psi_-|^2 = |N_-|^2 x^{2a} is not integrable at the origin (a <= -1/2)");
  }
  if (!(a < 0.5)) {
    throw NotNormalizableError(
        "E=+m: with the forced N_+ = i N_- I_-(inf), psi_+ ~ x^{-a} at the origin is not "
        "square-integrable (a >= 1/2)");
  }
  // bracket in closed cumulative form:
  //   N_+ - i N_- I_-(x) = i N_- [I_-(inf) - I_-(x)] = i N_- (-2m) T(x) e^{+2A0-free...}
  // with T(x) the right-tail integral of e^{-2A}; the x0 reference cancels in
  // the product with e^{+v}.
  const Vec tail = right_tail_integrals(p, grid, 1e-12);
  for (Index i = 0; i < x.size(); ++i) {
    lower[i] = N_minus * std::exp(-v[i]);
    // e^{+v(x_i)} * e^{+2 A0} * tail -> exp(v_i + 2 A0) with A(x_i) = v_i + A0
    const Real gauge = std::exp(v[i] + 2.0 * A0);
    if (!std::isfinite(gauge)) {
      throw NotNormalizableError("E=+m: e^{+v} overflows inside the grid; component diverges");
    }
    upper[i] = iunit * N_minus * (-2.0 * m) * tail[i] * gauge;
  }
  return normalize(Spinor(grid, upper, lower, +m));
}

namespace {

std::string fmt(Real v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%g", v);
  return buf;
}

}  // namespace

IsolatedClassification classify_isolated(Real a, Real b, Real m) {
  if (!(b > 0)) throw ConfigError("classify_isolated requires b > 0");
  const PotentialTerm p = PotentialTerm::Cornell(a, b);
  IsolatedClassification out;
  out.a = a;
  out.b = b;
  out.m = m;

  const Real x_probe = 1.0 / std::sqrt(b);

  // E = -m: psi_- = e^{-v} (N_+ forced to zero by the growth of e^{+v}).
  // Decays at infinity; the question is integrability of x^{2a} at the origin.
  auto dens_minus = [&](Real y) { return std::exp(-2.0 * p.antiderivative(y)); };
  out.e_minus_m_exists = origin_integrable(dens_minus, x_probe);
  out.reason_minus =
      out.e_minus_m_exists
          ? "psi_- = N_- e^{-v} is square-integrable: truncated norms of x^{2a} e^{-b x^2} "
            "converge at the origin (a=" + fmt(a) + ")"
          : "no choice of constants works: e^{+v} diverges at infinity and |e^{-v}|^2 = "
            "x^{2a} e^{-b x^2} is not integrable at the origin (a=" + fmt(a) + " <= -1/2)";

  // E = +m: psi_- as above plus the bracket component
  //   psi_+ = i N_- [I_-(inf) - I_-(x)] e^{+v},
  // whose origin behavior is ~ x^{-a}.
  if (!out.e_minus_m_exists) {
    out.e_plus_m_exists = false;
    out.reason_plus = "psi_- = N_- e^{-v} already fails square-integrability at the origin";
    return out;
  }
  if (m == 0.0) {
    // massless edge: I_pm vanish identically; E = -m and E = +m coincide
    out.e_plus_m_exists = out.e_minus_m_exists;
    out.reason_plus = "m = 0: thresholds coincide and the bracket term vanishes (I_- = 0)";
    return out;
  }
  const Real cutoff = minus_tail_cutoff(p, x_probe);
  auto dens_plus = [&](Real y) {
    const Real tail = integrate(dens_minus, y, cutoff, 1e-8, 1e-305).value;
    const Real gauge = std::exp(2.0 * p.antiderivative(y));
    return tail * tail * gauge * 4.0 * m * m;
  };
  out.e_plus_m_exists = origin_integrable(dens_plus, x_probe);
  out.reason_plus =
      out.e_plus_m_exists
          ? "with N_+ = i N_- I_-(inf), psi_+ decays at infinity and its truncated norms "
            "converge at the origin (|psi_+|^2 ~ x^{-2a}, a=" + fmt(a) + " < 1/2)"
          : "with the forced N_+ = i N_- I_-(inf), |psi_+|^2 ~ x^{-2a} fails the truncated-norm "
            "test at the origin (a=" + fmt(a) + " >= 1/2); any other N_+ diverges at infinity";
  return out;
}

}  // namespace dirac1d
