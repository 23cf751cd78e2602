// Copyright 2026 The dirac1d Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <dirac1d/errors.hpp>
#include <dirac1d/types.hpp>

#include <utility>

namespace dirac1d {

enum class TermKind { zero, constant, coulomb, linear, cornell };

const char* term_kind_name(TermKind kind);

/// One symbolic potential term from the closed enumeration
///   Zero, Constant(c), Coulomb(a) = -a/x, Linear(b) = b*x,
///   Cornell(a, b) = -a/x + b*x.
/// Keeping the enumeration closed makes first derivatives and antiderivatives
/// exact, so the effective potentials U_pm = Vp^2 pm Vp' carry no
/// differentiation noise.
class PotentialTerm {
 public:
  static PotentialTerm Zero() { return PotentialTerm(TermKind::zero, 0, 0, 0); }
  static PotentialTerm Constant(Real c) { return PotentialTerm(TermKind::constant, 0, 0, c); }
  static PotentialTerm Coulomb(Real strength) {
    return PotentialTerm(TermKind::coulomb, strength, 0, 0);
  }
  static PotentialTerm Linear(Real slope) { return PotentialTerm(TermKind::linear, 0, slope, 0); }
  static PotentialTerm Cornell(Real a, Real b) { return PotentialTerm(TermKind::cornell, a, b, 0); }

  TermKind kind() const { return kind_; }
  Real coulomb_strength() const { return a_; }
  Real linear_slope() const { return b_; }
  Real constant_value() const { return c_; }

  /// True when the term is structurally the zero function.
  bool is_zero() const;
  /// True when the term is structurally constant (Zero or Constant).
  bool is_constant() const;
  /// A Coulomb or Cornell term restricts evaluation to x > 0.
  bool requires_positive_x() const {
    return kind_ == TermKind::coulomb || kind_ == TermKind::cornell;
  }

  /// V(x). Throws DomainError for x <= 0 when a singular term is present.
  Real value(Real x) const;
  Vec value(const Vec& x) const;

  /// dV/dx, exact.
  Real derivative(Real x) const;
  Vec derivative(const Vec& x) const;

  /// Canonical antiderivative A with A' = V and zero integration constant
  /// (the Coulomb part contributes -a*log(x)).
  Real antiderivative(Real x) const;
  Vec antiderivative(const Vec& x) const;

  bool operator==(const PotentialTerm& other) const = default;

 private:
  PotentialTerm(TermKind kind, Real a, Real b, Real c) : kind_(kind), a_(a), b_(b), c_(c) {}

  void check_domain(Real x) const;

  TermKind kind_;
  Real a_;  // Coulomb strength, V += -a/x
  Real b_;  // linear slope,     V += b*x
  Real c_;  // constant offset
};

inline Real eval(const PotentialTerm& term, Real x) { return term.value(x); }
inline Vec eval(const PotentialTerm& term, const Vec& x) { return term.value(x); }

/// Decomposition of a term into its -a/x, b*x and constant parts. Makes the
/// (v, s) combination algebra exact and purely structural.
struct TermComponents {
  Real coulomb = 0;   // coefficient of -1/x
  Real linear = 0;    // coefficient of x
  Real constant = 0;  // constant offset

  bool is_constant() const { return coulomb == 0 && linear == 0; }
  bool is_zero() const { return is_constant() && constant == 0; }

  TermComponents operator+(const TermComponents& o) const {
    return {coulomb + o.coulomb, linear + o.linear, constant + o.constant};
  }
  TermComponents operator-(const TermComponents& o) const {
    return {coulomb - o.coulomb, linear - o.linear, constant - o.constant};
  }
};

TermComponents components(const PotentialTerm& term);

/// Cornell parameters (a, b) of V_p = -a/x + b*x.
struct CornellParams {
  Real a = 0;
  Real b = 0;
};

/// Maps the legacy parametrisation m*omega*x + g/x (natural units) onto
/// Cornell form: a = -g, b = m*omega.
CornellParams from_legacy_params(Real omega, Real g, Real m);

/// The three Lorentz channels: time component of the two-vector (v),
/// scalar (s) and pseudoscalar (p).
struct LorentzPotentials {
  PotentialTerm v = PotentialTerm::Zero();
  PotentialTerm s = PotentialTerm::Zero();
  PotentialTerm p = PotentialTerm::Zero();

  bool operator==(const LorentzPotentials&) const = default;
};

/// (V_Sigma, V_Delta)(x) = (V_v + V_s, V_v - V_s)(x).
std::pair<Real, Real> sigma_delta(const LorentzPotentials& pots, Real x);

struct PhysicalParams {
  Real m = 1.0;  // rest mass, natural units
};

void validate(const PhysicalParams& params);

}  // namespace dirac1d
