// Copyright 2026 The dirac1d Authors
// SPDX-License-Identifier: Apache-2.0

#include <dirac1d/potential.hpp>

#include <cmath>
#include <string>

namespace dirac1d {

const char* term_kind_name(TermKind kind) {
  switch (kind) {
    case TermKind::zero: return "zero";
    case TermKind::constant: return "constant";
    case TermKind::coulomb: return "coulomb";
    case TermKind::linear: return "linear";
    case TermKind::cornell: return "cornell";
  }
  return "unknown";
}

bool PotentialTerm::is_zero() const { return components(*this).is_zero(); }

bool PotentialTerm::is_constant() const { return components(*this).is_constant(); }

void PotentialTerm::check_domain(Real x) const {
  if (requires_positive_x() && x <= 0.0) {
    throw DomainError(std::string(term_kind_name(kind_)) +
                      " term is singular at x=0; evaluation requires x > 0, got x=" +
                      std::to_string(x));
  }
}

Real PotentialTerm::value(Real x) const {
  check_domain(x);
  switch (kind_) {
    case TermKind::zero: return 0.0;
    case TermKind::constant: return c_;
    case TermKind::coulomb: return -a_ / x;
    case TermKind::linear: return b_ * x;
    case TermKind::cornell: return -a_ / x + b_ * x;
  }
  return 0.0;
}

Real PotentialTerm::derivative(Real x) const {
  check_domain(x);
  switch (kind_) {
    case TermKind::zero:
    case TermKind::constant: return 0.0;
    case TermKind::coulomb: return a_ / (x * x);
    case TermKind::linear: return b_;
    case TermKind::cornell: return a_ / (x * x) + b_;
  }
  return 0.0;
}

Real PotentialTerm::antiderivative(Real x) const {
  check_domain(x);
  switch (kind_) {
    case TermKind::zero: return 0.0;
    case TermKind::constant: return c_ * x;
    case TermKind::coulomb: return -a_ * std::log(x);
    case TermKind::linear: return 0.5 * b_ * x * x;
    case TermKind::cornell: return -a_ * std::log(x) + 0.5 * b_ * x * x;
  }
  return 0.0;
}

Vec PotentialTerm::value(const Vec& x) const {
  Vec out(x.size());
  for (Index i = 0; i < x.size(); ++i) out[i] = value(x[i]);
  return out;
}

Vec PotentialTerm::derivative(const Vec& x) const {
  Vec out(x.size());
  for (Index i = 0; i < x.size(); ++i) out[i] = derivative(x[i]);
  return out;
}

Vec PotentialTerm::antiderivative(const Vec& x) const {
  Vec out(x.size());
  for (Index i = 0; i < x.size(); ++i) out[i] = antiderivative(x[i]);
  return out;
}

TermComponents components(const PotentialTerm& term) {
  switch (term.kind()) {
    case TermKind::zero: return {0, 0, 0};
    case TermKind::constant: return {0, 0, term.constant_value()};
    case TermKind::coulomb: return {term.coulomb_strength(), 0, 0};
    case TermKind::linear: return {0, term.linear_slope(), 0};
    case TermKind::cornell: return {term.coulomb_strength(), term.linear_slope(), 0};
  }
  return {0, 0, 0};
}

CornellParams from_legacy_params(Real omega, Real g, Real m) { return {-g, m * omega}; }

std::pair<Real, Real> sigma_delta(const LorentzPotentials& pots, Real x) {
  const Real vv = pots.v.value(x);
  const Real vs = pots.s.value(x);
  return {vv + vs, vv - vs};
}

void validate(const PhysicalParams& params) {
  if (!(params.m >= 0.0)) {
    throw ConfigError("rest mass m must be non-negative, got m=" + std::to_string(params.m));
  }
}

}  // namespace dirac1d
