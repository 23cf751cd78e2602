// Copyright 2026 The dirac1d Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <dirac1d/potential.hpp>
#include <dirac1d/sl_problem.hpp>
#include <dirac1d/types.hpp>

#include <string>
#include <vector>

namespace dirac1d {

/// Verdict on one SU(2)-style symmetry: realized or broken, with the reason.
struct SymmetryStatus {
  bool symmetric = false;
  std::string reason;  // empty when symmetric

  bool operator==(const SymmetryStatus&) const = default;
};

/// Spin / pseudospin classification of a declared potential configuration.
/// Decided purely from the symbolic term structure:
///   spin symmetric        iff V_Delta = V_v - V_s is constant and V_p = 0
///   pseudospin symmetric  iff V_Sigma = V_v + V_s is constant and V_p = 0
/// Any nonzero pseudoscalar coupling breaks both ("pseudoscalar
/// contamination").
struct SymmetryVerdict {
  SymmetryStatus spin;
  SymmetryStatus pseudospin;
  bool pure_pseudoscalar = false;  // V_v = V_s = 0 and V_p != 0

  bool operator==(const SymmetryVerdict&) const = default;
};

SymmetryVerdict classify(const LorentzPotentials& pots);

/// Configurations obtained by imposing the "spin limit" (Sigma = 0 for the
/// upper-component equation) or the "pseudospin limit" (Delta = 0 for the
/// lower one) on a system whose only coupling is pseudoscalar. Both return
/// the same record {v: Zero, s: Zero, p: Cornell(a, b)}: with V_v = V_s = 0
/// the two limits are one and the same pure pseudoscalar problem.
enum class SymmetryLimit { spin_limit, pseudospin_limit };

const char* symmetry_limit_name(SymmetryLimit limit);

LorentzPotentials symmetry_limit_configuration(SymmetryLimit limit, Real a, Real b);

struct RouteComparisonRow {
  int n = 0;           // index among |E| > m levels
  Real eps_upper = 0;  // from the upper-component (U_+) route
  Real eps_lower = 0;  // matching lower-route level (threshold skipped)
  Real E_upper = 0;    // +sqrt(m^2 + eps), upper route
  Real E_lower = 0;
  Real abs_dE = 0;
};

struct RouteEquivalenceReport {
  Real a = 0, b = 0, m = 0;
  std::vector<RouteComparisonRow> rows;
  Real max_abs_dE = 0;
  bool lower_has_threshold = false;  // eps = 0 entry present on the lower route
  bool extension_dependent = false;
};

/// Solves via both component routes and compares the |E| > m spectra; the
/// only allowed asymmetry is the eps = 0 threshold entry of the lower route
/// (handed to the isolated construction).
RouteEquivalenceReport route_equivalence_report(Real a, Real b, Real m, Index k);

/// Human-readable rendering of a verdict.
std::string to_text(const SymmetryVerdict& verdict);
std::string to_text(const RouteEquivalenceReport& report);

}  // namespace dirac1d
