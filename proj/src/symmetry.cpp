// Copyright 2026 The dirac1d Authors
// SPDX-License-Identifier: Apache-2.0

#include <dirac1d/symmetry.hpp>

#include <dirac1d/errors.hpp>
#include <dirac1d/sl_solver.hpp>

#include <cmath>
#include <cstdio>
#include <sstream>

namespace dirac1d {

namespace {

const char* kPseudoscalarContamination = "pseudoscalar contamination";

SymmetryStatus status_for(const TermComponents& combo, bool p_zero, const char* combo_name) {
  if (!p_zero) return {false, kPseudoscalarContamination};
  if (!combo.is_constant()) {
    return {false, std::string(combo_name) + " is not a constant"};
  }
  return {true, ""};
}

}  // namespace

SymmetryVerdict classify(const LorentzPotentials& pots) {
  const TermComponents cv = components(pots.v);
  const TermComponents cs = components(pots.s);
  const bool p_zero = pots.p.is_zero();
  SymmetryVerdict verdict;
  verdict.spin = status_for(cv - cs, p_zero, "V_Delta = V_v - V_s");
  verdict.pseudospin = status_for(cv + cs, p_zero, "V_Sigma = V_v + V_s");
  verdict.pure_pseudoscalar = cv.is_zero() && cs.is_zero() && !p_zero;
  return verdict;
}

const char* symmetry_limit_name(SymmetryLimit limit) {
  return limit == SymmetryLimit::spin_limit ? "spin_limit" : "pseudospin_limit";
}

LorentzPotentials symmetry_limit_configuration(SymmetryLimit /*limit*/, Real a, Real b) {
  // Both "limits" set V_v = V_s = 0 and keep the pseudoscalar Cornell
  // coupling, so they are the same configuration by construction.
  return LorentzPotentials{PotentialTerm::Zero(), PotentialTerm::Zero(),
                           PotentialTerm::Cornell(a, b)};
}

RouteEquivalenceReport route_equivalence_report(Real a, Real b, Real m, Index k) {
  if (!(b > 0)) throw ConfigError("route comparison requires b > 0");
  if (k < 1) throw ConfigError("levels must be >= 1");
  const LorentzPotentials pots = symmetry_limit_configuration(SymmetryLimit::spin_limit, a, b);
  const PhysicalParams params{m};

  // one extra lower-route level so the threshold entry, when present, does
  // not shorten the comparison
  SpectrumReport upper = solve_via_route(Route::upper, pots, params, k);
  SpectrumReport lower = solve_via_route(Route::lower, pots, params, k + 1);

  RouteEquivalenceReport out;
  out.a = a;
  out.b = b;
  out.m = m;
  out.extension_dependent = upper.extension_dependent || lower.extension_dependent;

  std::vector<const SpectrumEntry*> lower_bound_states;
  for (const SpectrumEntry& e : lower.entries) {
    if (e.threshold) {
      out.lower_has_threshold = true;
      continue;
    }
    lower_bound_states.push_back(&e);
  }
  const Index rows = std::min<Index>(k, static_cast<Index>(lower_bound_states.size()));
  for (Index i = 0; i < rows; ++i) {
    const SpectrumEntry& eu = upper.entries[i];
    const SpectrumEntry& el = *lower_bound_states[i];
    RouteComparisonRow row;
    row.n = static_cast<int>(i);
    row.eps_upper = eu.epsilon;
    row.eps_lower = el.epsilon;
    row.E_upper = eu.E_plus;
    row.E_lower = el.E_plus;
    row.abs_dE = std::abs(eu.E_plus - el.E_plus);
    out.max_abs_dE = std::max(out.max_abs_dE, row.abs_dE);
    out.rows.push_back(row);
  }
  return out;
}

std::string to_text(const SymmetryVerdict& verdict) {
  std::ostringstream os;
  os << "spin symmetry:       "
     << (verdict.spin.symmetric ? "realized" : "broken (" + verdict.spin.reason + ")") << "\n";
  os << "pseudospin symmetry: "
     << (verdict.pseudospin.symmetric ? "realized"
                                      : "broken (" + verdict.pseudospin.reason + ")")
     << "\n";
  os << "pure pseudoscalar:   " << (verdict.pure_pseudoscalar ? "yes" : "no") << "\n";
  return os.str();
}

std::string to_text(const RouteEquivalenceReport& report) {
  std::ostringstream os;
  char buf[256];
  std::snprintf(buf, sizeof(buf), "route equivalence for a=%g, b=%g, m=%g\n", report.a, report.b,
                report.m);
  os << buf;
  os << "  n    E (upper route)        E (lower route)        |dE|\n";
  for (const RouteComparisonRow& row : report.rows) {
    std::snprintf(buf, sizeof(buf), "  %-4d %-22.16g %-22.16g %.3e\n", row.n, row.E_upper,
                  row.E_lower, row.abs_dE);
    os << buf;
  }
  std::snprintf(buf, sizeof(buf), "max |dE| = %.3e\n", report.max_abs_dE);
  os << buf;
  os << "lower-route threshold entry (eps = 0, E = -m candidate): "
     << (report.lower_has_threshold ? "present, handled by the isolated construction" : "absent")
     << "\n";
  return os.str();
}

}  // namespace dirac1d
