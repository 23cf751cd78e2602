// Copyright 2026 The dirac1d Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <dirac1d/isolated.hpp>
#include <dirac1d/potential.hpp>
#include <dirac1d/sl_problem.hpp>
#include <dirac1d/spinor.hpp>
#include <dirac1d/symmetry.hpp>

#include <json.hpp>

#include <filesystem>
#include <optional>
#include <string>

namespace dirac1d {

using Json = nlohmann::json;

/// Shortest text that round-trips the double exactly (17 significant digits).
std::string format_real(Real v);

// ---- CSV (comma separated, '.' decimal, 17 significant digits) ----

/// Header: n,epsilon,E_plus,E_minus,provenance,est_error
std::string spectrum_csv(const SpectrumReport& report);

/// Header: x,re_upper,im_upper,re_lower,im_lower
std::string spinor_csv(const Spinor& spinor);

/// Header: n,eps_upper,eps_lower,E_upper,E_lower,abs_dE
std::string route_comparison_csv(const RouteEquivalenceReport& report);

// ---- JSON ----

Json to_json(const PotentialTerm& term);
Json to_json(const LorentzPotentials& pots);
Json to_json(const SpectrumReport& report);
Json to_json(const SymmetryVerdict& verdict);
Json to_json(const RouteEquivalenceReport& report);
Json to_json(const IsolatedClassification& c);

PotentialTerm term_from_json(const Json& j);

// ---- run configuration ----

/// One run of the CLI. Flags override file fields which override defaults.
struct RunConfig {
  LorentzPotentials pots{PotentialTerm::Zero(), PotentialTerm::Zero(), PotentialTerm::Zero()};
  Real m = 1.0;
  Index levels = 4;
  std::optional<Real> x_min;
  std::optional<Real> x_max;
  std::optional<Index> points;
  Real tol = 1e-4;  // relative coarse/fine agreement required of the solver
  std::string out_dir = ".";
};

RunConfig config_from_json(const Json& j);
Json to_json(const RunConfig& config);

/// Structural checks shared by all subcommands (m >= 0, levels >= 1, grid
/// overrides consistent, n >= 16). Throws ConfigError.
void validate(const RunConfig& config);

/// Additional requirement for spectral subcommands: a pure pseudoscalar
/// Cornell coupling with b > 0.
void validate_cornell(const RunConfig& config);

/// Grid from the config overrides, or the solver default for (a, b, levels).
Grid config_grid(const RunConfig& config);

/// Writes content to path, creating parent directories.
void write_file(const std::filesystem::path& path, const std::string& content);

}  // namespace dirac1d
