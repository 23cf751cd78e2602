// Copyright 2026 The dirac1d Authors
// SPDX-License-Identifier: Apache-2.0
//
// dirac1d: bound states of the 1+1 dimensional Dirac equation with a
// pseudoscalar Cornell coupling.
//
// Subcommands:
//   solve     numeric spectrum via the lower-component route + spinor export
//   oracle    closed-form spectrum (provenance=analytic)
//   isolated  threshold solutions at E = -m / E = +m and their classification
//   audit     spin / pseudospin symmetry verdict for a configuration
//   compare   upper-route vs lower-route equivalence table

#include <dirac1d/cornell_analytic.hpp>
#include <dirac1d/dirac_core.hpp>
#include <dirac1d/errors.hpp>
#include <dirac1d/io.hpp>
#include <dirac1d/isolated.hpp>
#include <dirac1d/sl_solver.hpp>
#include <dirac1d/symmetry.hpp>

#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace {

using namespace dirac1d;
namespace fs = std::filesystem;

constexpr const char* kVersion = "0.1.0";

struct FlagOverrides {
  std::string config_path;
  std::optional<Real> a, b, m, x_min, x_max, tol;
  std::optional<Index> levels, points;
  std::optional<std::string> out;
  std::optional<std::string> limit;  // audit only
};

void add_common_options(CLI::App* cmd, FlagOverrides& flags) {
  cmd->add_option("--config", flags.config_path, "JSON config file");
  cmd->add_option("--a", flags.a, "Cornell Coulomb-like strength a");
  cmd->add_option("--b", flags.b, "Cornell confining slope b (> 0)");
  cmd->add_option("--m", flags.m, "rest mass m (natural units)");
  cmd->add_option("--levels", flags.levels, "number of levels per branch");
  cmd->add_option("--xmin", flags.x_min, "grid left end");
  cmd->add_option("--xmax", flags.x_max, "grid right end");
  cmd->add_option("--points", flags.points, "grid node count (>= 16)");
  cmd->add_option("--out", flags.out, "output directory (default: $DIRAC1D_OUT or .)");
  cmd->add_option("--tol", flags.tol, "relative coarse/fine agreement tolerance");
}

RunConfig build_config(const FlagOverrides& flags) {
  RunConfig config;
  if (!flags.config_path.empty()) {
    std::ifstream in(flags.config_path);
    if (!in) throw ConfigError("cannot open config file " + flags.config_path);
    Json j;
    try {
      in >> j;
    } catch (const std::exception& e) {
      throw ConfigError(std::string("config file is not valid JSON: ") + e.what());
    }
    config = config_from_json(j);
  } else {
    config.out_dir.clear();
  }
  if (flags.a || flags.b) {
    const TermComponents tc = components(config.pots.p);
    config.pots.p = PotentialTerm::Cornell(flags.a.value_or(tc.coulomb),
                                           flags.b.value_or(tc.linear));
  }
  if (flags.m) config.m = *flags.m;
  if (flags.levels) config.levels = *flags.levels;
  if (flags.x_min) config.x_min = flags.x_min;
  if (flags.x_max) config.x_max = flags.x_max;
  if (flags.points) config.points = flags.points;
  if (flags.tol) config.tol = *flags.tol;
  if (flags.out) {
    config.out_dir = *flags.out;
  } else if (config.out_dir.empty()) {
    const char* env = std::getenv("DIRAC1D_OUT");
    config.out_dir = env ? env : ".";
  }
  return config;
}

void write_run_metadata(const RunConfig& config, const std::string& subcommand) {
  Json j;
  j["tool"] = "dirac1d";
  j["version"] = kVersion;
  j["subcommand"] = subcommand;
  j["config"] = to_json(config);
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  char buf[64];
  std::strftime(buf, sizeof(buf), "%FT%TZ", std::gmtime(&now));
  j["timestamp"] = buf;
  write_file(fs::path(config.out_dir) / "run.json", j.dump(2) + "\n");
}

/// Grid for sampling threshold spinors: the solver cutoff 1e-9/sqrt(b) is
/// pointlessly deep for exporting wavefunction tables, so start at
/// 1e-3/sqrt(b) unless the user overrides.
Grid isolated_grid(const RunConfig& config) {
  const TermComponents tc = components(config.pots.p);
  const Grid dflt = default_solver_grid(tc.coulomb, tc.linear, config.levels);
  const Real x_min = config.x_min.value_or(1e-3 / std::sqrt(tc.linear));
  const Real x_max = config.x_max.value_or(dflt.x_max());
  const Index n =
      config.points.value_or(static_cast<Index>(std::llround((x_max - x_min) / dflt.spacing())) + 1);
  return Grid(x_min, x_max, n);
}

int cmd_solve(const RunConfig& config) {
  validate_cornell(config);
  const TermComponents tc = components(config.pots.p);
  const PhysicalParams params{config.m};
  const Grid grid = config_grid(config);

  SLSolution sol = solve_via_route_full(Route::lower, config.pots, params, config.levels,
                                        grid, config.tol);
  const IsolatedClassification cls = classify_isolated(tc.coulomb, tc.linear, config.m);

  // resolve threshold candidates against the isolated classification and
  // prepend the isolated eps = 0 entry when the route did not produce one
  SpectrumReport report = sol.report;
  report.branch.clear();
  bool have_threshold_row = false;
  for (SpectrumEntry& e : report.entries) {
    if (e.threshold && (cls.e_minus_m_exists || cls.e_plus_m_exists)) {
      e.provenance = Provenance::isolated;
      e.epsilon = 0.0;
      e.est_error = 0.0;
      e.E_plus = config.m;
      e.E_minus = -config.m;
      have_threshold_row = true;
    }
  }
  const bool inserted = !have_threshold_row && (cls.e_minus_m_exists || cls.e_plus_m_exists);
  if (inserted) {
    SpectrumEntry iso;
    iso.epsilon = 0.0;
    iso.E_plus = config.m;
    iso.E_minus = -config.m;
    iso.provenance = Provenance::isolated;
    iso.threshold = true;
    report.entries.insert(report.entries.begin(), iso);
  }
  for (std::size_t i = 0; i < report.entries.size(); ++i) {
    report.entries[i].n = static_cast<int>(i);
  }

  const fs::path out(config.out_dir);
  write_file(out / "spectrum.csv", spectrum_csv(report));
  Json jrep = to_json(report);
  jrep["route"] = "lower";
  jrep["isolated_solutions"] = to_json(cls);
  write_file(out / "spectrum.json", jrep.dump(2) + "\n");

  // per-level spinors: lower component from the eigenfunction, upper
  // recovered through the first-order relation, for both energy signs
  for (std::size_t i = 0; i < sol.report.entries.size(); ++i) {
    const SpectrumEntry& e = sol.report.entries[i];
    if (e.threshold || !e.has_real_E) continue;
    const CVec lower = sol.eigenfunctions[i].cast<Complex>();
    for (int sign : {+1, -1}) {
      const Real E = sign > 0 ? e.E_plus : e.E_minus;
      const CVec upper =
          recover_component(lower, RecoverFrom::lower, E, config.pots, params, sol.grid);
      const Spinor spinor = normalize(Spinor(sol.grid, upper, lower, E));
      const std::string name =
          "spinor_n" + std::to_string(e.n) + (sign > 0 ? "_Eplus" : "_Eminus") + ".csv";
      write_file(out / name, spinor_csv(spinor));
    }
  }
  if (cls.e_minus_m_exists || cls.e_plus_m_exists) {
    const Grid sgrid = isolated_grid(config);
    if (cls.e_minus_m_exists) {
      const Spinor iso =
          build_isolated(ThresholdSign::E_minus_m, params, config.pots.p, 0.0, 1.0, sgrid);
      write_file(out / "spinor_isolated_Eminusm.csv", spinor_csv(iso));
    }
    if (cls.e_plus_m_exists) {
      const Spinor iso =
          build_isolated(ThresholdSign::E_plus_m, params, config.pots.p, 0.0, 1.0, sgrid);
      write_file(out / "spinor_isolated_Eplusm.csv", spinor_csv(iso));
    }
  }
  write_run_metadata(config, "solve");
  std::cout << "wrote spectrum (" << report.entries.size() << " levels) to " << out.string()
            << "\n";
  return 0;
}

int cmd_oracle(const RunConfig& config) {
  validate_cornell(config);
  const TermComponents tc = components(config.pots.p);
  const AnalyticReports reports =
      analytic_spectrum_reports(tc.coulomb, tc.linear, config.m, config.levels);
  const fs::path out(config.out_dir);
  write_file(out / "spectrum_analytic_plus.csv", spectrum_csv(reports.plus));
  write_file(out / "spectrum_analytic_minus.csv", spectrum_csv(reports.minus));
  Json j;
  j["plus"] = to_json(reports.plus);
  j["minus"] = to_json(reports.minus);
  write_file(out / "spectrum_analytic.json", j.dump(2) + "\n");
  write_run_metadata(config, "oracle");
  std::cout << "wrote analytic spectra to " << out.string() << "\n";
  return 0;
}

int cmd_isolated(const RunConfig& config) {
  validate_cornell(config);
  const TermComponents tc = components(config.pots.p);
  const PhysicalParams params{config.m};
  const IsolatedClassification cls = classify_isolated(tc.coulomb, tc.linear, config.m);
  const fs::path out(config.out_dir);
  write_file(out / "isolated.json", to_json(cls).dump(2) + "\n");
  const Grid sgrid = isolated_grid(config);
  if (cls.e_minus_m_exists) {
    const Spinor iso =
        build_isolated(ThresholdSign::E_minus_m, params, config.pots.p, 0.0, 1.0, sgrid);
    write_file(out / "spinor_isolated_Eminusm.csv", spinor_csv(iso));
  }
  if (cls.e_plus_m_exists) {
    const Spinor iso =
        build_isolated(ThresholdSign::E_plus_m, params, config.pots.p, 0.0, 1.0, sgrid);
    write_file(out / "spinor_isolated_Eplusm.csv", spinor_csv(iso));
  }
  write_run_metadata(config, "isolated");
  std::cout << "E=-m: " << (cls.e_minus_m_exists ? "exists" : "no") << ", E=+m: "
            << (cls.e_plus_m_exists ? "exists" : "no") << "; wrote " << out.string() << "\n";
  return 0;
}

int cmd_audit(const RunConfig& config, const std::optional<std::string>& limit_name) {
  validate(config);
  LorentzPotentials pots = config.pots;
  Json extra;
  if (limit_name) {
    const TermComponents tc = components(config.pots.p);
    SymmetryLimit limit;
    if (*limit_name == "spin_limit") {
      limit = SymmetryLimit::spin_limit;
    } else if (*limit_name == "pseudospin_limit") {
      limit = SymmetryLimit::pseudospin_limit;
    } else {
      throw ConfigError("--limit must be spin_limit or pseudospin_limit, got \"" + *limit_name +
                        "\"");
    }
    pots = symmetry_limit_configuration(limit, tc.coulomb, tc.linear);
    extra["limit"] = symmetry_limit_name(limit);
    extra["limits_identical"] =
        symmetry_limit_configuration(SymmetryLimit::spin_limit, tc.coulomb, tc.linear) ==
        symmetry_limit_configuration(SymmetryLimit::pseudospin_limit, tc.coulomb, tc.linear);
  }
  const SymmetryVerdict verdict = classify(pots);
  Json j;
  j["potentials"] = to_json(pots);
  j["verdict"] = to_json(verdict);
  for (auto& [key, value] : extra.items()) j[key] = value;
  const fs::path out(config.out_dir);
  write_file(out / "audit.json", j.dump(2) + "\n");
  write_file(out / "audit.txt", to_text(verdict));
  write_run_metadata(config, "audit");
  std::cout << to_text(verdict);
  return 0;
}

int cmd_compare(const RunConfig& config) {
  validate_cornell(config);
  const TermComponents tc = components(config.pots.p);
  const RouteEquivalenceReport report =
      route_equivalence_report(tc.coulomb, tc.linear, config.m, config.levels);
  const fs::path out(config.out_dir);
  write_file(out / "compare.csv", route_comparison_csv(report));
  write_file(out / "compare.json", to_json(report).dump(2) + "\n");
  write_file(out / "compare.txt", to_text(report));
  write_run_metadata(config, "compare");
  std::cout << to_text(report);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"bound states of the 1+1D Dirac equation with a pseudoscalar Cornell potential"};
  app.require_subcommand(1);

  FlagOverrides flags;
  CLI::App* solve = app.add_subcommand("solve", "numeric spectrum + spinor export");
  CLI::App* oracle = app.add_subcommand("oracle", "closed-form spectrum");
  CLI::App* isolated = app.add_subcommand("isolated", "threshold solutions at E = -+m");
  CLI::App* audit = app.add_subcommand("audit", "spin/pseudospin symmetry verdict");
  CLI::App* compare = app.add_subcommand("compare", "upper vs lower route equivalence");
  for (CLI::App* cmd : {solve, oracle, isolated, audit, compare}) {
    add_common_options(cmd, flags);
  }
  std::string limit;
  audit->add_option("--limit", limit,
                    "classify a declared symmetry limit (spin_limit | pseudospin_limit)");

  CLI11_PARSE(app, argc, argv);

  try {
    const RunConfig config = build_config(flags);
    if (solve->parsed()) return cmd_solve(config);
    if (oracle->parsed()) return cmd_oracle(config);
    if (isolated->parsed()) return cmd_isolated(config);
    if (audit->parsed()) {
      return cmd_audit(config, limit.empty() ? std::nullopt : std::make_optional(limit));
    }
    if (compare->parsed()) return cmd_compare(config);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const NotPurePseudoscalarError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const GridTooCoarseError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const NonConvergedError& e) {
    std::cerr << "numerical non-convergence: " << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    std::cerr << "numerical error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
