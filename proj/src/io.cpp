// Copyright 2026 The dirac1d Authors
// SPDX-License-Identifier: Apache-2.0

#include <dirac1d/io.hpp>

#include <dirac1d/errors.hpp>
#include <dirac1d/sl_solver.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace dirac1d {

std::string format_real(Real v) {
  if (std::isnan(v)) return "nan";
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string spectrum_csv(const SpectrumReport& report) {
  std::ostringstream os;
  os << "n,epsilon,E_plus,E_minus,provenance,est_error\n";
  for (const SpectrumEntry& e : report.entries) {
    os << e.n << ',' << format_real(e.epsilon) << ',' << format_real(e.E_plus) << ','
       << format_real(e.E_minus) << ',' << provenance_name(e.provenance) << ','
       << format_real(e.est_error) << '\n';
  }
  return os.str();
}

std::string spinor_csv(const Spinor& spinor) {
  std::ostringstream os;
  os << "x,re_upper,im_upper,re_lower,im_lower\n";
  const Grid& g = spinor.grid();
  for (Index i = 0; i < g.size(); ++i) {
    os << format_real(g.node(i)) << ',' << format_real(spinor.upper()[i].real()) << ','
       << format_real(spinor.upper()[i].imag()) << ',' << format_real(spinor.lower()[i].real())
       << ',' << format_real(spinor.lower()[i].imag()) << '\n';
  }
  return os.str();
}

std::string route_comparison_csv(const RouteEquivalenceReport& report) {
  std::ostringstream os;
  os << "n,eps_upper,eps_lower,E_upper,E_lower,abs_dE\n";
  for (const RouteComparisonRow& r : report.rows) {
    os << r.n << ',' << format_real(r.eps_upper) << ',' << format_real(r.eps_lower) << ','
       << format_real(r.E_upper) << ',' << format_real(r.E_lower) << ','
       << format_real(r.abs_dE) << '\n';
  }
  return os.str();
}

Json to_json(const PotentialTerm& term) {
  Json j;
  j["kind"] = term_kind_name(term.kind());
  switch (term.kind()) {
    case TermKind::zero: break;
    case TermKind::constant: j["c"] = term.constant_value(); break;
    case TermKind::coulomb: j["a"] = term.coulomb_strength(); break;
    case TermKind::linear: j["b"] = term.linear_slope(); break;
    case TermKind::cornell:
      j["a"] = term.coulomb_strength();
      j["b"] = term.linear_slope();
      break;
  }
  return j;
}

Json to_json(const LorentzPotentials& pots) {
  return Json{{"v", to_json(pots.v)}, {"s", to_json(pots.s)}, {"p", to_json(pots.p)}};
}

namespace {

Json entry_to_json(const SpectrumEntry& e) {
  Json j;
  j["n"] = e.n;
  j["epsilon"] = e.epsilon;
  if (e.has_real_E) {
    j["E_plus"] = e.E_plus;
    j["E_minus"] = e.E_minus;
  } else {
    j["E_plus"] = nullptr;
    j["E_minus"] = nullptr;
  }
  j["provenance"] = provenance_name(e.provenance);
  j["est_error"] = e.est_error;
  j["threshold"] = e.threshold;
  j["has_real_E"] = e.has_real_E;
  return j;
}

}  // namespace

Json to_json(const SpectrumReport& report) {
  Json j;
  j["a"] = report.a;
  j["b"] = report.b;
  j["m"] = report.m;
  if (!report.branch.empty()) j["branch"] = report.branch;
  j["extension_dependent"] = report.extension_dependent;
  j["entries"] = Json::array();
  for (const SpectrumEntry& e : report.entries) j["entries"].push_back(entry_to_json(e));
  return j;
}

Json to_json(const SymmetryVerdict& verdict) {
  Json j;
  j["spin"] = verdict.spin.symmetric ? Json{{"symmetric", true}}
                                     : Json{{"symmetric", false}, {"reason", verdict.spin.reason}};
  j["pseudospin"] = verdict.pseudospin.symmetric
                        ? Json{{"symmetric", true}}
                        : Json{{"symmetric", false}, {"reason", verdict.pseudospin.reason}};
  j["pure_pseudoscalar"] = verdict.pure_pseudoscalar;
  return j;
}

Json to_json(const RouteEquivalenceReport& report) {
  Json j;
  j["a"] = report.a;
  j["b"] = report.b;
  j["m"] = report.m;
  j["max_abs_dE"] = report.max_abs_dE;
  j["lower_has_threshold"] = report.lower_has_threshold;
  j["extension_dependent"] = report.extension_dependent;
  j["rows"] = Json::array();
  for (const RouteComparisonRow& r : report.rows) {
    j["rows"].push_back(Json{{"n", r.n},
                             {"eps_upper", r.eps_upper},
                             {"eps_lower", r.eps_lower},
                             {"E_upper", r.E_upper},
                             {"E_lower", r.E_lower},
                             {"abs_dE", r.abs_dE}});
  }
  return j;
}

Json to_json(const IsolatedClassification& c) {
  Json j;
  j["a"] = c.a;
  j["b"] = c.b;
  j["m"] = c.m;
  j["E_minus_m"] = c.e_minus_m_exists ? "exists" : "no";
  j["E_plus_m"] = c.e_plus_m_exists ? "exists" : "no";
  j["reasons"] = Json{{"E_minus_m", c.reason_minus}, {"E_plus_m", c.reason_plus}};
  return j;
}

PotentialTerm term_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("kind")) {
    throw ConfigError("potential term must be a tagged record with a \"kind\" field");
  }
  const std::string kind = j.at("kind").get<std::string>();
  auto num = [&](const char* field) -> Real {
    if (!j.contains(field) || !j.at(field).is_number()) {
      throw ConfigError("potential term kind \"" + kind + "\" requires numeric field \"" + field +
                        "\"");
    }
    return j.at(field).get<Real>();
  };
  if (kind == "zero") return PotentialTerm::Zero();
  if (kind == "constant") return PotentialTerm::Constant(num("c"));
  if (kind == "coulomb") return PotentialTerm::Coulomb(num("a"));
  if (kind == "linear") return PotentialTerm::Linear(num("b"));
  if (kind == "cornell") return PotentialTerm::Cornell(num("a"), num("b"));
  throw ConfigError("unknown potential kind \"" + kind + "\"");
}

RunConfig config_from_json(const Json& j) {
  RunConfig c;
  if (j.contains("potential")) {
    // shorthand: pure pseudoscalar coupling
    c.pots = LorentzPotentials{PotentialTerm::Zero(), PotentialTerm::Zero(),
                               term_from_json(j.at("potential"))};
  }
  if (j.contains("potentials")) {
    const Json& p = j.at("potentials");
    LorentzPotentials pots;
    if (p.contains("v")) pots.v = term_from_json(p.at("v"));
    if (p.contains("s")) pots.s = term_from_json(p.at("s"));
    if (p.contains("p")) pots.p = term_from_json(p.at("p"));
    c.pots = pots;
  }
  if (j.contains("m")) c.m = j.at("m").get<Real>();
  if (j.contains("levels")) c.levels = j.at("levels").get<Index>();
  if (j.contains("grid")) {
    const Json& g = j.at("grid");
    if (g.contains("x_min")) c.x_min = g.at("x_min").get<Real>();
    if (g.contains("x_max")) c.x_max = g.at("x_max").get<Real>();
    if (g.contains("n")) c.points = g.at("n").get<Index>();
  }
  if (j.contains("tol")) c.tol = j.at("tol").get<Real>();
  if (j.contains("out")) c.out_dir = j.at("out").get<std::string>();
  return c;
}

Json to_json(const RunConfig& config) {
  Json j;
  j["potentials"] = to_json(config.pots);
  j["m"] = config.m;
  j["levels"] = config.levels;
  Json g = Json::object();
  if (config.x_min) g["x_min"] = *config.x_min;
  if (config.x_max) g["x_max"] = *config.x_max;
  if (config.points) g["n"] = *config.points;
  j["grid"] = g;
  j["tol"] = config.tol;
  j["out"] = config.out_dir;
  return j;
}

void validate(const RunConfig& config) {
  if (!(config.m >= 0)) throw ConfigError("m must be non-negative");
  if (config.levels < 1) throw ConfigError("levels must be >= 1");
  if (!(config.tol > 0)) throw ConfigError("tol must be positive");
  if (config.points && *config.points < 16) {
    throw ConfigError("grid too small: n must be >= 16, got " + std::to_string(*config.points));
  }
  if (config.x_min && !(*config.x_min > 0)) throw ConfigError("x_min must be positive");
  if (config.x_min && config.x_max && !(*config.x_max > *config.x_min)) {
    throw ConfigError("x_max must exceed x_min");
  }
}

void validate_cornell(const RunConfig& config) {
  validate(config);
  if (!config.pots.v.is_zero() || !config.pots.s.is_zero()) {
    throw ConfigError("this subcommand requires a pure pseudoscalar configuration (V_v = V_s = 0)");
  }
  if (config.pots.p.kind() != TermKind::cornell) {
    throw ConfigError(std::string("this subcommand requires a Cornell pseudoscalar coupling, got "
                                  "kind \"") +
                      term_kind_name(config.pots.p.kind()) + "\"");
  }
  if (!(config.pots.p.linear_slope() > 0)) {
    throw ConfigError("b must be positive (confining); got b=" +
                      std::to_string(config.pots.p.linear_slope()));
  }
}

Grid config_grid(const RunConfig& config) {
  const TermComponents tc = components(config.pots.p);
  const Grid dflt = default_solver_grid(tc.coulomb, tc.linear, config.levels);
  const Real x_min = config.x_min.value_or(dflt.x_min());
  const Real x_max = config.x_max.value_or(dflt.x_max());
  Index n;
  if (config.points) {
    n = *config.points;
  } else if (config.x_min || config.x_max) {
    const Real h = dflt.spacing();
    n = std::max<Index>(16, static_cast<Index>(std::llround((x_max - x_min) / h)) + 1);
  } else {
    n = dflt.size();
  }
  return Grid(x_min, x_max, n);
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  if (path.has_parent_path()) {
    std::error_code ec;
    std::filesystem::create_directories(path.parent_path(), ec);
    if (ec) throw ConfigError("cannot create directory " + path.parent_path().string());
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot open " + path.string() + " for writing");
  out << content;
  if (!out) throw ConfigError("failed writing " + path.string());
}

}  // namespace dirac1d
