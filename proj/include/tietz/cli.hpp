// SPDX-License-Identifier: Apache-2.0
//
// Run configuration and the three batch commands behind the tietz tool:
// spectrum, wavefunction and validate.
#ifndef TIETZ_CLI_HPP_
#define TIETZ_CLI_HPP_

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "tietz/errors.hpp"
#include "tietz/grid.hpp"
#include "tietz/oracle.hpp"
#include "tietz/potential.hpp"
#include "tietz/spectrum.hpp"
#include "tietz/wavefn.hpp"

namespace tietz::cli {

/// hbar^2 / (2 * (1 u) * (1 angstrom)^2) expressed in cm^-1.
/// CODATA 2022: hbar = 1.054571817e-34 J s, u = 1.66053906892e-27 kg,
/// h c = 1.98644586e-23 J cm (scipy.constants 1.15).
inline constexpr double kRotationalConstant = 16.857629168087772;

enum class UnitSystem { Natural, Molecular };
enum class OutputFormat { Csv, Json };

inline std::string_view to_string(UnitSystem u) { return u == UnitSystem::Natural ? "natural" : "molecular"; }

/// In molecular units the inputs are De [cm^-1], re [angstrom], alpha
/// [1/angstrom] and mass [u].  Internally energies stay in cm^-1 and lengths
/// in angstrom; only hbar changes, to sqrt(2 kRotationalConstant).
struct RunConfig {
  MoleculeParams molecule;
  UnitSystem unit_system = UnitSystem::Natural;
  int l_max = 0;
  CentrifugalScheme scheme = CentrifugalScheme::GreeneAldrich;
  RootSearchConfig root_search;
  std::string output_path;  // empty: stdout
  OutputFormat format = OutputFormat::Csv;

  friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

inline double molecular_hbar() { return std::sqrt(2.0 * kRotationalConstant); }

namespace detail {

inline std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

inline double parse_real(const std::string& key, const std::string& text) {
  double v = 0.0;
  const char* first = text.data();
  const char* last = first + text.size();
  if (!text.empty() && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last || !std::isfinite(v)) throw ConfigError(key, "not a finite number: '" + text + "'");
  return v;
}

inline int parse_int(const std::string& key, const std::string& text) {
  int v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size()) throw ConfigError(key, "not an integer: '" + text + "'");
  return v;
}

inline std::string format_real(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace detail

/// Parses the flat "key = value" format.  '#' starts a comment.
inline RunConfig parse_config(std::istream& in) {
  static const char* const known[] = {"unit_system", "De",    "re",     "alpha",         "q",
                                      "mass",        "hbar",  "l_max",  "scheme",        "e_scan_points",
                                      "energy_rel_tol"};
  std::map<std::string, std::string> kv;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const std::string body = detail::trim(line);
    if (body.empty()) continue;
    const auto eq = body.find('=');
    if (eq == std::string::npos) throw ConfigError("line " + std::to_string(lineno), "expected key = value");
    const std::string key = detail::trim(std::string_view(body).substr(0, eq));
    const std::string value = detail::trim(std::string_view(body).substr(eq + 1));
    if (std::find(std::begin(known), std::end(known), key) == std::end(known)) throw ConfigError(key, "unknown key");
    if (value.empty()) throw ConfigError(key, "empty value");
    if (!kv.emplace(key, value).second) throw ConfigError(key, "duplicate key");
  }

  const auto require = [&](const char* key) -> const std::string& {
    const auto it = kv.find(key);
    if (it == kv.end()) throw ConfigError(key, "missing key");
    return it->second;
  };
  const auto positive = [&](const char* key) {
    const double v = detail::parse_real(key, require(key));
    if (!(v > 0.0)) throw ConfigError(key, "must be positive");
    return v;
  };

  RunConfig cfg;
  const std::string& units = require("unit_system");
  if (units == "natural")
    cfg.unit_system = UnitSystem::Natural;
  else if (units == "molecular")
    cfg.unit_system = UnitSystem::Molecular;
  else
    throw ConfigError("unit_system", "expected natural or molecular, got '" + units + "'");

  MoleculeParams& p = cfg.molecule;
  p.De = positive("De");
  p.re = positive("re");
  p.alpha = positive("alpha");
  p.q = detail::parse_real("q", require("q"));
  p.mass = positive("mass");
  if (cfg.unit_system == UnitSystem::Natural) {
    p.hbar = positive("hbar");
  } else {
    if (kv.count("hbar")) throw ConfigError("hbar", "only allowed with unit_system = natural");
    p.hbar = molecular_hbar();
  }

  if (auto it = kv.find("l_max"); it != kv.end()) {
    cfg.l_max = detail::parse_int("l_max", it->second);
    if (cfg.l_max < 0) throw ConfigError("l_max", "must be non-negative");
  }
  if (auto it = kv.find("scheme"); it != kv.end()) {
    if (it->second == "greene-aldrich")
      cfg.scheme = CentrifugalScheme::GreeneAldrich;
    else if (it->second == "taylor-match")
      cfg.scheme = CentrifugalScheme::TaylorMatch;
    else
      throw ConfigError("scheme", "expected greene-aldrich or taylor-match, got '" + it->second + "'");
  }

  const auto tag = classify(p).tag;
  if (tag != RegimeTag::DeformedManningRosenStrong && cfg.l_max != 0)
    throw ConfigError("l_max", "must be 0 unless q <= -1");

  cfg.root_search = default_root_search(p);
  if (auto it = kv.find("e_scan_points"); it != kv.end())
    cfg.root_search.scan_points = detail::parse_int("e_scan_points", it->second);
  if (auto it = kv.find("energy_rel_tol"); it != kv.end())
    cfg.root_search.energy_rel_tol = detail::parse_real("energy_rel_tol", it->second);
  try {
    cfg.root_search.validate();
  } catch (const DomainError& e) {
    throw ConfigError(cfg.root_search.scan_points < 16 ? "e_scan_points" : "energy_rel_tol", e.what());
  }
  return cfg;
}

inline RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("path", "cannot open '" + path + "'");
  return parse_config(in);
}

/// Inverse of parse_config (output_path and format are not part of the file).
inline std::string emit_config(const RunConfig& cfg) {
  const MoleculeParams& p = cfg.molecule;
  std::ostringstream os;
  os << "unit_system = " << to_string(cfg.unit_system) << '\n'
     << "De = " << detail::format_real(p.De) << '\n'
     << "re = " << detail::format_real(p.re) << '\n'
     << "alpha = " << detail::format_real(p.alpha) << '\n'
     << "q = " << detail::format_real(p.q) << '\n'
     << "mass = " << detail::format_real(p.mass) << '\n';
  if (cfg.unit_system == UnitSystem::Natural) os << "hbar = " << detail::format_real(p.hbar) << '\n';
  os << "l_max = " << cfg.l_max << '\n'
     << "scheme = " << to_string(cfg.scheme) << '\n'
     << "e_scan_points = " << cfg.root_search.scan_points << '\n'
     << "energy_rel_tol = " << detail::format_real(cfg.root_search.energy_rel_tol) << '\n';
  return os.str();
}

// ---------------------------------------------------------------------------
// Commands

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitEmpty = 2;

inline CentrifugalCoeffs coeffs_for(const RunConfig& cfg) {
  if (classify(cfg.molecule).tag != RegimeTag::DeformedManningRosenStrong) return {};
  return centrifugal_coeffs(cfg.scheme, cfg.molecule);
}

/// All bound states the configuration asks for, ordered by (l, nr).
inline std::vector<BoundState> compute_spectrum(const RunConfig& cfg) {
  const MoleculeParams& p = cfg.molecule;
  p.validate();
  switch (classify(p).tag) {
    case RegimeTag::DeformedManningRosenStrong: {
      const auto cc = coeffs_for(cfg);
      std::vector<BoundState> out;
      for (int l = 0; l <= cfg.l_max; ++l) {
        auto part = closed_form_spectrum(p, l, cc);
        out.insert(out.end(), part.begin(), part.end());
      }
      return out;
    }
    case RegimeTag::DeformedManningRosenWeak: return solve_transcendental_weak(p, cfg.root_search);
    case RegimeTag::DeformedRosenMorse: return solve_transcendental_rm(p, cfg.root_search);
    case RegimeTag::Morse: return morse_energies(p);
  }
  throw RegimeError("compute_spectrum: unknown regime");
}

inline int cmd_spectrum(const RunConfig& cfg, std::ostream& out) {
  const auto states = compute_spectrum(cfg);
  if (cfg.format == OutputFormat::Csv) {
    out << "nr,l,energy,method,residual\n";
    for (const auto& s : states)
      out << s.nr << ',' << s.l << ',' << detail::format_real(s.energy) << ',' << to_string(s.method) << ','
          << detail::format_real(s.residual) << '\n';
  } else {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& s : states)
      rows.push_back({{"nr", s.nr},
                      {"l", s.l},
                      {"energy", s.energy},
                      {"method", std::string(to_string(s.method))},
                      {"residual", s.residual}});
    out << rows.dump(2) << '\n';
  }
  return states.empty() ? kExitEmpty : kExitOk;
}

/// Normalized samples of state (nr, l) on the default window, or nullopt
/// when the state does not exist.
inline std::optional<GridFunction> sample_state(const RunConfig& cfg, int nr, int l,
                                                int n_points = kDefaultSamplePoints) {
  const auto states = compute_spectrum(cfg);
  const auto it = std::find_if(states.begin(), states.end(), [&](const BoundState& s) { return s.nr == nr && s.l == l; });
  if (it == states.end()) return std::nullopt;
  const auto window = default_window(cfg.molecule);
  return normalize_grid(
      sample(make_wavefunction(cfg.molecule, *it, coeffs_for(cfg)), window.r_lo, window.r_hi, n_points));
}

inline int cmd_wavefunction(const RunConfig& cfg, int nr, int l, std::ostream& out) {
  const auto g = sample_state(cfg, nr, l);
  if (!g) return kExitEmpty;
  if (cfg.format == OutputFormat::Csv) {
    out << "r,chi\n";
    for (std::size_t i = 0; i < g->size(); ++i)
      out << detail::format_real(g->r_values[i]) << ',' << detail::format_real(g->values[i]) << '\n';
  } else {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < g->size(); ++i) rows.push_back({{"r", g->r_values[i]}, {"chi", g->values[i]}});
    out << rows.dump(2) << '\n';
  }
  return kExitOk;
}

/// One line of the validate report.
struct ValidationRow {
  int nr = 0;
  int l = 0;
  double analytic = 0.0;
  double oracle = 0.0;  // NaN when the oracle has no matching level
  double deviation = 0.0;
  std::optional<double> approximation_error;  // strong regime: (E_true - E_approx) / E_true
  double tolerance = 0.0;
  bool pass = false;
};

inline constexpr double kValidateTolerance = 1e-5;
inline constexpr double kMorseValidateTolerance = 1e-4;

inline double validation_tolerance(const MoleculeParams& p) {
  if (classify(p).tag == RegimeTag::Morse &&
      morse_lambda(p) * std::exp(2.0 * p.alpha * p.re) < 1e4)
    return kMorseValidateTolerance;
  return kValidateTolerance;
}

/// Oracle options matched to a molecule: window of 60/alpha, Dirichlet point
/// 1e-4/alpha off the singular floor when |q| >= 1.
inline oracle::OracleOptions oracle_options(const MoleculeParams& p) {
  oracle::OracleOptions opt;
  opt.length_scale = 1.0 / p.alpha;
  opt.floor_offset = p.q <= -1.0 ? 1e-4 / p.alpha : 0.0;
  return opt;
}

/// Richardson-refined oracle levels for the potential the analytic result
/// solves exactly.
inline std::vector<double> oracle_levels(const RunConfig& cfg, int l, int k, bool true_centrifugal = false) {
  const MoleculeParams& p = cfg.molecule;
  const double floor = classify(p).floor();
  const auto opt = oracle_options(p);
  oracle::OracleSpectrum s;
  switch (classify(p).tag) {
    case RegimeTag::DeformedManningRosenStrong: {
      const auto cc = coeffs_for(cfg);
      if (true_centrifugal)
        s = oracle::solve_radial([&](double r) { return true_radial_potential(p, l, r); }, floor, p.mass, p.hbar, k,
                                 true, opt);
      else
        s = oracle::solve_radial([&](double r) { return effective_potential(p, l, cc, r); }, floor, p.mass, p.hbar,
                                 k, true, opt);
      break;
    }
    case RegimeTag::DeformedManningRosenWeak:
    case RegimeTag::DeformedRosenMorse:
      s = oracle::solve_radial([&](double r) { return tietz_potential(p, r); }, floor, p.mass, p.hbar, k, true, opt);
      break;
    case RegimeTag::Morse:
      s = oracle::solve_radial([&](double r) { return morse_potential(p, r); }, floor, p.mass, p.hbar, k, true, opt);
      break;
  }
  return s.best();
}

inline std::vector<ValidationRow> validate_rows(const RunConfig& cfg) {
  const auto states = compute_spectrum(cfg);
  const MoleculeParams& p = cfg.molecule;
  const bool strong = classify(p).tag == RegimeTag::DeformedManningRosenStrong;
  const double tol = validation_tolerance(p);
  std::vector<ValidationRow> rows;
  for (int l = 0; l <= cfg.l_max; ++l) {
    std::vector<BoundState> mine;
    for (const auto& s : states)
      if (s.l == l) mine.push_back(s);
    if (mine.empty()) continue;
    const int k = static_cast<int>(mine.size());
    const auto same = oracle_levels(cfg, l, k);
    const auto exact = strong ? oracle_levels(cfg, l, k, true) : std::vector<double>{};
    for (std::size_t i = 0; i < mine.size(); ++i) {
      ValidationRow row;
      row.nr = mine[i].nr;
      row.l = l;
      row.analytic = mine[i].energy;
      row.tolerance = tol;
      row.oracle = i < same.size() ? same[i] : std::nan("");
      row.deviation = std::abs(row.analytic - row.oracle) / std::abs(row.oracle);
      row.pass = row.deviation <= tol;
      if (strong && i < exact.size() && i < same.size()) row.approximation_error = (exact[i] - same[i]) / exact[i];
      rows.push_back(row);
    }
  }
  return rows;
}

inline int cmd_validate(const RunConfig& cfg, std::ostream& out) {
  const auto rows = validate_rows(cfg);
  bool ok = !rows.empty();
  for (const auto& r : rows) ok = ok && r.pass;
  if (cfg.format == OutputFormat::Csv) {
    out << "nr,l,analytic,oracle,rel_deviation,approx_error,tolerance,pass\n";
    for (const auto& r : rows)
      out << r.nr << ',' << r.l << ',' << detail::format_real(r.analytic) << ',' << detail::format_real(r.oracle) << ','
          << detail::format_real(r.deviation) << ','
          << (r.approximation_error ? detail::format_real(*r.approximation_error) : std::string()) << ','
          << detail::format_real(r.tolerance) << ',' << (r.pass ? "true" : "false") << '\n';
  } else {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : rows) {
      nlohmann::ordered_json j{{"nr", r.nr},           {"l", r.l},
                               {"analytic", r.analytic}, {"oracle", r.oracle},
                               {"rel_deviation", r.deviation}};
      j["approx_error"] = r.approximation_error ? nlohmann::ordered_json(*r.approximation_error) : nullptr;
      j["tolerance"] = r.tolerance;
      j["pass"] = r.pass;
      arr.push_back(std::move(j));
    }
    out << arr.dump(2) << '\n';
  }
  return ok ? kExitOk : kExitFailure;
}

}  // namespace tietz::cli

#endif  // TIETZ_CLI_HPP_
