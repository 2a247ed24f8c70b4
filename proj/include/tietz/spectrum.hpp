// SPDX-License-Identifier: Apache-2.0
//
// Bound-state energies of the improved Tietz potential.
//
//  * q <= -1: closed form for every l (with the 1/r^2 approximation).
//  * -1 < q < 0 and q > 0: zeros of a hypergeometric quantization function,
//    s-waves only.
//  * q == 0: Morse levels.
#ifndef TIETZ_SPECTRUM_HPP_
#define TIETZ_SPECTRUM_HPP_

#include <algorithm>
#include <cmath>
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "tietz/errors.hpp"
#include "tietz/potential.hpp"
#include "tietz/specfun.hpp"

namespace tietz {

/// Parameters of the hypergeometric functions attached to a given energy.
struct SpectralParams {
  double LE = 0.0;
  double M1 = 0.0;
  double M2 = 0.0;
  std::optional<double> delta_l;
  std::optional<double> Nr;
  std::optional<double> lambda_l;
};

enum class SolutionMethod { ClosedForm, TranscendentalRoot, MorseFormula };

inline std::string_view to_string(SolutionMethod m) {
  switch (m) {
    case SolutionMethod::ClosedForm: return "closed-form";
    case SolutionMethod::TranscendentalRoot: return "transcendental-root";
    case SolutionMethod::MorseFormula: return "morse-formula";
  }
  return "unknown";
}

struct BoundState {
  int nr = 0;
  int l = 0;
  double energy = 0.0;
  Regime regime{RegimeTag::Morse, 0.0};
  SolutionMethod method = SolutionMethod::ClosedForm;
  /// |f(E)| / max(1, max |f| over the scan); 0 for closed forms.
  double residual = 0.0;
};

/// Largest normalized residual accepted for a transcendental root.
inline constexpr double kRootResidualTolerance = 1e-8;

struct RootSearchConfig {
  double e_min = 0.0;
  double e_max = 0.0;
  int scan_points = 2001;
  double energy_rel_tol = 1e-15;
  int max_bisections = 200;

  void validate() const {
    if (!(e_min < e_max)) throw DomainError("RootSearchConfig: e_min must be below e_max");
    if (scan_points < 16) throw DomainError("RootSearchConfig: scan_points must be >= 16");
    if (!(energy_rel_tol > 0.0)) throw DomainError("RootSearchConfig: energy_rel_tol must be positive");
    if (max_bisections < 1) throw DomainError("RootSearchConfig: max_bisections must be >= 1");
  }

  friend bool operator==(const RootSearchConfig&, const RootSearchConfig&) = default;
};

/// Bracket strictly between the bottom of the well and the dissociation
/// threshold.  The Tietz potential is a perfect square vanishing at re, so
/// its infimum over r > 0 is 0.
inline RootSearchConfig default_root_search(const MoleculeParams& p) {
  RootSearchConfig cfg;
  cfg.e_min = 1e-12 * p.De;
  cfg.e_max = p.De * (1.0 - 1e-12);
  return cfg;
}

// ---------------------------------------------------------------------------
// q <= -1

namespace detail {

inline void require_strong(const MoleculeParams& p, const char* what) {
  if (classify(p).tag != RegimeTag::DeformedManningRosenStrong) throw RegimeError(what);
}

}  // namespace detail

inline double strong_delta(const MoleculeParams& p, int l, const CentrifugalCoeffs& cc) {
  detail::require_strong(p, "strong_delta: requires q <= -1");
  const auto u = manning_rosen_constants(p);
  const double aq = -p.q;
  const double a2 = p.alpha * p.alpha;
  const double radicand = 1.0 + 8.0 * p.mass * u.U2 / (p.hbar * p.hbar * a2) + l * (l + 1.0) * cc.A0 / (a2 * aq * aq);
  if (radicand < 0.0) throw DomainError("strong_delta: centrifugal coefficients give a complex index");
  return 0.5 * std::sqrt(radicand);
}

inline double strong_lambda(const MoleculeParams& p, int l, const CentrifugalCoeffs& cc) {
  detail::require_strong(p, "strong_lambda: requires q <= -1");
  const auto u = manning_rosen_constants(p);
  const double aq = -p.q;
  const double a2 = p.alpha * p.alpha;
  return p.mass * u.U1 / (p.hbar * p.hbar * a2) + l * (l + 1.0) / (4.0 * a2) * (cc.A0 / (aq * aq) - cc.B0 / aq);
}

/// (L_E, M1, M2, delta_l, lambda_l) at energy E; Nr is left empty.
inline SpectralParams spectral_params_strong(const MoleculeParams& p, int l, const CentrifugalCoeffs& cc, double E) {
  detail::require_strong(p, "spectral_params_strong: requires q <= -1");
  const auto u = manning_rosen_constants(p);
  const double aq = -p.q;
  const double two_m = 2.0 * p.mass / (p.hbar * p.hbar);
  const double ll = l * (l + 1.0);
  const double upper = two_m * (u.U0 + u.U1 + u.U2 - E) + ll * (cc.C0 + cc.A0 / (aq * aq) - cc.B0 / aq);
  const double lower = two_m * (u.U0 - u.U1 + u.U2 - E) + ll * cc.C0;
  if (upper < 0.0 || lower < 0.0)
    throw EnergyRangeError("spectral_params_strong: energy above the real domain of M1, M2, L_E");
  SpectralParams sp;
  const double delta = strong_delta(p, l, cc);
  const double half = std::sqrt(lower) / (2.0 * p.alpha);
  sp.LE = -0.5 + std::sqrt(upper) / (2.0 * p.alpha);
  sp.M1 = delta + half;
  sp.M2 = delta - half;
  sp.delta_l = delta;
  sp.lambda_l = strong_lambda(p, l, cc);
  return sp;
}

/// Largest nr with nr < sqrt(lambda) - delta - 1/2, or -1 if none.
inline int cutoff_quantum_number(double lambda, double delta) {
  if (!(lambda > 0.0)) return -1;
  const double bound = std::sqrt(lambda) - delta - 0.5;
  if (!(bound > 0.0)) return -1;
  return static_cast<int>(std::ceil(bound)) - 1;
}

inline int max_quantum_number(const MoleculeParams& p, int l, const CentrifugalCoeffs& cc) {
  return cutoff_quantum_number(strong_lambda(p, l, cc), strong_delta(p, l, cc));
}

inline BoundState energy_closed_form(const MoleculeParams& p, int nr, int l, const CentrifugalCoeffs& cc) {
  detail::require_strong(p, "energy_closed_form: requires q <= -1");
  if (nr < 0 || l < 0) throw DomainError("energy_closed_form: quantum numbers must be non-negative");
  if (nr > max_quantum_number(p, l, cc))
    throw NoSuchStateError("energy_closed_form: nr beyond the bound-state cutoff");
  const auto u = manning_rosen_constants(p);
  const double aq = -p.q;
  const double lambda = strong_lambda(p, l, cc);
  const double n_r = nr + strong_delta(p, l, cc) + 0.5;
  const double rot = p.kinetic_scale() * l * (l + 1.0);
  const double energy = u.U0 + u.U2 + rot * (cc.A0 / (2.0 * aq * aq) - cc.B0 / (2.0 * aq) + cc.C0) -
                        p.kinetic_scale() * p.alpha * p.alpha * (n_r * n_r + lambda * lambda / (n_r * n_r));
  return {nr, l, energy, classify(p), SolutionMethod::ClosedForm, 0.0};
}

inline std::vector<BoundState> closed_form_spectrum(const MoleculeParams& p, int l, const CentrifugalCoeffs& cc) {
  std::vector<BoundState> out;
  const int top = max_quantum_number(p, l, cc);
  for (int nr = 0; nr <= top; ++nr) out.push_back(energy_closed_form(p, nr, l, cc));
  return out;
}

// ---------------------------------------------------------------------------
// Transcendental branches (s-waves)

namespace detail {

// Uniform scan of f over [lo, hi] followed by bisection of every sign change.
// f is carried as a scaled value so quantization functions beyond the double
// range still bracket; the residual is |f(root)| / max(1, max |f| on the scan).
inline std::vector<std::pair<double, double>> scan_and_bisect(
    const std::function<specfun::ScaledReal(double)>& f, double lo, double hi, const RootSearchConfig& cfg) {
  const int n = cfg.scan_points;
  std::vector<double> es(static_cast<std::size_t>(n));
  std::vector<specfun::ScaledReal> fs(es.size());
  double log_scale = 0.0;
  for (int i = 0; i < n; ++i) {
    const double e = i + 1 == n ? hi : lo + (hi - lo) * i / (n - 1.0);
    es[static_cast<std::size_t>(i)] = e;
    fs[static_cast<std::size_t>(i)] = f(e);
    if (fs[static_cast<std::size_t>(i)].mantissa != 0.0)
      log_scale = std::max(log_scale, fs[static_cast<std::size_t>(i)].log_abs());
  }
  std::vector<std::pair<double, double>> roots;  // (energy, normalized residual)
  for (std::size_t i = 0; i + 1 < es.size(); ++i) {
    double a = es[i];
    double b = es[i + 1];
    auto fa = fs[i];
    const auto fb = fs[i + 1];
    if (fa.mantissa == 0.0) {
      roots.emplace_back(a, 0.0);
      continue;
    }
    if (fa.negative() == fb.negative() || fb.mantissa == 0.0) continue;
    for (int it = 0; it < cfg.max_bisections; ++it) {
      const double mid = 0.5 * (a + b);
      if (b - a <= cfg.energy_rel_tol * std::max(std::abs(a), std::abs(b)) || mid == a || mid == b) break;
      const auto fm = f(mid);
      if (fm.mantissa == 0.0) {
        a = b = mid;
        break;
      }
      if (fm.negative() == fa.negative()) {
        a = mid;
        fa = fm;
      } else {
        b = mid;
      }
    }
    const double root = 0.5 * (a + b);
    const auto fr = f(root);
    const double residual = fr.mantissa == 0.0 ? 0.0 : std::exp(fr.log_abs() - log_scale);
    if (residual <= kRootResidualTolerance) roots.emplace_back(root, residual);
  }
  if (fs.back().mantissa == 0.0) roots.emplace_back(es.back(), 0.0);
  return roots;
}

inline std::vector<BoundState> label_roots(const std::vector<std::pair<double, double>>& roots, const Regime& regime) {
  std::vector<BoundState> out;
  for (const auto& [energy, residual] : roots) {
    if (!out.empty() && energy <= out.back().energy) continue;
    out.push_back({static_cast<int>(out.size()), 0, energy, regime, SolutionMethod::TranscendentalRoot, residual});
  }
  return out;
}

}  // namespace detail

/// (L_E, M1, M2, delta_0) for -1 < q < 0 and l = 0.
inline SpectralParams spectral_params_weak(const MoleculeParams& p, double E) {
  if (classify(p).tag != RegimeTag::DeformedManningRosenWeak)
    throw RegimeError("spectral_params_weak: requires -1 < q < 0");
  const auto u = manning_rosen_constants(p);
  const double upper = 2.0 * p.mass * (u.U0 + u.U1 + u.U2 - E);
  const double lower = 2.0 * p.mass * (p.De - E);
  if (upper < 0.0 || lower < 0.0) throw EnergyRangeError("spectral_params_weak: energy above the real domain");
  const double delta0 = 0.5 * std::sqrt(1.0 + 8.0 * p.mass * u.U2 / (p.hbar * p.hbar * p.alpha * p.alpha));
  const double half = std::sqrt(lower) / (2.0 * p.hbar * p.alpha);
  SpectralParams sp;
  sp.LE = -0.5 + std::sqrt(upper) / (2.0 * p.hbar * p.alpha);
  sp.M1 = delta0 + half;
  sp.M2 = delta0 - half;
  sp.delta_l = delta0;
  return sp;
}

/// 2F1(M1 - L_E, L_E + M1 + 1; M1 - M2 + 1; |q|), zero at the s-wave levels.
inline double weak_quantization(const MoleculeParams& p, double E, const specfun::SeriesControl& ctl = {}) {
  const auto sp = spectral_params_weak(p, E);
  return specfun::gauss_2f1(sp.M1 - sp.LE, sp.LE + sp.M1 + 1.0, sp.M1 - sp.M2 + 1.0, -p.q, ctl);
}

/// weak_quantization as a scaled value, finite for any admissible E.
inline specfun::ScaledReal weak_quantization_scaled(const MoleculeParams& p, double E,
                                                    const specfun::SeriesControl& ctl = {}) {
  const auto sp = spectral_params_weak(p, E);
  return specfun::gauss_2f1_scaled(sp.M1 - sp.LE, sp.LE + sp.M1 + 1.0, sp.M1 - sp.M2 + 1.0, -p.q, ctl);
}

inline std::vector<BoundState> solve_transcendental_weak(const MoleculeParams& p, const RootSearchConfig& cfg) {
  cfg.validate();
  const auto regime = classify(p);
  if (regime.tag != RegimeTag::DeformedManningRosenWeak)
    throw RegimeError("solve_transcendental_weak: requires -1 < q < 0");
  const auto u = manning_rosen_constants(p);
  // both radicands are real below min(De, U0 + U1 + U2)
  const double real_top = std::min(p.De, u.U0 + u.U1 + u.U2);
  const double lo = std::max(0.0, cfg.e_min);
  const double hi = std::min({p.De, cfg.e_max, real_top});
  if (!(lo < hi)) return {};
  const auto roots = detail::scan_and_bisect([&](double E) { return weak_quantization_scaled(p, E); }, lo, hi, cfg);
  return detail::label_roots(roots, regime);
}

/// (L_E0, M1, M2) for q > 0 and l = 0.  L_E0 does not depend on E.
inline SpectralParams spectral_params_rm(const MoleculeParams& p, double E) {
  if (classify(p).tag != RegimeTag::DeformedRosenMorse) throw RegimeError("spectral_params_rm: requires q > 0");
  const auto v = rosen_morse_constants(p);
  const double plus = 2.0 * p.mass * (v.V0 + v.V1 + v.V2 - E);
  const double minus = 2.0 * p.mass * (v.V0 - v.V1 + v.V2 - E);
  if (plus < 0.0 || minus < 0.0) throw EnergyRangeError("spectral_params_rm: energy above the real domain");
  const double scale = 1.0 / (2.0 * p.hbar * p.alpha);
  SpectralParams sp;
  sp.LE = -0.5 + std::sqrt(0.25 + 2.0 * p.mass * v.V2 / (p.hbar * p.hbar * p.alpha * p.alpha));
  sp.M1 = scale * (std::sqrt(plus) + std::sqrt(minus));
  sp.M2 = scale * (std::sqrt(plus) - std::sqrt(minus));
  return sp;
}

/// 2F1(M1 - L_E0, L_E0 + M1 + 1; M1 + M2 + 1; q/(1+q)), zero at the s-wave levels.
inline double rm_quantization(const MoleculeParams& p, double E, const specfun::SeriesControl& ctl = {}) {
  const auto sp = spectral_params_rm(p, E);
  return specfun::gauss_2f1(sp.M1 - sp.LE, sp.LE + sp.M1 + 1.0, sp.M1 + sp.M2 + 1.0, p.q / (1.0 + p.q), ctl);
}

inline specfun::ScaledReal rm_quantization_scaled(const MoleculeParams& p, double E,
                                                  const specfun::SeriesControl& ctl = {}) {
  const auto sp = spectral_params_rm(p, E);
  return specfun::gauss_2f1_scaled(sp.M1 - sp.LE, sp.LE + sp.M1 + 1.0, sp.M1 + sp.M2 + 1.0, p.q / (1.0 + p.q), ctl);
}

inline std::vector<BoundState> solve_transcendental_rm(const MoleculeParams& p, const RootSearchConfig& cfg) {
  cfg.validate();
  const auto regime = classify(p);
  if (regime.tag != RegimeTag::DeformedRosenMorse) throw RegimeError("solve_transcendental_rm: requires q > 0");
  const auto v = rosen_morse_constants(p);
  const double real_top = std::min(v.V0 + v.V1 + v.V2, v.V0 - v.V1 + v.V2);
  const double lo = std::max(0.0, cfg.e_min);
  const double hi = std::min({p.De, cfg.e_max, real_top});
  if (!(lo < hi)) return {};
  const auto roots = detail::scan_and_bisect([&](double E) { return rm_quantization_scaled(p, E); }, lo, hi, cfg);
  return detail::label_roots(roots, regime);
}

// ---------------------------------------------------------------------------
// q == 0

/// sqrt(2 M De) / (2 hbar alpha)
inline double morse_lambda(const MoleculeParams& p) {
  return std::sqrt(2.0 * p.mass * p.De) / (2.0 * p.hbar * p.alpha);
}

inline int morse_max_quantum_number(const MoleculeParams& p) {
  const double bound = morse_lambda(p) - 0.5;
  if (!(bound > 0.0)) return -1;
  return static_cast<int>(std::ceil(bound)) - 1;
}

inline double morse_energy(const MoleculeParams& p, int nr) {
  const double v = nr + 0.5;
  return -2.0 * p.hbar * p.hbar * p.alpha * p.alpha / p.mass *
         (v * v - v * std::sqrt(2.0 * p.mass * p.De) / (p.hbar * p.alpha));
}

inline std::vector<BoundState> morse_energies(const MoleculeParams& p) {
  const auto regime = classify(p);
  if (regime.tag != RegimeTag::Morse) throw RegimeError("morse_energies: requires q = 0");
  std::vector<BoundState> out;
  for (int nr = 0; nr <= morse_max_quantum_number(p); ++nr)
    out.push_back({nr, 0, morse_energy(p, nr), regime, SolutionMethod::MorseFormula, 0.0});
  return out;
}

}  // namespace tietz

#endif  // TIETZ_SPECTRUM_HPP_
