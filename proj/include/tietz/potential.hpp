// SPDX-License-Identifier: Apache-2.0
//
// The improved Tietz potential
//
//   V(r) = De (1 - (e^{2 alpha re} + q) / (e^{2 alpha r} + q))^2
//
// its deformed Manning-Rosen (q < 0) and Rosen-Morse (q > 0) rewritings, the
// 1/r^2 approximation used for l > 0 and the resulting effective potential.
#ifndef TIETZ_POTENTIAL_HPP_
#define TIETZ_POTENTIAL_HPP_

#include <algorithm>
#include <cmath>
#include <string>
#include <string_view>

#include "tietz/errors.hpp"

namespace tietz {

/// Physical inputs in one caller-chosen consistent unit system.
struct MoleculeParams {
  double De = 0.0;     ///< dissociation energy
  double re = 0.0;     ///< equilibrium bond length
  double alpha = 0.0;  ///< inverse range
  double q = 0.0;      ///< deformation parameter
  double mass = 1.0;   ///< reduced mass
  double hbar = 1.0;

  void validate() const {
    const auto positive = [](double v) { return std::isfinite(v) && v > 0.0; };
    if (!positive(De)) throw DomainError("MoleculeParams: De must be positive and finite");
    if (!positive(re)) throw DomainError("MoleculeParams: re must be positive and finite");
    if (!positive(alpha)) throw DomainError("MoleculeParams: alpha must be positive and finite");
    if (!positive(mass)) throw DomainError("MoleculeParams: mass must be positive and finite");
    if (!positive(hbar)) throw DomainError("MoleculeParams: hbar must be positive and finite");
    if (!std::isfinite(q)) throw DomainError("MoleculeParams: q must be finite");
  }

  /// hbar^2 / (2 M)
  double kinetic_scale() const { return hbar * hbar / (2.0 * mass); }

  friend bool operator==(const MoleculeParams&, const MoleculeParams&) = default;
};

enum class RegimeTag {
  DeformedManningRosenStrong,  // q <= -1
  DeformedManningRosenWeak,    // -1 < q < 0
  DeformedRosenMorse,          // q > 0
  Morse,                       // q == 0
};

inline std::string_view to_string(RegimeTag tag) {
  switch (tag) {
    case RegimeTag::DeformedManningRosenStrong: return "deformed-manning-rosen-strong";
    case RegimeTag::DeformedManningRosenWeak: return "deformed-manning-rosen-weak";
    case RegimeTag::DeformedRosenMorse: return "deformed-rosen-morse";
    case RegimeTag::Morse: return "morse";
  }
  return "unknown";
}

struct Regime {
  RegimeTag tag;
  double r0;  ///< singularity radius ln|q| / (2 alpha) when |q| >= 1, else 0

  /// Left end of the radial domain.
  double floor() const { return r0; }
};

inline Regime classify(const MoleculeParams& p) {
  const double r0 = std::max(0.0, std::log(std::abs(p.q)) / (2.0 * p.alpha));
  if (p.q == 0.0) return {RegimeTag::Morse, 0.0};
  if (p.q > 0.0) return {RegimeTag::DeformedRosenMorse, 0.0};
  if (p.q <= -1.0) return {RegimeTag::DeformedManningRosenStrong, r0};
  return {RegimeTag::DeformedManningRosenWeak, 0.0};
}

enum class HyperbolicKind { Sinh, Cosh, Tanh, Coth };

/// q-deformed hyperbolic functions: sinh_q x = (e^x - q e^-x)/2,
/// cosh_q x = (e^x + q e^-x)/2, tanh_q = sinh_q/cosh_q, coth_q = cosh_q/sinh_q.
inline double deformed_hyperbolic(HyperbolicKind kind, double q, double x) {
  const double ep = std::exp(x);
  const double em = q * std::exp(-x);
  const double s = 0.5 * (ep - em);
  const double c = 0.5 * (ep + em);
  // sinh_q and cosh_q vanish at x = ln(+-q)/2
  const auto pole = [&](double v) { return std::abs(v) <= 1e-15 * (std::abs(ep) + std::abs(em)); };
  switch (kind) {
    case HyperbolicKind::Sinh: return s;
    case HyperbolicKind::Cosh: return c;
    case HyperbolicKind::Tanh:
      if (pole(c)) throw PoleError("tanh_q: cosh_q vanishes", 0.5 * std::log(-q));
      return s / c;
    case HyperbolicKind::Coth:
      if (pole(s)) throw PoleError("coth_q: sinh_q vanishes", 0.5 * std::log(q));
      return c / s;
  }
  return 0.0;
}

namespace detail {

// Distance from r0 inside which evaluation of a singular potential is refused,
// in units of 1/alpha.
inline constexpr double kPoleGuard = 1e-9;

inline void check_pole(const MoleculeParams& p, double r) {
  if (p.q < -1.0) {
    const double r0 = std::log(-p.q) / (2.0 * p.alpha);
    if (std::abs(r - r0) < kPoleGuard / p.alpha)
      throw PoleError("potential evaluated at its singularity", r0);
  }
}

}  // namespace detail

inline double tietz_potential(const MoleculeParams& p, double r) {
  if (!(r > 0.0)) throw DomainError("tietz_potential: r must be positive");
  detail::check_pole(p, r);
  const double ratio = (std::exp(2.0 * p.alpha * p.re) + p.q) / (std::exp(2.0 * p.alpha * r) + p.q);
  const double d = 1.0 - ratio;
  return p.De * d * d;
}

inline double morse_potential(const MoleculeParams& p, double r) {
  if (p.q != 0.0) throw RegimeError("morse_potential: requires q = 0");
  const double d = -std::expm1(-2.0 * p.alpha * (r - p.re));
  return p.De * d * d;
}

/// Constants of V = U0 - U1 coth_|q|(alpha r) + U2 coth^2_|q|(alpha r).
struct ManningRosenConstants {
  double U0, U1, U2;
};

inline ManningRosenConstants manning_rosen_constants(const MoleculeParams& p) {
  if (!(p.q < 0.0)) throw RegimeError("manning_rosen_constants: requires q < 0");
  const double x = std::exp(2.0 * p.alpha * p.re) / (-p.q);
  return {0.25 * p.De * (x + 1.0) * (x + 1.0), 0.5 * p.De * (x + 1.0) * (x - 1.0),
          0.25 * p.De * (x - 1.0) * (x - 1.0)};
}

/// Constants of V = V0 + V1 tanh_q(alpha r) + V2 tanh^2_q(alpha r).
struct RosenMorseConstants {
  double V0, V1, V2;
};

inline RosenMorseConstants rosen_morse_constants(const MoleculeParams& p) {
  if (!(p.q > 0.0)) throw RegimeError("rosen_morse_constants: requires q > 0");
  const double x = std::exp(2.0 * p.alpha * p.re) / p.q;
  return {0.25 * p.De * (x - 1.0) * (x - 1.0), 0.5 * p.De * (1.0 + x) * (1.0 - x),
          0.25 * p.De * (x + 1.0) * (x + 1.0)};
}

enum class CentrifugalScheme { GreeneAldrich, TaylorMatch };

inline std::string_view to_string(CentrifugalScheme s) {
  return s == CentrifugalScheme::GreeneAldrich ? "greene-aldrich" : "taylor-match";
}

/// 1/r^2 ~ C0 + B0/(e^{2 alpha r} - |q|) + A0/(e^{2 alpha r} - |q|)^2
struct CentrifugalCoeffs {
  double A0 = 0.0;
  double B0 = 0.0;
  double C0 = 0.0;
  CentrifugalScheme scheme = CentrifugalScheme::GreeneAldrich;
};

/// GreeneAldrich: (A0, B0, C0) = (alpha^2 q^2, alpha^2 |q|, 0).
/// TaylorMatch: C0 = alpha^2/12 and (A0, B0) chosen so that the
/// approximation matches 1/r^2 and its slope at r = re.
inline CentrifugalCoeffs centrifugal_coeffs(CentrifugalScheme scheme, const MoleculeParams& p) {
  if (!(p.q <= -1.0)) throw RegimeError("centrifugal_coeffs: requires q <= -1");
  const double aq = -p.q;
  const double a2 = p.alpha * p.alpha;
  if (scheme == CentrifugalScheme::GreeneAldrich) return {a2 * aq * aq, a2 * aq, 0.0, scheme};

  const double c0 = a2 / 12.0;
  const double y = std::exp(2.0 * p.alpha * p.re);
  const double u = 1.0 / (y - aq);
  const double du = -2.0 * p.alpha * y * u * u;  // d/dr of u
  // [u    u^2    ] [B0]   [1/re^2 - C0]
  // [u'   2 u u' ] [A0] = [-2/re^3    ]
  const double det = u * u * du;
  if (!(std::abs(det) > 0.0) || !std::isfinite(det))
    throw Error("centrifugal_coeffs: singular Taylor-match system (internal)");
  const double rhs0 = 1.0 / (p.re * p.re) - c0;
  const double rhs1 = -2.0 / (p.re * p.re * p.re);
  const double b0 = (rhs0 * 2.0 * u * du - u * u * rhs1) / det;
  const double a0 = (u * rhs1 - du * rhs0) / det;
  return {a0, b0, c0, scheme};
}

/// Right-hand side of the 1/r^2 approximation.
inline double centrifugal_approximation(const CentrifugalCoeffs& cc, const MoleculeParams& p, double r) {
  const double u = 1.0 / (std::exp(2.0 * p.alpha * r) + p.q);
  return cc.C0 + cc.B0 * u + cc.A0 * u * u;
}

/// V_eff ~ V0l - V1l coth_|q|(alpha r) + V2l / sinh^2_|q|(alpha r)
struct EffectivePotentialCoeffs {
  double V0l, V1l, V2l;
};

inline EffectivePotentialCoeffs effective_coeffs(const MoleculeParams& p, int l, const CentrifugalCoeffs& cc) {
  if (!(p.q <= -1.0)) throw RegimeError("effective_coeffs: requires q <= -1");
  if (l < 0) throw DomainError("effective_coeffs: l must be non-negative");
  const auto u = manning_rosen_constants(p);
  const double aq = -p.q;
  const double rot = p.hbar * p.hbar * l * (l + 1.0) / p.mass;  // hbar^2 l(l+1) / M
  const double skew = cc.A0 / aq - cc.B0;
  return {0.5 * rot * (cc.C0 + skew / (2.0 * aq)) + u.U0 + u.U2,
          0.25 * rot * skew / aq + u.U1,
          0.125 * rot * cc.A0 / aq + aq * u.U2};
}

/// Effective potential rebuilt from (V0l, V1l, V2l).
inline double effective_potential(const MoleculeParams& p, int l, const CentrifugalCoeffs& cc, double r) {
  if (!(r > 0.0)) throw DomainError("effective_potential: r must be positive");
  detail::check_pole(p, r);
  const auto v = effective_coeffs(p, l, cc);
  const double aq = -p.q;
  const double x = p.alpha * r;
  const double s = deformed_hyperbolic(HyperbolicKind::Sinh, aq, x);
  const double c = deformed_hyperbolic(HyperbolicKind::Cosh, aq, x);
  return v.V0l - v.V1l * c / s + v.V2l / (s * s);
}

/// Tietz potential plus the approximated centrifugal term, evaluated directly.
inline double approximated_radial_potential(const MoleculeParams& p, int l, const CentrifugalCoeffs& cc, double r) {
  return tietz_potential(p, r) + p.kinetic_scale() * l * (l + 1.0) * centrifugal_approximation(cc, p, r);
}

/// Tietz potential plus the exact centrifugal term.
inline double true_radial_potential(const MoleculeParams& p, int l, double r) {
  return tietz_potential(p, r) + p.kinetic_scale() * l * (l + 1.0) / (r * r);
}

}  // namespace tietz

#endif  // TIETZ_POTENTIAL_HPP_
