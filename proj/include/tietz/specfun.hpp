// SPDX-License-Identifier: Apache-2.0
//
// Real-argument special functions: log-gamma, Gauss 2F1, Kummer 1F1 and
// Jacobi polynomials.  Everything here is a pure function.
#ifndef TIETZ_SPECFUN_HPP_
#define TIETZ_SPECFUN_HPP_

#include <algorithm>
#include <array>
#include <climits>
#include <cmath>
#include <limits>
#include <numbers>
#include <utility>

#include "tietz/errors.hpp"

namespace tietz::specfun {

/// Termination policy for hypergeometric series.
struct SeriesControl {
  int max_terms = 20000;
  double abs_tol = 1e-300;
  double rel_tol = 1e-15;

  void validate() const {
    if (max_terms < 1) throw DomainError("SeriesControl: max_terms must be >= 1");
    if (!(abs_tol >= 0.0) || !(rel_tol >= 0.0))
      throw DomainError("SeriesControl: tolerances must be non-negative");
    if (abs_tol == 0.0 && rel_tol == 0.0)
      throw DomainError("SeriesControl: one tolerance must be positive");
  }
};

/// Half-width around an integer value of c-a-b inside which the z -> 1-z
/// connection formula is treated as degenerate.
inline constexpr double kDegenerateWidth = 1e-6;

namespace detail {

inline bool is_nonpositive_integer(double x) {
  return x <= 0.0 && x == std::floor(x);
}

// ln Gamma(1 + t) for |t| <= 0.25 from the zeta-value Taylor series; keeps
// full relative accuracy next to the zeros of ln Gamma at 1 and 2.
inline double ln_gamma_1p_small(double t) {
  static constexpr std::array<double, 25> zeta = {
      1.6449340668482264365, 1.2020569031595942854, 1.0823232337111381915,
      1.0369277551433699263, 1.0173430619844491397, 1.0083492773819228268,
      1.0040773561979443394, 1.0020083928260822144, 1.0009945751278180853,
      1.0004941886041194646, 1.0002460865533080483, 1.0001227133475784891,
      1.0000612481350587048, 1.0000305882363070205, 1.0000152822594086519,
      1.0000076371976378998, 1.0000038172932649998, 1.0000019082127165539,
      1.0000009539620338728, 1.0000004769329867878, 1.0000002384505027277,
      1.0000001192199259653, 1.0000000596081890513, 1.0000000298035035147,
      1.0000000149015548284};
  constexpr double euler_gamma = 0.57721566490153286061;
  // sum_{k>=2} (-t)^k zeta(k) / k, highest order first
  double acc = 0.0;
  for (int k = static_cast<int>(zeta.size()) + 1; k >= 2; --k) {
    acc = acc * (-t) + zeta[static_cast<std::size_t>(k - 2)] / k;
  }
  return -euler_gamma * t + acc * t * t;
}

// Lanczos approximation, g = 7, nine coefficients; valid for x >= 0.5.
inline double ln_gamma_lanczos(double x) {
  static constexpr std::array<double, 9> p = {
      0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
      771.32342877765313,   -176.61502916214059,   12.507343278686905,
      -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};
  constexpr double g = 7.0;
  const double xm1 = x - 1.0;
  double series = p[0];
  for (std::size_t i = 1; i < p.size(); ++i) series += p[i] / (xm1 + static_cast<double>(i));
  const double t = xm1 + g + 0.5;
  return 0.5 * std::log(2.0 * std::numbers::pi) + (xm1 + 0.5) * std::log(t) - t +
         std::log(series);
}

// Stirling series in extended precision for x >= 10, where ln Gamma is large
// enough that a double-precision (x - 1/2) ln x already costs an ulp.
inline double ln_gamma_stirling(double x) {
  // B_{2k} / (2k (2k - 1))
  static constexpr std::array<long double, 8> c = {
      1.0L / 12, -1.0L / 360, 1.0L / 1260, -1.0L / 1680,
      1.0L / 1188, -691.0L / 360360, 1.0L / 156, -3617.0L / 122400};
  const long double lx = x;
  const long double inv2 = 1.0L / (lx * lx);
  long double tail = 0.0L;
  for (std::size_t k = c.size(); k-- > 0;) tail = tail * inv2 + c[k];
  constexpr long double half_log_2pi = 0.918938533204672741780329736405617639861L;
  return static_cast<double>((lx - 0.5L) * std::log(lx) - lx + half_log_2pi + tail / lx);
}

}  // namespace detail

/// ln Gamma(x) for x > 0.
inline double ln_gamma(double x) {
  if (!std::isfinite(x) || x <= 0.0)
    throw DomainError("ln_gamma: argument must be finite and positive");
  if (std::abs(x - 1.0) <= 0.25) return detail::ln_gamma_1p_small(x - 1.0);
  if (std::abs(x - 2.0) <= 0.25) {
    const double t = x - 2.0;
    return std::log1p(t) + detail::ln_gamma_1p_small(t);
  }
  if (x < 0.5) return ln_gamma(x + 1.0) - std::log(x);
  if (x >= 10.0) return detail::ln_gamma_stirling(x);
  return detail::ln_gamma_lanczos(x);
}

namespace detail {

// ln Gamma in extended precision for the connection formula: shift to
// x >= 30 by the recurrence, then Stirling.
inline long double ln_gamma_ext(long double x) {
  long double shift = 0.0L;
  long double prod = 1.0L;
  while (x < 30.0L) {
    prod *= x;
    x += 1.0L;
    if (prod > 1e300L) {
      shift += std::log(prod);
      prod = 1.0L;
    }
  }
  shift += std::log(prod);
  static constexpr std::array<long double, 9> c = {
      1.0L / 12, -1.0L / 360, 1.0L / 1260, -1.0L / 1680, 1.0L / 1188,
      -691.0L / 360360, 1.0L / 156, -3617.0L / 122400, 43867.0L / 244188};
  const long double inv2 = 1.0L / (x * x);
  long double tail = 0.0L;
  for (std::size_t k = c.size(); k-- > 0;) tail = tail * inv2 + c[k];
  constexpr long double half_log_2pi = 0.918938533204672741780329736405617639861L;
  return (x - 0.5L) * std::log(x) - x + half_log_2pi + tail / x - shift;
}

inline long double sin_pi_ext(long double x) {
  if (x == std::floor(x)) return 0.0L;
  long double r = std::fmod(x, 2.0L);
  if (r < 0.0L) r += 2.0L;
  long double sign = 1.0L;
  if (r > 1.0L) {
    r -= 1.0L;
    sign = -1.0L;
  }
  if (r > 0.5L) r = 1.0L - r;
  constexpr long double pi = 3.141592653589793238462643383279502884L;
  return sign * std::sin(pi * r);
}

struct SignedLnGamma {
  long double log_abs;
  int sign;  // 0 at the poles of Gamma
};

// ln|Gamma(x)| and sign(Gamma(x)) for any real x, via reflection for x < 0.
inline SignedLnGamma signed_ln_gamma(long double x) {
  if (x > 0.0L) return {ln_gamma_ext(x), 1};
  if (x == std::floor(x)) return {std::numeric_limits<long double>::infinity(), 0};
  const long double s = sin_pi_ext(x);
  constexpr long double log_pi = 1.144729885849400174143427351353058711647L;
  return {log_pi - std::log(std::abs(s)) - ln_gamma_ext(1.0L - x), s > 0.0L ? 1 : -1};
}

inline void require_finite(double v, const char* what) {
  if (!std::isfinite(v)) throw DomainError(what);
}

template <class Real>
bool is_nonpositive_integer_t(Real x) {
  return x <= 0 && x == std::floor(x);
}

// Finite sum of a terminating 2F1 (a = -n).
template <class Real>
Real gauss_polynomial(Real a, Real b, Real c, Real z) {
  const int degree = static_cast<int>(-a);
  Real term = 1;
  Real sum = 1;
  for (int k = 0; k < degree; ++k) {
    term *= (a + k) * (b + k) / ((c + k) * (k + Real(1))) * z;
    sum += term;
  }
  return sum;
}

// Plain power series of 2F1 around z = 0, any |z| < 1.
template <class Real>
Real gauss_series(Real a, Real b, Real c, Real z, const SeriesControl& ctl) {
  constexpr Real eps = std::numeric_limits<Real>::epsilon();
  Real term = 1;
  Real sum = 1;
  Real largest = 1;
  int quiet = 0;
  for (int n = 0; n < ctl.max_terms; ++n) {
    const Real num = (a + n) * (b + n);
    const Real den = (c + n) * (n + Real(1));
    term *= num / den * z;
    sum += term;
    if (term == 0) return sum;
    if (!std::isfinite(sum))
      throw ConvergenceError("gauss_2f1: series overflow", n + 1, static_cast<double>(std::abs(term)));
    largest = std::max(largest, std::abs(term));
    const bool shrinking = std::abs(num * z) < std::abs(den);
    const Real tol = std::max({Real(ctl.abs_tol), Real(ctl.rel_tol) * std::abs(sum), Real(0.01) * eps * largest});
    if (shrinking && std::abs(term) <= tol) {
      if (++quiet == 2) return sum;
    } else {
      quiet = 0;
    }
  }
  throw ConvergenceError("gauss_2f1: series did not converge", ctl.max_terms, static_cast<double>(std::abs(term)));
}

template <class Real>
Real gauss_any_series(Real a, Real b, Real c, Real z, const SeriesControl& ctl) {
  if (is_nonpositive_integer_t(a)) return gauss_polynomial(a, b, c, z);
  if (is_nonpositive_integer_t(b)) return gauss_polynomial(b, a, c, z);
  return gauss_series(a, b, c, z, ctl);
}

}  // namespace detail

/// 2F1(a, b; c; z) by its defining power series, for any z in (-1, 1).
inline double gauss_2f1_direct(double a, double b, double c, double z,
                               const SeriesControl& ctl = {}) {
  ctl.validate();
  if (detail::is_nonpositive_integer(c))
    throw DomainError("gauss_2f1: c must not be a non-positive integer");
  if (!(z > -1.0 && z < 1.0)) throw DomainError("gauss_2f1: z must lie in (-1, 1)");
  if (z == 0.0) return 1.0;
  return detail::gauss_any_series(a, b, c, z, ctl);
}

/// 2F1(a, b; c; z) through the z -> 1 - z connection formula
///
///   F(a,b;c;z) = G(c)G(c-a-b)/(G(c-a)G(c-b)) F(a,b;a+b-c+1;1-z)
///              + G(c)G(a+b-c)/(G(a)G(b)) (1-z)^(c-a-b) F(c-a,c-b;c-a-b+1;1-z)
///
/// with both right-hand series summed directly.  The two terms can cancel
/// heavily, so the whole evaluation runs in long double.  Throws
/// DegenerateParameterError when c-a-b is within kDegenerateWidth of an
/// integer.
inline double gauss_2f1_transformed(double a, double b, double c, double z,
                                    const SeriesControl& ctl = {}) {
  using ext = long double;
  ctl.validate();
  if (detail::is_nonpositive_integer(c))
    throw DomainError("gauss_2f1: c must not be a non-positive integer");
  if (!(z > 0.0 && z < 1.0)) throw DomainError("gauss_2f1: transformation needs z in (0, 1)");
  const ext A = a, B = b, C = c;
  const ext m = C - A - B;
  if (std::abs(m - std::nearbyint(m)) < kDegenerateWidth)
    throw DegenerateParameterError("gauss_2f1: c-a-b is (nearly) an integer");
  const ext w = 1.0L - static_cast<ext>(z);
  const auto gc = detail::signed_ln_gamma(C);
  // the cancellation between the terms would amplify a double-level cutoff
  SeriesControl sub = ctl;
  sub.rel_tol = std::min(ctl.rel_tol, 1e-19);

  ext first = 0.0L;
  {
    const auto g_num = detail::signed_ln_gamma(m);
    const auto g_ca = detail::signed_ln_gamma(C - A);
    const auto g_cb = detail::signed_ln_gamma(C - B);
    if (g_ca.sign != 0 && g_cb.sign != 0) {
      const ext f = detail::gauss_any_series(A, B, 1.0L - m, w, sub);
      if (f != 0.0L) {
        const int sign = gc.sign * g_num.sign * g_ca.sign * g_cb.sign;
        first = sign * f * std::exp(gc.log_abs + g_num.log_abs - g_ca.log_abs - g_cb.log_abs);
      }
    }
  }
  ext second = 0.0L;
  {
    const auto g_num = detail::signed_ln_gamma(-m);
    const auto g_a = detail::signed_ln_gamma(A);
    const auto g_b = detail::signed_ln_gamma(B);
    if (g_a.sign != 0 && g_b.sign != 0) {
      const ext f = detail::gauss_any_series(C - A, C - B, 1.0L + m, w, sub);
      if (f != 0.0L) {
        const int sign = gc.sign * g_num.sign * g_a.sign * g_b.sign;
        second = sign * f * std::exp(gc.log_abs + g_num.log_abs - g_a.log_abs - g_b.log_abs + m * std::log(w));
      }
    }
  }
  return static_cast<double>(first + second);
}

/// Below this distance of c-a-b from an integer the connection formula is
/// too ill-conditioned even in long double.
inline constexpr double kConnectionSafeDistance = 1e-3;

/// Gauss hypergeometric function 2F1(a, b; c; z) for real parameters and
/// z in (-1, 1).
///
/// Terminating series are summed as polynomials.  Otherwise the power series
/// is used for z <= 1/2 and the connection formula for z > 1/2.  When c-a-b
/// lies within kConnectionSafeDistance of an integer the connection formula
/// is degenerate or ill-conditioned, and the power series is summed instead
/// with a term budget scaled by 1/(1-z).
inline double gauss_2f1(double a, double b, double c, double z, const SeriesControl& ctl = {}) {
  ctl.validate();
  detail::require_finite(a + b + c + z, "gauss_2f1: non-finite argument");
  if (detail::is_nonpositive_integer(c))
    throw DomainError("gauss_2f1: c must not be a non-positive integer");
  if (!(z > -1.0 && z < 1.0)) throw DomainError("gauss_2f1: z must lie in (-1, 1)");
  if (z == 0.0) return 1.0;
  if (detail::is_nonpositive_integer(a)) return detail::gauss_polynomial(a, b, c, z);
  if (detail::is_nonpositive_integer(b)) return detail::gauss_polynomial(b, a, c, z);
  if (b < a) std::swap(a, b);  // one canonical order, so F(a,b) and F(b,a) are the same evaluation
  if (z <= 0.5) return detail::gauss_series(a, b, c, z, ctl);

  const double m = c - a - b;
  if (std::abs(m - std::nearbyint(m)) >= kConnectionSafeDistance) return gauss_2f1_transformed(a, b, c, z, ctl);

  SeriesControl wide = ctl;
  const double budget = std::min(1e8, 80.0 / (1.0 - z));
  wide.max_terms = std::max(ctl.max_terms, static_cast<int>(budget));
  return detail::gauss_series(a, b, c, z, wide);
}

/// mantissa * exp(log_scale), for values outside the double range.
struct ScaledReal {
  double mantissa = 0.0;
  double log_scale = 0.0;

  double log_abs() const { return std::log(std::abs(mantissa)) + log_scale; }
  bool negative() const { return std::signbit(mantissa); }
  double value() const { return mantissa * std::exp(log_scale); }
};

namespace detail {

// Power series in long double, renormalized whenever the partial sum grows
// past 1e4000.
inline ScaledReal gauss_series_rescaled(double a, double b, double c, double z, long max_terms) {
  using ext = long double;
  constexpr ext kCeiling = 1e4000L;
  const ext A = a, B = b, C = c, Z = z;
  ext term = 1.0L;
  ext sum = 1.0L;
  ext largest = 1.0L;
  ext log_scale = 0.0L;
  int quiet = 0;
  for (long n = 0; n < max_terms; ++n) {
    const ext num = (A + n) * (B + n);
    const ext den = (C + n) * (n + 1.0L);
    term *= num / den * Z;
    sum += term;
    if (term == 0.0L) break;
    largest = std::max(largest, std::abs(term));
    if (largest > kCeiling) {
      term /= kCeiling;
      sum /= kCeiling;
      largest /= kCeiling;
      log_scale += std::log(kCeiling);
    }
    const bool shrinking = std::abs(num * Z) < std::abs(den);
    const ext tol = std::max(1e-16L * std::abs(sum), 1e-3L * std::numeric_limits<ext>::epsilon() * largest);
    if (shrinking && std::abs(term) <= tol) {
      if (++quiet == 2) break;
    } else {
      quiet = 0;
    }
    if (n + 1 == max_terms)
      throw ConvergenceError("gauss_2f1_scaled: series did not converge", static_cast<int>(std::min<long>(n + 1, INT_MAX)),
                             static_cast<double>(std::abs(term)));
  }
  if (sum == 0.0L) return {0.0, 0.0};
  const ext shift = std::floor(std::log(std::abs(sum)));
  return {static_cast<double>(sum / std::exp(shift)), static_cast<double>(log_scale + shift)};
}

}  // namespace detail

/// 2F1(a, b; c; z) as a mantissa and a log scale.  Equal to gauss_2f1 with
/// log_scale = 0 whenever that result is finite; otherwise the power series
/// is summed with renormalization.
inline ScaledReal gauss_2f1_scaled(double a, double b, double c, double z, const SeriesControl& ctl = {}) {
  try {
    const double v = gauss_2f1(a, b, c, z, ctl);
    if (std::isfinite(v)) return {v, 0.0};
  } catch (const ConvergenceError&) {
  }
  // terms peak near k ~ (a + b - c) / -ln z and then fall off geometrically
  const double peak = std::abs(a + b - c) / -std::log(std::abs(z));
  const double budget = std::min(4e8, 4.0 * peak + 200.0 / (1.0 - std::abs(z)));
  return detail::gauss_series_rescaled(a, b, c, z, std::max<long>(ctl.max_terms, static_cast<long>(budget)));
}

/// Largest |z| accepted by kummer_1f1.
inline constexpr double kKummerMaxArgument = 700.0;

/// Kummer confluent hypergeometric function 1F1(a; c; z).  For z < 0 the
/// Kummer transformation e^z 1F1(c-a; c; -z) removes the alternating series.
inline double kummer_1f1(double a, double c, double z, const SeriesControl& ctl = {}) {
  ctl.validate();
  detail::require_finite(a + c + z, "kummer_1f1: non-finite argument");
  if (detail::is_nonpositive_integer(c))
    throw DomainError("kummer_1f1: c must not be a non-positive integer");
  if (std::abs(z) > kKummerMaxArgument)
    throw DomainError("kummer_1f1: |z| > 700 would overflow; evaluate in log space");
  if (z == 0.0) return 1.0;

  const bool terminating = detail::is_nonpositive_integer(a);
  if (!terminating && z < 0.0) return std::exp(z) * kummer_1f1(c - a, c, -z, ctl);

  constexpr double eps = std::numeric_limits<double>::epsilon();
  double term = 1.0;
  double sum = 1.0;
  double largest = 1.0;
  int quiet = 0;
  for (int n = 0; n < ctl.max_terms; ++n) {
    const double num = a + n;
    const double den = (c + n) * (n + 1.0);
    term *= num / den * z;
    sum += term;
    if (term == 0.0) return sum;
    if (!std::isfinite(sum)) throw ConvergenceError("kummer_1f1: series overflow", n + 1, std::abs(term));
    largest = std::max(largest, std::abs(term));
    const bool shrinking = std::abs(num * z) < std::abs(den);
    const double tol = std::max({ctl.abs_tol, ctl.rel_tol * std::abs(sum), 0.01 * eps * largest});
    if (shrinking && std::abs(term) <= tol) {
      if (++quiet == 2) return sum;
    } else {
      quiet = 0;
    }
  }
  throw ConvergenceError("kummer_1f1: series did not converge", ctl.max_terms, std::abs(term));
}

namespace detail {

// Binomial coefficient with real upper argument and integer lower argument.
inline double binomial(double x, int k) {
  double out = 1.0;
  for (int j = 1; j <= k; ++j) out *= (x - k + j) / j;
  return out;
}

// Explicit finite-sum form; used when a recurrence denominator vanishes.
inline double jacobi_explicit(int n, double alpha, double beta, double t) {
  const double lo = 0.5 * (t - 1.0);
  const double hi = 0.5 * (t + 1.0);
  double sum = 0.0;
  for (int s = 0; s <= n; ++s) {
    sum += binomial(n + alpha, n - s) * binomial(n + beta, s) * std::pow(lo, s) * std::pow(hi, n - s);
  }
  return sum;
}

}  // namespace detail

/// Jacobi polynomial P_n^(alpha, beta)(t) by the three-term recurrence.
inline double jacobi_poly(int n, double alpha, double beta, double t) {
  if (n < 0) throw DomainError("jacobi_poly: degree must be non-negative");
  detail::require_finite(alpha + beta + t, "jacobi_poly: non-finite argument");
  if (n == 0) return 1.0;
  const double ab = alpha + beta;
  double prev = 1.0;
  double cur = (alpha + 1.0) + (ab + 2.0) * (t - 1.0) / 2.0;
  for (int k = 2; k <= n; ++k) {
    const double s = 2.0 * k + ab;
    const double a1 = 2.0 * k * (k + ab) * (s - 2.0);
    if (a1 == 0.0) return detail::jacobi_explicit(n, alpha, beta, t);
    const double a2 = (s - 1.0) * (alpha * alpha - beta * beta);
    const double a3 = (s - 2.0) * (s - 1.0) * s;
    const double a4 = 2.0 * (k + alpha - 1.0) * (k + beta - 1.0) * s;
    const double next = ((a2 + a3 * t) * cur - a4 * prev) / a1;
    prev = cur;
    cur = next;
  }
  return cur;
}

}  // namespace tietz::specfun

#endif  // TIETZ_SPECFUN_HPP_
