// SPDX-License-Identifier: Apache-2.0
//
// Reduced radial wavefunctions chi(r) for every regime.
#ifndef TIETZ_WAVEFN_HPP_
#define TIETZ_WAVEFN_HPP_

#include <cmath>
#include <functional>
#include <vector>

#include "tietz/errors.hpp"
#include "tietz/grid.hpp"
#include "tietz/potential.hpp"
#include "tietz/specfun.hpp"
#include "tietz/spectrum.hpp"

namespace tietz {

namespace detail {

// Indices shared by both closed-form representations of a q <= -1 state.
struct StrongIndices {
  double delta;   // delta_l
  double lambda;  // lambda_l
  double N;       // nr + delta_l + 1/2
  double kappa;   // lambda_l / N - N, the decay index
};

inline StrongIndices strong_indices(const MoleculeParams& p, int nr, int l, const CentrifugalCoeffs& cc) {
  if (nr < 0 || nr > max_quantum_number(p, l, cc))
    throw NoSuchStateError("strong wavefunction: nr beyond the bound-state cutoff");
  const double delta = strong_delta(p, l, cc);
  const double lambda = strong_lambda(p, l, cc);
  const double N = nr + delta + 0.5;
  return {delta, lambda, N, lambda / N - N};
}

inline double strong_variable(const MoleculeParams& p, double r, double* log_z) {
  const double r0 = classify(p).r0;
  if (!(r > r0)) throw DomainError("strong wavefunction: r must exceed the singularity radius");
  *log_z = std::log(-p.q) - 2.0 * p.alpha * r;
  return std::exp(*log_z);
}

}  // namespace detail

/// Normalized q <= -1 state in its Jacobi-polynomial form,
///   chi = C (|q|e^{-2ar})^{kappa/2} (1 - |q|e^{-2ar})^{delta+1/2} P_n^{(kappa, 2 delta)}(1 - 2|q|e^{-2ar}).
inline double wf_strong(const MoleculeParams& p, int nr, int l, const CentrifugalCoeffs& cc, double r) {
  const auto s = detail::strong_indices(p, nr, l, cc);
  double log_z = 0.0;
  const double z = detail::strong_variable(p, r, &log_z);
  using specfun::ln_gamma;
  const double log_c2 = std::log(p.alpha) - std::log(s.N) + std::log(s.lambda / s.N + s.N) + std::log(s.kappa) +
                        ln_gamma(nr + 1.0) + ln_gamma(s.lambda / s.N + s.N - nr) - ln_gamma(2.0 * s.N - nr) -
                        ln_gamma(1.0 + nr + s.kappa);
  const double log_env = 0.5 * log_c2 + 0.5 * s.kappa * log_z + (s.delta + 0.5) * std::log1p(-z);
  return std::exp(log_env) * specfun::jacobi_poly(nr, s.kappa, 2.0 * s.delta, 1.0 - 2.0 * z);
}

/// The same state written with a terminating 2F1 and its own normalization
/// constant.  Agrees with wf_strong through the Jacobi/2F1 connection.
inline double wf_strong_hypergeometric(const MoleculeParams& p, int nr, int l, const CentrifugalCoeffs& cc,
                                       double r) {
  const auto s = detail::strong_indices(p, nr, l, cc);
  double log_z = 0.0;
  const double z = detail::strong_variable(p, r, &log_z);
  using specfun::ln_gamma;
  const double b = s.lambda / s.N + s.N - nr;
  const double log_c2 = std::log(p.alpha) - std::log(s.N) + std::log(s.lambda / s.N + s.N) + std::log(s.kappa) +
                        ln_gamma(b) + ln_gamma(1.0 + nr + s.kappa) - ln_gamma(nr + 1.0) - ln_gamma(2.0 * s.N - nr) -
                        2.0 * ln_gamma(1.0 + s.kappa);
  const double log_env = 0.5 * log_c2 + 0.5 * s.kappa * log_z + (s.delta + 0.5) * std::log1p(-z);
  return std::exp(log_env) * specfun::gauss_2f1(-nr, b, s.kappa + 1.0, z);
}

/// Unnormalized s-wave for -1 < q < 0 at a root of weak_quantization.
inline double wf_weak(const MoleculeParams& p, double E_root, double r) {
  if (!(r > 0.0)) throw DomainError("wf_weak: r must be positive");
  const auto sp = spectral_params_weak(p, E_root);
  const double kappa = sp.M1 - sp.M2;
  const double log_z = std::log(-p.q) - 2.0 * p.alpha * r;
  const double z = std::exp(log_z);
  const double log_env = (*sp.delta_l + 0.5) * std::log1p(-z) + 0.5 * kappa * log_z;
  return std::exp(log_env) * specfun::gauss_2f1(sp.M1 - sp.LE, sp.LE + sp.M1 + 1.0, kappa + 1.0, z);
}

/// Unnormalized s-wave for q > 0 at a root of rm_quantization.
inline double wf_rm(const MoleculeParams& p, double E_root, double r) {
  if (!(r > 0.0)) throw DomainError("wf_rm: r must be positive");
  const auto sp = spectral_params_rm(p, E_root);
  const double k_out = sp.M1 + sp.M2;  // sqrt(2M(De - E)) / (hbar alpha)
  const double k_in = sp.M1 - sp.M2;   // sqrt(2M(De e^{4 alpha re}/q^2 - E)) / (hbar alpha)
  const double log_w = std::log(p.q) - 2.0 * p.alpha * r;  // q e^{-2 alpha r}
  const double w = std::exp(log_w);
  const double l1p = std::log1p(w);
  const double log_env = 0.5 * k_out * (log_w - l1p) - 0.5 * k_in * l1p;
  return std::exp(log_env) * specfun::gauss_2f1(sp.M1 - sp.LE, sp.LE + sp.M1 + 1.0, k_out + 1.0, w / (1.0 + w));
}

/// Unnormalized Morse state
///   chi = exp(-z/2) x^{lambda - n - 1/2} 1F1(-n; 2 lambda - 2n; z),
///   x = e^{-2 alpha (r - re)}, z = 2 lambda x.
inline double wf_morse(const MoleculeParams& p, int nr, double r) {
  if (classify(p).tag != RegimeTag::Morse) throw RegimeError("wf_morse: requires q = 0");
  if (nr < 0 || nr > morse_max_quantum_number(p)) throw NoSuchStateError("wf_morse: nr beyond the cutoff");
  const double lambda = morse_lambda(p);
  const double power = lambda - nr - 0.5;
  const double c = 2.0 * lambda - 2.0 * nr;
  const double log_x = -2.0 * p.alpha * (r - p.re);
  const double z = 2.0 * lambda * std::exp(log_x);
  if (z <= specfun::kKummerMaxArgument)
    return std::exp(-0.5 * z + power * log_x) * specfun::kummer_1f1(-nr, c, z);

  // Large z: sum the terminating polynomial in powers of 1/z and carry z^n
  // in the exponent.
  double coeff = 1.0;
  std::vector<double> a(static_cast<std::size_t>(nr) + 1);
  a[0] = 1.0;
  for (int k = 0; k < nr; ++k) {
    coeff *= (k - nr) / ((c + k) * (k + 1.0));
    a[static_cast<std::size_t>(k) + 1] = coeff;
  }
  const double y = 1.0 / z;
  double poly = 0.0;
  for (int k = 0; k <= nr; ++k) poly = poly * y + a[static_cast<std::size_t>(k)];
  // poly = sum_k a_k z^{k - n}
  if (poly == 0.0) return 0.0;
  const double log_mag = -0.5 * z + power * log_x + nr * std::log(z) + std::log(std::abs(poly));
  return (poly > 0.0 ? 1.0 : -1.0) * std::exp(log_mag);
}

// ---------------------------------------------------------------------------
// Sampling

inline constexpr int kDefaultSamplePoints = 4001;

struct SamplingWindow {
  double r_lo;
  double r_hi;
};

/// [floor + 1e-6/alpha, floor + 60/alpha]
inline SamplingWindow default_window(const MoleculeParams& p) {
  const double floor = classify(p).floor();
  return {floor + 1e-6 / p.alpha, floor + 60.0 / p.alpha};
}

/// chi(r) of a bound state returned by the spectrum module.
inline std::function<double(double)> make_wavefunction(const MoleculeParams& p, const BoundState& s,
                                                       const CentrifugalCoeffs& cc = {}) {
  switch (s.regime.tag) {
    case RegimeTag::DeformedManningRosenStrong:
      return [p, s, cc](double r) { return wf_strong(p, s.nr, s.l, cc, r); };
    case RegimeTag::DeformedManningRosenWeak:
      return [p, s](double r) { return wf_weak(p, s.energy, r); };
    case RegimeTag::DeformedRosenMorse:
      return [p, s](double r) { return wf_rm(p, s.energy, r); };
    case RegimeTag::Morse:
      return [p, s](double r) { return wf_morse(p, s.nr, r); };
  }
  throw RegimeError("make_wavefunction: unknown regime");
}

}  // namespace tietz

#endif  // TIETZ_WAVEFN_HPP_
