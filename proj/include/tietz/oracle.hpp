// SPDX-License-Identifier: Apache-2.0
//
// Finite-difference reference solver for
//
//   -(hbar^2 / 2M) chi'' + V(r) chi = E chi,   chi = 0 at both grid ends,
//
// on a uniform grid: three-point Laplacian, Sturm-sequence bisection for the
// lowest eigenvalues, inverse iteration for the eigenvectors and h^2
// Richardson extrapolation.  Depends on nothing but a potential callable.
#ifndef TIETZ_ORACLE_HPP_
#define TIETZ_ORACLE_HPP_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <numeric>
#include <vector>

#include "tietz/errors.hpp"
#include "tietz/grid.hpp"

namespace tietz::oracle {

/// Interior points r_lo + (i+1) h, i = 0..n-1, with Dirichlet ends r_lo and r_hi.
struct RadialGrid {
  double r_lo = 0.0;
  double r_hi = 1.0;
  int n = 50;

  double h() const { return (r_hi - r_lo) / (n + 1); }
  double r(int i) const { return r_lo + (i + 1) * h(); }

  void validate() const {
    if (!(r_lo < r_hi)) throw DomainError("RadialGrid: r_lo must be below r_hi");
    if (n < 50) throw DomainError("RadialGrid: need at least 50 interior points");
  }

  /// Grid with half the spacing over the same interval.
  RadialGrid refined() const { return {r_lo, r_hi, 2 * n + 1}; }
};

struct SymTridiagonal {
  std::vector<double> diag;
  std::vector<double> off;  // off[i] couples i and i+1

  std::size_t size() const { return diag.size(); }

  double norm_inf() const {
    double m = 0.0;
    for (std::size_t i = 0; i < diag.size(); ++i) {
      double row = std::abs(diag[i]);
      if (i > 0) row += std::abs(off[i - 1]);
      if (i < off.size()) row += std::abs(off[i]);
      m = std::max(m, row);
    }
    return m;
  }
};

/// Three-point discretization: d_i = hbar^2/(M h^2) + V(r_i), e_i = -hbar^2/(2 M h^2).
template <class Potential>
SymTridiagonal discretize(Potential&& potential, const RadialGrid& grid, double mass, double hbar) {
  grid.validate();
  const double h = grid.h();
  const double kinetic = hbar * hbar / (mass * h * h);
  SymTridiagonal m;
  m.diag.resize(static_cast<std::size_t>(grid.n));
  m.off.assign(static_cast<std::size_t>(grid.n - 1), -0.5 * kinetic);
  for (int i = 0; i < grid.n; ++i) {
    const double v = potential(grid.r(i));
    if (!std::isfinite(v)) throw PoleError("discretize: potential is not finite on the grid", grid.r(i));
    m.diag[static_cast<std::size_t>(i)] = kinetic + v;
  }
  return m;
}

/// Number of eigenvalues strictly below x.
inline int sturm_count(const SymTridiagonal& m, double x) {
  const double tiny = std::numeric_limits<double>::min() / std::numeric_limits<double>::epsilon();
  int count = 0;
  double piv = 1.0;
  for (std::size_t i = 0; i < m.size(); ++i) {
    const double coupling = i == 0 ? 0.0 : m.off[i - 1] * m.off[i - 1] / piv;
    piv = m.diag[i] - x - coupling;
    if (piv == 0.0) piv = -tiny;
    if (piv < 0.0) ++count;
  }
  return count;
}

struct EigenPairs {
  std::vector<double> values;
  std::vector<std::vector<double>> vectors;  // scaled so sum(v^2) * spacing = 1
};

namespace detail {

// Solves (T - shift) x = b by Gaussian elimination with partial pivoting.
inline std::vector<double> shifted_solve(const SymTridiagonal& m, double shift, std::vector<double> b,
                                         double pivot_floor) {
  const std::size_t n = m.size();
  std::vector<double> d(n), du(n, 0.0), du2(n, 0.0), dl(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) d[i] = m.diag[i] - shift;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    dl[i] = m.off[i];
    du[i] = m.off[i];
  }
  // LU with row interchanges (the LAPACK gttrf pattern)
  std::vector<double> lmul(n, 0.0);
  std::vector<bool> swapped(n, false);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (std::abs(d[i]) >= std::abs(dl[i])) {
      if (d[i] == 0.0) d[i] = pivot_floor;
      const double f = dl[i] / d[i];
      lmul[i] = f;
      d[i + 1] -= f * du[i];
      du2[i] = 0.0;
    } else {
      swapped[i] = true;
      const double f = d[i] / dl[i];
      lmul[i] = f;
      d[i] = dl[i];
      const double tmp = du[i];
      du[i] = d[i + 1];
      d[i + 1] = tmp - f * d[i + 1];
      if (i + 2 < n) {
        du2[i] = du[i + 1];
        du[i + 1] = -f * du[i + 1];
      }
    }
  }
  if (n > 0 && std::abs(d[n - 1]) < pivot_floor) d[n - 1] = std::copysign(pivot_floor, d[n - 1] == 0.0 ? 1.0 : d[n - 1]);
  for (std::size_t i = 0; i < n; ++i)
    if (std::abs(d[i]) < pivot_floor) d[i] = std::copysign(pivot_floor, d[i] == 0.0 ? 1.0 : d[i]);
  // forward: apply L^{-1} P
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (swapped[i]) {
      const double tmp = b[i];
      b[i] = b[i + 1];
      b[i + 1] = tmp - lmul[i] * b[i + 1];
    } else {
      b[i + 1] -= lmul[i] * b[i];
    }
  }
  // back substitution with U (diagonal d, superdiagonals du, du2)
  for (std::size_t k = n; k-- > 0;) {
    double s = b[k];
    if (k + 1 < n) s -= du[k] * b[k + 1];
    if (k + 2 < n) s -= du2[k] * b[k + 2];
    b[k] = s / d[k];
  }
  return b;
}

inline double residual_inf(const SymTridiagonal& m, const std::vector<double>& x, double lambda) {
  double worst = 0.0;
  const std::size_t n = m.size();
  for (std::size_t i = 0; i < n; ++i) {
    double y = (m.diag[i] - lambda) * x[i];
    if (i > 0) y += m.off[i - 1] * x[i - 1];
    if (i + 1 < n) y += m.off[i] * x[i + 1];
    worst = std::max(worst, std::abs(y));
  }
  return worst;
}

}  // namespace detail

/// The k lowest eigenpairs of a symmetric tridiagonal matrix.
inline EigenPairs eigen_lowest(const SymTridiagonal& m, int k, double spacing = 1.0) {
  const int n = static_cast<int>(m.size());
  if (k < 1 || k > n) throw DomainError("eigen_lowest: k must lie in [1, n]");
  // Gershgorin enclosure
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (int i = 0; i < n; ++i) {
    const auto ui = static_cast<std::size_t>(i);
    double rad = 0.0;
    if (i > 0) rad += std::abs(m.off[ui - 1]);
    if (i + 1 < n) rad += std::abs(m.off[ui]);
    lo = std::min(lo, m.diag[ui] - rad);
    hi = std::max(hi, m.diag[ui] + rad);
  }
  const double norm = m.norm_inf();
  const double eps = std::numeric_limits<double>::epsilon();
  // Sturm counts stay accurate far below eps * norm for the graded matrices
  // a singular potential produces, so bisect to full resolution
  const double abs_floor = eps * eps * norm;

  EigenPairs out;
  double left = lo;
  for (int idx = 0; idx < k; ++idx) {
    // smallest x with at least idx+1 eigenvalues below it
    double a = left;
    double b = hi;
    for (int it = 0; it < 400; ++it) {
      const double mid = 0.5 * (a + b);
      if (b - a <= abs_floor || mid == a || mid == b) break;
      if (sturm_count(m, mid) >= idx + 1)
        b = mid;
      else
        a = mid;
    }
    out.values.push_back(0.5 * (a + b));
    left = a;
  }
  if (!std::is_sorted(out.values.begin(), out.values.end()))
    throw NumericError("eigen_lowest: bisection produced unsorted eigenvalues", 0);

  // inverse iteration, orthogonalized against earlier vectors
  const double pivot_floor = eps * norm;
  for (int idx = 0; idx < k; ++idx) {
    const double lambda = out.values[static_cast<std::size_t>(idx)];
    std::vector<double> x(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) x[static_cast<std::size_t>(i)] = 1.0 + 0.5 * std::sin(0.37 * i + 0.11 * idx);
    bool converged = false;
    for (int it = 0; it < 8; ++it) {
      x = detail::shifted_solve(m, lambda, std::move(x), pivot_floor);
      for (const auto& prev : out.vectors) {
        double dot = 0.0;
        for (int i = 0; i < n; ++i) dot += x[static_cast<std::size_t>(i)] * prev[static_cast<std::size_t>(i)];
        dot *= spacing;
        for (int i = 0; i < n; ++i) x[static_cast<std::size_t>(i)] -= dot * prev[static_cast<std::size_t>(i)];
      }
      double ss = 0.0;
      for (double v : x) ss += v * v;
      if (!(ss > 0.0) || !std::isfinite(ss)) break;
      const double scale = 1.0 / std::sqrt(ss);
      for (double& v : x) v *= scale;
      if (it >= 1 && detail::residual_inf(m, x, lambda) <= 1e-10 * norm) {
        converged = true;
        break;
      }
    }
    if (!converged) throw NumericError("eigen_lowest: inverse iteration stagnated", static_cast<std::size_t>(idx));
    const double to_continuum = 1.0 / std::sqrt(spacing);
    for (double& v : x) v *= to_continuum;
    out.vectors.push_back(std::move(x));
  }
  return out;
}

/// Grid and refinement settings of solve_radial.
struct OracleOptions {
  double length_scale = 1.0;   ///< 1/alpha
  double floor_offset = 0.0;   ///< Dirichlet point = floor + floor_offset
  double window_scales = 60.0; ///< r_hi = floor + window_scales * length_scale
  int n = 4000;                ///< interior points of the coarse grid
  bool bound_only = true;      ///< keep only eigenvalues below V(r_hi); off for a box
};

struct OracleSpectrum {
  std::vector<double> eigenvalues;          ///< on the finest grid used
  std::vector<GridFunction> eigenvectors;   ///< on the finest grid, ends included
  RadialGrid grid;                          ///< finest grid
  std::vector<double> coarse_eigenvalues;   ///< coarse grid, when refined
  std::vector<double> richardson_estimate;  ///< (4 E_{h/2} - E_h) / 3, when refined
  std::vector<GridFunction> richardson_vectors;  ///< same extrapolation on the coarse grid, when refined
  double threshold = 0.0;                   ///< V(r_hi), the continuum edge
  bool truncated = false;                   ///< fewer bound eigenvalues than requested

  /// Extrapolated eigenvalues when available, else the raw ones.
  const std::vector<double>& best() const {
    return richardson_estimate.empty() ? eigenvalues : richardson_estimate;
  }

  /// Extrapolated eigenvectors when available, else the raw ones.
  const std::vector<GridFunction>& best_vectors() const {
    return richardson_vectors.empty() ? eigenvectors : richardson_vectors;
  }
};

namespace detail {

// Interior samples plus the two Dirichlet zeros.
inline GridFunction with_ends(const RadialGrid& grid, const std::vector<double>& v) {
  GridFunction g;
  g.r_values.reserve(v.size() + 2);
  g.values.reserve(v.size() + 2);
  g.r_values.push_back(grid.r_lo);
  g.values.push_back(0.0);
  for (int i = 0; i < grid.n; ++i) {
    g.r_values.push_back(grid.r(i));
    g.values.push_back(v[static_cast<std::size_t>(i)]);
  }
  g.r_values.push_back(grid.r_hi);
  g.values.push_back(0.0);
  g.quadrature_norm = quadrature_norm(g.r_values, g.values);
  g.normalized = true;
  return g;
}

// (4 v_fine - v_coarse) / 3 on the coarse points; coarse point i is fine point 2i + 1.
inline std::vector<double> extrapolate_vector(const std::vector<double>& coarse, const std::vector<double>& fine) {
  double dot = 0.0;
  for (std::size_t i = 0; i < coarse.size(); ++i) dot += coarse[i] * fine[2 * i + 1];
  const double sign = dot < 0.0 ? -1.0 : 1.0;
  std::vector<double> out(coarse.size());
  for (std::size_t i = 0; i < coarse.size(); ++i) out[i] = (4.0 * sign * fine[2 * i + 1] - coarse[i]) / 3.0;
  return out;
}

template <class Potential>
EigenPairs bound_pairs(Potential& potential, const RadialGrid& grid, double mass, double hbar, int k,
                       double threshold, bool* truncated) {
  const auto m = discretize(potential, grid, mass, hbar);
  const int below = std::isfinite(threshold) ? sturm_count(m, threshold) : grid.n;
  const int take = std::min(k, below);
  *truncated = take < k;
  if (take == 0) return {};
  return eigen_lowest(m, take, grid.h());
}

}  // namespace detail

/// Lowest k bound eigenpairs of the radial problem on
/// [floor + floor_offset, floor + window_scales * length_scale].
template <class Potential>
OracleSpectrum solve_radial(Potential&& potential, double floor, double mass, double hbar, int k, bool refine,
                            const OracleOptions& opt = {}) {
  if (k < 1) throw DomainError("solve_radial: k must be positive");
  RadialGrid coarse{floor + opt.floor_offset, floor + opt.window_scales * opt.length_scale, opt.n};
  coarse.validate();
  OracleSpectrum out;
  out.threshold = potential(coarse.r_hi);
  const double cut = opt.bound_only ? out.threshold : std::numeric_limits<double>::infinity();

  bool truncated = false;
  auto pairs = detail::bound_pairs(potential, coarse, mass, hbar, k, cut, &truncated);
  RadialGrid used = coarse;
  if (refine && !pairs.values.empty()) {
    const RadialGrid fine = coarse.refined();
    bool fine_truncated = false;
    auto fine_pairs = detail::bound_pairs(potential, fine, mass, hbar, static_cast<int>(pairs.values.size()),
                                          cut, &fine_truncated);
    const std::size_t common = std::min(pairs.values.size(), fine_pairs.values.size());
    out.coarse_eigenvalues.assign(pairs.values.begin(), pairs.values.begin() + static_cast<long>(common));
    for (std::size_t i = 0; i < common; ++i) {
      out.richardson_estimate.push_back((4.0 * fine_pairs.values[i] - pairs.values[i]) / 3.0);
      auto g = detail::with_ends(coarse, detail::extrapolate_vector(pairs.vectors[i], fine_pairs.vectors[i]));
      // extrapolation preserves the norm only to the order of the error it removes
      const double s = 1.0 / std::sqrt(g.quadrature_norm);
      for (double& v : g.values) v *= s;
      g.quadrature_norm = quadrature_norm(g.r_values, g.values);
      out.richardson_vectors.push_back(std::move(g));
    }
    fine_pairs.values.resize(common);
    fine_pairs.vectors.resize(common);
    truncated = truncated || fine_truncated;
    pairs = std::move(fine_pairs);
    used = fine;
  }
  out.truncated = truncated;
  out.grid = used;
  out.eigenvalues = pairs.values;
  for (const auto& v : pairs.vectors) out.eigenvectors.push_back(detail::with_ends(used, v));
  return out;
}

}  // namespace tietz::oracle

#endif  // TIETZ_ORACLE_HPP_
