// SPDX-License-Identifier: Apache-2.0
//
// Sampled radial functions.  Deliberately free of any special-function code
// so the finite-difference oracle can use it.
#ifndef TIETZ_GRID_HPP_
#define TIETZ_GRID_HPP_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

#include "tietz/errors.hpp"

namespace tietz {

struct GridFunction {
  std::vector<double> r_values;
  std::vector<double> values;
  bool normalized = false;
  double quadrature_norm = 0.0;  ///< integral of values^2 dr

  std::size_t size() const { return values.size(); }

  double max_abs() const {
    double m = 0.0;
    for (double v : values) m = std::max(m, std::abs(v));
    return m;
  }
};

/// Composite Simpson rule on equally spaced samples.  An even number of
/// samples closes with the 3/8 rule on the last three intervals.
inline double simpson(std::span<const double> y, double h) {
  const std::size_t n = y.size();
  if (n < 2) return 0.0;
  if (n == 2) return 0.5 * h * (y[0] + y[1]);
  if (n == 3) return h / 3.0 * (y[0] + 4.0 * y[1] + y[2]);
  std::size_t end = n;
  double tail = 0.0;
  if (n % 2 == 0) {
    end = n - 3;
    tail = 3.0 * h / 8.0 * (y[n - 4] + 3.0 * y[n - 3] + 3.0 * y[n - 2] + y[n - 1]);
    if (end == 1) return tail;
  }
  double s = y[0] + y[end - 1];
  for (std::size_t i = 1; i + 1 < end; ++i) s += (i % 2 == 1 ? 4.0 : 2.0) * y[i];
  return h / 3.0 * s + tail;
}

/// Simpson estimate of the integral of values^2 over a uniform grid.
inline double quadrature_norm(const std::vector<double>& r, const std::vector<double>& values) {
  if (r.size() < 2) return 0.0;
  std::vector<double> sq(values.size());
  std::transform(values.begin(), values.end(), sq.begin(), [](double v) { return v * v; });
  return simpson(sq, (r.back() - r.front()) / static_cast<double>(r.size() - 1));
}

/// Uniform samples of f on [r_lo, r_hi] with endpoints included.
template <class F>
GridFunction sample(F&& f, double r_lo, double r_hi, int n_points) {
  if (n_points < 2) throw DomainError("sample: need at least two points");
  if (!(r_lo < r_hi)) throw DomainError("sample: empty interval");
  GridFunction g;
  g.r_values.resize(static_cast<std::size_t>(n_points));
  g.values.resize(g.r_values.size());
  const double h = (r_hi - r_lo) / (n_points - 1);
  for (int i = 0; i < n_points; ++i) {
    const double r = i + 1 == n_points ? r_hi : r_lo + h * i;
    g.r_values[static_cast<std::size_t>(i)] = r;
    g.values[static_cast<std::size_t>(i)] = f(r);
  }
  g.quadrature_norm = quadrature_norm(g.r_values, g.values);
  return g;
}

inline GridFunction normalize_grid(GridFunction g) {
  if (!(g.quadrature_norm > 0.0) || !std::isfinite(g.quadrature_norm))
    throw DomainError("normalize_grid: function has zero norm");
  const double s = 1.0 / std::sqrt(g.quadrature_norm);
  for (double& v : g.values) v *= s;
  g.quadrature_norm = quadrature_norm(g.r_values, g.values);
  g.normalized = true;
  return g;
}

inline constexpr double kNodeThreshold = 1e-9;

/// Strict sign changes among samples with |value| >= threshold * max|value|.
inline int count_nodes(const GridFunction& g, double threshold = kNodeThreshold) {
  const double floor = threshold * g.max_abs();
  int nodes = 0;
  int last_sign = 0;
  for (double v : g.values) {
    if (std::abs(v) < floor || v == 0.0) continue;
    const int s = v > 0.0 ? 1 : -1;
    if (last_sign != 0 && s != last_sign) ++nodes;
    last_sign = s;
  }
  return nodes;
}

}  // namespace tietz

#endif  // TIETZ_GRID_HPP_
