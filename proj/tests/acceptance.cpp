// SPDX-License-Identifier: Apache-2.0
// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any line fails.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "support.hpp"
#include "tietz/cli.hpp"
#include "tietz/tietz.hpp"

using namespace tietz;
using tietz::testing::integrate;
using tietz::testing::rel_diff;
using tietz::testing::uniform;
using tietz::testing::uniform_int;

namespace {

int g_failed = 0;

void report(const char* id, bool pass, const char* what, double worst, double limit, const std::string& extra = "") {
  if (!pass) ++g_failed;
  std::printf("%-5s %s  %s: worst %.3g, limit %.3g%s\n", id, pass ? "PASS" : "FAIL", what, worst, limit,
              extra.c_str());
}

MoleculeParams desk(double q) { return {10.0, 1.2, 0.5, q, 1.0, 1.0}; }

oracle::OracleOptions options(const MoleculeParams& p) {
  oracle::OracleOptions opt;
  opt.length_scale = 1.0 / p.alpha;
  opt.floor_offset = p.q <= -1.0 ? 1e-4 / p.alpha : 0.0;
  return opt;
}

std::vector<double> oracle_below(const std::function<double(double)>& v, const MoleculeParams& p, int k,
                                 double threshold) {
  const auto s = oracle::solve_radial(v, classify(p).floor(), p.mass, p.hbar, k, true, options(p));
  std::vector<double> out;
  for (double e : s.best())
    if (e < threshold) out.push_back(e);
  return out;
}

std::vector<BoundState> roots(const MoleculeParams& p) {
  return p.q < 0 ? solve_transcendental_weak(p, default_root_search(p))
                 : solve_transcendental_rm(p, default_root_search(p));
}

// worst |E - E_oracle| / E over the roots, and whether the counts agree
double transcendental_vs_oracle(const MoleculeParams& p, bool* counts_agree) {
  const auto s = roots(p);
  const auto o = oracle_below([&](double r) { return tietz_potential(p, r); }, p, static_cast<int>(s.size()) + 4,
                              p.De);
  *counts_agree = o.size() == s.size();
  double worst = 0.0;
  for (std::size_t i = 0; i < std::min(s.size(), o.size()); ++i) worst = std::max(worst, rel_diff(s[i].energy, o[i]));
  return worst;
}

struct State {
  MoleculeParams p;
  BoundState s;
  CentrifugalCoeffs cc;
};

}  // namespace

int main() {
  const auto strong = desk(-2.0);
  const auto ga = centrifugal_coeffs(CentrifugalScheme::GreeneAldrich, strong);
  const double r0 = classify(strong).r0;

  // 1. closed form vs oracle on the effective potential
  {
    const auto start = std::chrono::steady_clock::now();
    double worst = 0.0;
    bool complete = true;
    for (int l = 0; l <= 2; ++l) {
      const auto levels = closed_form_spectrum(strong, l, ga);
      const auto o = oracle_below([&](double r) { return effective_potential(strong, l, ga, r); }, strong,
                                  static_cast<int>(levels.size()), std::numeric_limits<double>::infinity());
      complete = complete && o.size() == levels.size();
      for (std::size_t i = 0; i < std::min(o.size(), levels.size()); ++i)
        worst = std::max(worst, rel_diff(levels[i].energy, o[i]));
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    char extra[64];
    std::snprintf(extra, sizeof extra, ", %.2f s of 10 s", seconds);
    report("1", complete && worst <= 1e-6 && seconds <= 10.0, "strong closed form vs effective-potential oracle",
           worst, 1e-6, extra);
  }

  // 2. s-waves against the exact potential
  {
    const auto levels = closed_form_spectrum(strong, 0, ga);
    const auto o = oracle_below([&](double r) { return tietz_potential(strong, r); }, strong,
                                static_cast<int>(levels.size()), strong.De);
    double worst = o.size() == levels.size() ? 0.0 : 1.0;
    for (std::size_t i = 0; i < std::min(o.size(), levels.size()); ++i)
      worst = std::max(worst, rel_diff(levels[i].energy, o[i]));
    report("2", worst <= 1e-6, "s-wave closed form vs exact-potential oracle", worst, 1e-6);
  }

  // 3, 4. transcendental roots
  {
    bool counts = false;
    const double worst = transcendental_vs_oracle(desk(-0.5), &counts);
    report("3", counts && worst <= 1e-6, "weak regime q = -0.5 roots vs oracle", worst, 1e-6,
           counts ? ", counts agree" : ", COUNT MISMATCH");
  }
  {
    bool c1 = false, c3 = false;
    const double worst = std::max(transcendental_vs_oracle(desk(1.0), &c1), transcendental_vs_oracle(desk(3.0), &c3));
    report("4", c1 && c3 && worst <= 1e-6, "Rosen-Morse q = 1, 3 roots vs oracle", worst, 1e-6,
           c1 && c3 ? ", counts agree" : ", COUNT MISMATCH");
  }

  // 5. Morse limit
  {
    const auto near = desk(1e-4);
    const auto morse = desk(0.0);
    const auto s = roots(near);
    double worst_near = s.size() >= 3 ? 0.0 : 1.0;
    for (std::size_t i = 0; i < std::min<std::size_t>(3, s.size()); ++i)
      worst_near = std::max(worst_near, rel_diff(s[i].energy, morse_energy(morse, static_cast<int>(i))));
    report("5a", worst_near <= 1e-3, "q = 1e-4 lowest three roots vs Morse levels", worst_near, 1e-3);

    const auto levels = morse_energies(morse);
    const auto o = oracle_below([&](double r) { return morse_potential(morse, r); }, morse,
                                static_cast<int>(levels.size()), morse.De);
    double worst = o.size() == levels.size() ? 0.0 : 1.0;
    for (std::size_t i = 0; i < std::min(o.size(), levels.size()); ++i)
      worst = std::max(worst, rel_diff(levels[i].energy, o[i]));
    report("5b", worst <= 1e-4, "q = 0 Morse levels vs half-line oracle", worst, 1e-4);
  }

  // 6. level count
  {
    int mismatches = 0;
    std::string counts;
    for (int l = 0; l <= 2; ++l) {
      const int top = max_quantum_number(strong, l, ga);
      const auto o = oracle_below([&](double r) { return effective_potential(strong, l, ga, r); }, strong, top + 6,
                                  std::numeric_limits<double>::infinity());
      if (static_cast<int>(o.size()) != top + 1) ++mismatches;
      counts += (l ? "/" : ", levels ") + std::to_string(top + 1) + ":" + std::to_string(o.size());
    }
    report("6", mismatches == 0, "cutoff count vs oracle bound-state count, l = 0..2", mismatches, 0, counts);
  }

  // 7. wavefunctions of every state above
  {
    std::vector<State> strong_states, other_states, morse_states;
    for (int l = 0; l <= 2; ++l)
      for (const auto& s : closed_form_spectrum(strong, l, ga)) strong_states.push_back({strong, s, ga});
    for (double q : {-0.5, 1.0, 3.0, 1e-4})
      for (const auto& s : roots(desk(q))) other_states.push_back({desk(q), s, {}});
    for (const auto& s : morse_energies(desk(0.0))) morse_states.push_back({desk(0.0), s, {}});

    int node_errors = 0;
    double boundary = 0.0, morse_boundary = 0.0;
    const auto check = [&](const State& st, double node_threshold, double front_r, double* worst) {
      const auto f = make_wavefunction(st.p, st.s, st.cc);
      const auto w = default_window(st.p);
      const auto raw = sample(f, w.r_lo, w.r_hi, kDefaultSamplePoints);
      const auto g = normalize_grid(raw);
      if (count_nodes(g, node_threshold) != st.s.nr) ++node_errors;
      const double scale = std::sqrt(g.quadrature_norm / raw.quadrature_norm);
      const double peak = g.max_abs();
      *worst = std::max({*worst, std::abs(f(front_r)) * scale / peak, std::abs(g.values.front()) / peak,
                         std::abs(g.values.back()) / peak});
    };
    // q <= -1: the singular floor itself; q > -1: chi grows linearly from r = 0, read at 1e-8 / alpha
    for (const auto& st : strong_states) check(st, kNodeThreshold, r0 + 1e-9 / strong.alpha, &boundary);
    double boundary_other = 0.0;
    for (const auto& st : other_states) {
      // a double-precision root leaves sign noise of ~1e-7 of the peak near r = 0
      const auto f = make_wavefunction(st.p, st.s);
      const auto w = default_window(st.p);
      const auto raw = sample(f, w.r_lo, w.r_hi, kDefaultSamplePoints);
      const auto g = normalize_grid(raw);
      if (count_nodes(g, 1e-6) != st.s.nr) ++node_errors;
      const double scale = std::sqrt(g.quadrature_norm / raw.quadrature_norm);
      boundary_other = std::max({boundary_other, std::abs(f(1e-8 / st.p.alpha)) * scale / g.max_abs(),
                                 std::abs(g.values.back()) / g.max_abs()});
    }
    for (const auto& st : morse_states) check(st, kNodeThreshold, 1e-8 / st.p.alpha, &morse_boundary);
    const std::size_t total = strong_states.size() + other_states.size() + morse_states.size();
    report("7a", node_errors == 0, "node count = nr", node_errors, 0, ", " + std::to_string(total) + " states");
    report("7b", std::max(boundary, boundary_other) <= 1e-6, "boundary values, q = -2, -0.5, 1e-4, 1, 3",
           std::max(boundary, boundary_other), 1e-6);
    report("7c", morse_boundary <= 1e-6, "boundary values, q = 0 (chi(0) of the Morse form)", morse_boundary, 1e-6);

    double norm = 0.0, overlap = 0.0, forms = 0.0;
    for (const auto& a : strong_states) {
      const int l = a.s.l;
      norm = std::max(norm, std::abs(integrate(
                                         [&](double r) {
                                           const double v = wf_strong(strong, a.s.nr, l, ga, r);
                                           return v * v;
                                         },
                                         r0 + 1e-12, r0 + 60.0 / strong.alpha, 1e-13, 256) -
                                     1.0));
      for (const auto& b : strong_states) {
        if (b.s.l != l || b.s.nr <= a.s.nr) continue;
        overlap = std::max(overlap, std::abs(integrate(
                                        [&](double r) {
                                          return wf_strong(strong, a.s.nr, l, ga, r) * wf_strong(strong, b.s.nr, l, ga, r);
                                        },
                                        r0 + 1e-12, r0 + 60.0 / strong.alpha, 1e-13, 256)));
      }
      for (double t : {0.01, 0.1, 0.3, 1.0, 2.5, 6.0, 15.0, 30.0}) {
        const double r = r0 + t / strong.alpha;
        const double jac = wf_strong(strong, a.s.nr, l, ga, r);
        const double hyp = wf_strong_hypergeometric(strong, a.s.nr, l, ga, r);
        // at a polynomial node the relative error is measured against the envelope
        const double env = std::abs(wf_strong(strong, 0, l, ga, r)) + std::abs(jac);
        forms = std::max(forms, std::abs(jac - hyp) / std::max(std::abs(jac), 1e-3 * env));
      }
    }
    report("7d", norm <= 1e-6, "strong normalization by quadrature, |int chi^2 - 1|", norm, 1e-6);
    report("7e", overlap <= 1e-6, "strong orthogonality", overlap, 1e-6);
    report("7f", forms <= 1e-10, "Jacobi form vs hypergeometric form", forms, 1e-10);
  }

  // 8. special functions, 1000 draws each
  {
    using namespace specfun;
    double zero = 0.0, sym = 0.0, conn = 0.0, endpoint = 0.0, recur = 0.0;
    for (int i = 0; i < 1000; ++i) {
      zero = std::max(zero, std::abs(gauss_2f1(uniform(-5, 5), uniform(-5, 5), uniform(0.1, 10.0), 0.0) - 1.0));

      const double a = uniform(-4, 4), b = uniform(-4, 4), c = uniform(0.3, 6), z = uniform(-0.9, 0.9);
      sym = std::max(sym, rel_diff(gauss_2f1(a, b, c, z), gauss_2f1(b, a, c, z)));

      double ca, cb, cc, m;
      do {
        ca = uniform(-2.5, 2.5), cb = uniform(-2.5, 2.5), cc = uniform(0.5, 4.0);
        m = cc - ca - cb;
      } while (std::abs(m - std::nearbyint(m)) < 0.1);
      const double cz = uniform(0.05, 0.45);
      const double direct = gauss_2f1_direct(ca, cb, cc, cz);
      conn = std::max(conn, std::abs(direct - gauss_2f1_transformed(ca, cb, cc, cz)) / std::max(1.0, std::abs(direct)));

      const int n = uniform_int(0, 25);
      const double al = uniform(-0.9, 20), be = uniform(-0.9, 20);
      const double expected = std::exp(ln_gamma(n + al + 1.0) - ln_gamma(n + 1.0) - ln_gamma(al + 1.0));
      endpoint = std::max(endpoint, rel_diff(jacobi_poly(n, al, be, 1.0), expected));

      const double x = uniform(0.5, 100.0);
      recur = std::max(recur, std::abs(ln_gamma(x + 1.0) - ln_gamma(x) - std::log(x)));
    }
    const bool pass = zero == 0.0 && sym <= 1e-14 && conn <= 1e-10 && endpoint <= 1e-12 && recur <= 1e-13;
    char extra[160];
    std::snprintf(extra, sizeof extra,
                  " (2F1(z=0) %.2g exact; symmetry %.2g/1e-14; connection %.2g/1e-10; endpoint %.2g/1e-12; "
                  "recurrence %.2g/1e-13)",
                  zero, sym, conn, endpoint, recur);
    const double worst = std::max({sym / 1e-14, conn / 1e-10, endpoint / 1e-12, recur / 1e-13});
    report("8", pass, "special-function invariants, 1000 draws, worst/limit", worst, 1.0, extra);
  }

  // 9. algebraic identities, 1000 draws, relative to the magnitude of the terms that are summed
  {
    using K = HyperbolicKind;
    double worst = 0.0;
    const auto random_params = [](double q_lo, double q_hi) {
      MoleculeParams p{uniform(0.5, 50.0), uniform(0.5, 3.0), uniform(0.2, 2.0), uniform(q_lo, q_hi),
                       uniform(0.5, 5.0), uniform(0.5, 2.0)};
      return p;
    };
    for (int i = 0; i < 1000; ++i) {
      const double q = uniform(-10, 10), x = uniform(-3, 3);
      const double ch = deformed_hyperbolic(K::Cosh, q, x), sh = deformed_hyperbolic(K::Sinh, q, x);
      worst = std::max(worst, std::abs(ch * ch - sh * sh - q) / std::max(1.0, ch * ch));

      auto pe = random_params(-10, 10);
      if (std::abs(pe.q + 1.0) > 1e-3) {
        if (pe.q < -1.0) pe.re = classify(pe).r0 + uniform(0.2, 3.0);
        worst = std::max(worst, std::abs(tietz_potential(pe, pe.re)) / pe.De);
      }

      const auto pm = random_params(-12, -0.05);
      const auto u = manning_rosen_constants(pm);
      const double xu = std::exp(4 * pm.alpha * pm.re) / (pm.q * pm.q);
      const double mu = std::abs(u.U0) + std::abs(u.U1) + std::abs(u.U2);
      worst = std::max({worst, std::abs(u.U0 + u.U1 + u.U2 - pm.De * xu) / mu, std::abs(u.U0 - u.U1 + u.U2 - pm.De) / mu});
      const double rm = classify(pm).r0 + uniform(0.01, 20.0) / pm.alpha;
      const double cth = deformed_hyperbolic(K::Coth, -pm.q, pm.alpha * rm);
      const double coth_form = u.U0 - u.U1 * cth + u.U2 * cth * cth;
      worst = std::max(worst, std::abs(coth_form - tietz_potential(pm, rm)) /
                                  std::max({std::abs(u.U0), std::abs(u.U1 * cth), u.U2 * cth * cth, pm.De}));

      const auto pr = random_params(0.01, 20);
      const auto v = rosen_morse_constants(pr);
      const double xv = std::exp(4 * pr.alpha * pr.re) / (pr.q * pr.q);
      const double mv = std::abs(v.V0) + std::abs(v.V1) + std::abs(v.V2);
      worst = std::max({worst, std::abs(v.V0 + v.V1 + v.V2 - pr.De) / mv, std::abs(v.V0 - v.V1 + v.V2 - pr.De * xv) / mv});
      const double rr = uniform(1e-3, 20.0) / pr.alpha;
      const double th = deformed_hyperbolic(K::Tanh, pr.q, pr.alpha * rr);
      const double tanh_form = v.V0 + v.V1 * th + v.V2 * th * th;
      worst = std::max(worst, std::abs(tanh_form - tietz_potential(pr, rr)) /
                                  std::max({v.V0, std::abs(v.V1 * th), v.V2 * th * th, pr.De}));
    }
    report("9", worst <= 1e-12, "potential identities, 1000 draws", worst, 1e-12);
  }

  // 10. oracle on a box of width L = 2
  {
    const double L = 2.0;
    oracle::OracleOptions opt;
    opt.window_scales = L;
    opt.bound_only = false;
    const auto s = oracle::solve_radial([](double) { return 0.0; }, 0.0, 1.0, 1.0, 6, true, opt);
    double worst = s.best().size() == 6 ? 0.0 : 1.0;
    for (std::size_t k = 0; k < s.best().size(); ++k) {
      const double n = static_cast<double>(k + 1);
      worst = std::max(worst, rel_diff(s.best()[k], n * n * std::numbers::pi * std::numbers::pi / (2.0 * L * L)));
    }
    report("10", worst <= 1e-6, "box spectrum n^2 pi^2 / 2L^2, refined grid, n = 1..6", worst, 1e-6);
  }

  std::printf("%d line(s) failed\n", g_failed);
  return g_failed == 0 ? 0 : 1;
}
