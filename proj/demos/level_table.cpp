// SPDX-License-Identifier: Apache-2.0
//
// s-wave levels of one molecule as q sweeps through the four regimes.
#include <cstdio>

#include "tietz/tietz.hpp"

int main() {
  using namespace tietz;
  for (double q : {-3.0, -1.0, -0.5, 0.0, 0.5, 2.0}) {
    const MoleculeParams p{10.0, 1.2, 0.5, q, 1.0, 1.0};
    const Regime regime = classify(p);
    std::vector<BoundState> levels;
    switch (regime.tag) {
      case RegimeTag::DeformedManningRosenStrong:
        levels = closed_form_spectrum(p, 0, centrifugal_coeffs(CentrifugalScheme::GreeneAldrich, p));
        break;
      case RegimeTag::DeformedManningRosenWeak:
        levels = solve_transcendental_weak(p, default_root_search(p));
        break;
      case RegimeTag::DeformedRosenMorse:
        levels = solve_transcendental_rm(p, default_root_search(p));
        break;
      case RegimeTag::Morse:
        levels = morse_energies(p);
        break;
    }
    std::printf("q = %5.2f  %-28s", q, std::string(to_string(regime.tag)).c_str());
    for (const auto& s : levels) std::printf("  %9.6f", s.energy);
    std::printf("\n");
  }
}
