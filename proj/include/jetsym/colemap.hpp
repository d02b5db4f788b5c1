#pragma once

#include "jetsym/equation.hpp"

namespace jetsym {

/// Pull-back along u = e^w: u_k ↦ (P̃^k 1)·e^w, then multiply by e^{−w}.
/// Input over the heat equation, output over potential Burgers.
Characteristic heat_to_potential(const Characteristic& eta);

/// w_j ↦ −½ v_{j−1} for j ≥ 1. Throws BareDependentVariable if w occurs.
DiffPoly w_jet_substitution(const DiffPoly& p);

/// Push-forward along −2w_x = v: prolong to w_x, check that the w_x
/// coefficient D_x η is free of w, substitute, and multiply by −2 so that
/// 𝔔̃^{kl} ↦ −2𝔔̂^{kl}. Throws NotProjectable for exponential bodies (the 𝔷̃(h)
/// family) or when w survives. `normalized` divides the image by −2.
Characteristic potential_to_burgers(const Characteristic& eta, bool normalized = false);

}  // namespace jetsym
