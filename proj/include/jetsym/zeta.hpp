#pragma once

#include <vector>

#include "jetsym/diffpoly.hpp"

namespace jetsym {

/// ζ^k = P̂^{k+1} 1 for k = 0..K, as polynomials in the Burgers jets, and the
/// inverse table expressing v_k through the symbols ζ_0..ζ_k.
struct ZetaBasis {
  int max_index = 0;
  std::vector<DiffPoly> zetas;        // zetas[k] in v-jets
  std::vector<DiffPoly> jets_in_zeta; // jets_in_zeta[k] = v_k in ζ symbols
};

ZetaBasis build_zetas(int max_index);

/// D_x on polynomials in (t, x, ζ_j): ∂_x + Σ_j (ζ_{j+1} − ζ_0 ζ_j) ∂_{ζ_j}.
DiffPoly zeta_dx(const DiffPoly& q);

struct ZetaIdentityReport {
  /// D_x ζ^k − (ζ^{k+1} − ζ^0 ζ^k)
  std::vector<DiffPoly> derivative_residuals;
  /// (D_t + vD_x − D_x²) ζ^k
  std::vector<DiffPoly> potential_residuals;
  bool all_zero() const;
};

/// Checks both identities for every k ≤ max_index, in parallel over k.
ZetaIdentityReport verify_zeta_identities(int max_index);

/// Rewrites a v-jet polynomial in the ζ symbols. Throws OrderExceeded when the
/// order of p exceeds the basis.
DiffPoly to_zeta_coordinates(const DiffPoly& p, const ZetaBasis& basis);
/// Inverse substitution ζ_k ↦ ζ^k(v).
DiffPoly from_zeta_coordinates(const DiffPoly& q, const ZetaBasis& basis);

}  // namespace jetsym
