#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "jetsym/equation.hpp"
#include "jetsym/operator.hpp"

namespace jetsym {

/// Builds a family member by operator application:
///   HEAT_Q      G^k P^l u
///   POT_Q       G̃^k P̃^l 1
///   BURGERS_Q   D_x Ĝ^k P̂^l 1   ((0,0) gives the zero characteristic)
///   HEAT_Z      G^k D_x^l h
///   POT_Z       (G^k D_x^l h) e^{−w}
Characteristic q_char(const FamilyIndex& idx);
inline Characteristic q_char(Family f, int k, int l, int slot = 0) { return q_char(FamilyIndex{f, k, l, slot}); }

/// Every Q-family member with k + l ≤ max_order, ordered by k + l then k.
/// BURGERS_Q skips (0,0). Computed eagerly; immutable afterwards.
class FamilyTable {
 public:
  FamilyTable(Family family, int max_order);

  Family family() const { return family_; }
  int max_order() const { return max_order_; }
  const std::vector<Characteristic>& members() const { return members_; }
  /// Member (k,l); for BURGERS_Q (0,0) returns the zero characteristic.
  const Characteristic& at(int k, int l) const;

 private:
  Family family_;
  int max_order_;
  std::vector<Characteristic> members_;
  std::map<std::pair<int, int>, std::size_t> index_;
  Characteristic zero_;
};

/// pr_η(ζ) = Σ_k D_x^k(η) ∂ζ/∂z_k. Parameter symbols are coefficients.
ExpPoly prolongation_action(const EvolutionEquation& eq, const ExpPoly& eta, const ExpPoly& zeta);

/// [η, ζ] = pr_η(ζ) − pr_ζ(η).
ExpPoly bracket(const EvolutionEquation& eq, const ExpPoly& eta, const ExpPoly& zeta);
Characteristic commutator(const EvolutionEquation& eq, const Characteristic& eta, const Characteristic& zeta);

/// Right-hand side of the closed-form commutation relations for the two
/// labelled members, with generators taken as `scale`·(family member):
///   [Q^{kl}, Q^{k'l'}] = Σ_i i!/2^i C(k,i)C(l',i) Q^{k+k'−i,l+l'−i} − (k,l)↔(k',l')
///   [Z(g), Q^{kl}]     = Z(G^k D_x^l g),   [Z, Z] = 0.
ExpPoly closed_form_bracket(const FamilyIndex& a, const FamilyIndex& b, const Rational& scale = 1);

/// [scale·a, scale·b] (computed by prolongation) minus closed_form_bracket(a, b, scale).
/// Zero means the relation holds for the generators scale·Q^{kl}.
Characteristic structure_check(const FamilyIndex& a, const FamilyIndex& b, const Rational& scale = 1);

struct StructureSweep {
  std::vector<std::pair<FamilyIndex, FamilyIndex>> pairs;
  std::vector<ExpPoly> residuals;
  std::size_t failures() const;
};

/// All ordered pairs of Q-family members with k+l ≤ max_order, residuals
/// evaluated in parallel.
StructureSweep structure_sweep(Family family, int max_order, const Rational& scale = 1);
StructureSweep structure_sweep_serial(Family family, int max_order, const Rational& scale = 1);

/// Point symmetry ξ^t ∂_t + ξ^x ∂_x + φ ∂_z with polynomial coefficients.
struct LieGenerator {
  std::string name;
  DiffPoly xi_t;
  DiffPoly xi_x;
  DiffPoly phi;
};

/// 𝒫^t, 𝒟, 𝒦, 𝒢^x, 𝒫^x, ℐ of the heat equation.
std::vector<LieGenerator> heat_essential_lie_algebra();

/// φ − ξ^t·rhs − ξ^x·z₁.
Characteristic evolution_form(const LieGenerator& g, const EvolutionEquation& eq);

}  // namespace jetsym
