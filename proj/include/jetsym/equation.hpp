#pragma once

#include <optional>
#include <string>
#include <vector>

#include "jetsym/diffpoly.hpp"
#include "jetsym/exppoly.hpp"

namespace jetsym {

enum class EquationKind { Heat, PotentialBurgers, Burgers };

/// An evolution equation z_t = L[z] with L a polynomial in the jet variables.
///
/// D_x^k(L) is precomputed for every k up to the jet limit at construction,
/// after which the object is immutable and every operation on it is pure.
class EvolutionEquation {
 public:
  static constexpr std::uint32_t kDefaultJetLimit = 64;

  EvolutionEquation(std::string name, EquationKind kind, DiffPoly rhs,
                    std::uint32_t jet_limit = kDefaultJetLimit);

  static const EvolutionEquation& heat();
  static const EvolutionEquation& potential_burgers();
  static const EvolutionEquation& burgers();
  static const EvolutionEquation& from_name(const std::string& name);

  const std::string& name() const { return name_; }
  EquationKind kind() const { return kind_; }
  const DiffPoly& rhs() const { return rhs_; }
  int rhs_order() const { return rhs_.order(); }
  std::uint32_t jet_limit() const { return jet_limit_; }
  /// Parameter-function symbols are admitted only in the heat and potential
  /// Burgers rings.
  bool admits_parameters() const { return kind_ != EquationKind::Burgers; }

  /// D_x^k(rhs) for k ≤ jet_limit.
  const DiffPoly& rhs_derivative(std::uint32_t k) const;

  /// Text notation: u, w or v for the dependent variable.
  Notation notation() const;

  friend bool operator==(const EvolutionEquation& a, const EvolutionEquation& b) { return &a == &b; }

 private:
  std::string name_;
  EquationKind kind_;
  DiffPoly rhs_;
  std::uint32_t jet_limit_;
  std::vector<DiffPoly> rhs_derivatives_;
};

enum class Family { HeatQ, PotentialQ, BurgersQ, HeatZ, PotentialZ };

/// Label of a family member. For the Z families (k, l) selects the parameter
/// function G^k D_x^l h and `slot` chooses between h (0) and a second solution (1).
struct FamilyIndex {
  Family family = Family::HeatQ;
  int k = 0;
  int l = 0;
  int slot = 0;
  friend bool operator==(const FamilyIndex&, const FamilyIndex&) = default;
};

std::string family_name(Family f);
Family parse_family(const std::string& name);
const EvolutionEquation& family_equation(Family f);

/// Reduced characteristic of an evolutionary symmetry η ∂_z. The body uses
/// only t, x, jet variables and parameter-function symbols.
struct Characteristic {
  Characteristic(const EvolutionEquation& eq, ExpPoly body, std::optional<FamilyIndex> label = std::nullopt);

  const EvolutionEquation* equation;
  ExpPoly body;
  std::optional<FamilyIndex> label;

  const DiffPoly& poly() const { return body.as_poly(); }
};

/// ∂_x + Σ z_{k+1}∂_{z_k} + Σ h_{j+1}∂_{h_j}: the equation-independent total
/// x-derivative, also valid on zeta-free polynomials of the free jet ring.
DiffPoly free_dx(const DiffPoly& p);

/// On-shell total x-derivative. Parameter symbols shift index (h_j ↦ h_{j+1}).
DiffPoly dx(const EvolutionEquation& eq, const DiffPoly& p);
/// On-shell total t-derivative; h_j ↦ h_{j+2} since h solves the heat equation.
DiffPoly dt(const EvolutionEquation& eq, const DiffPoly& p);
DiffPoly dx_power(const EvolutionEquation& eq, const DiffPoly& p, unsigned n);

ExpPoly dx(const EvolutionEquation& eq, const ExpPoly& e);
ExpPoly dt(const EvolutionEquation& eq, const ExpPoly& e);

/// Σ_k ∂F/∂z_k · D_x^k(η). F must be free of parameter symbols.
DiffPoly frechet(const EvolutionEquation& eq, const DiffPoly& F, const DiffPoly& eta);
ExpPoly frechet(const EvolutionEquation& eq, const DiffPoly& F, const ExpPoly& eta);

/// D_t η − L'[η]; zero exactly when η is a generalized symmetry.
ExpPoly invariance_residual(const EvolutionEquation& eq, const ExpPoly& eta);
ExpPoly invariance_residual(const Characteristic& eta);
DiffPoly invariance_residual(const EvolutionEquation& eq, const DiffPoly& eta);

}  // namespace jetsym
