#include "jetsym/colemap.hpp"

#include <vector>

#include "jetsym/errors.hpp"
#include "jetsym/operator.hpp"

namespace jetsym {

Characteristic heat_to_potential(const Characteristic& eta) {
  if (eta.equation->kind() != EquationKind::Heat) throw InvalidOperand("heat_to_potential expects a heat characteristic");
  const auto& pot = EvolutionEquation::potential_burgers();
  const auto p_tilde = ops::potential_p();

  std::vector<DiffPoly> factor{DiffPoly(1)};  // factor[k] = P̃^k 1
  ExpPoly result;
  for (const auto& [grade, poly] : eta.body.components()) {
    if (grade != 0) throw InvalidOperand("heat characteristics carry no exponential factors");
    for (const auto& term : poly.terms()) {
      DiffPoly image(term.coeff);
      std::vector<Monomial::Factor> kept;
      int weight = 0;
      for (const auto& f : term.monomial.factors()) {
        if (f.var.kind() != VarKind::Jet) {
          kept.push_back(f);
          continue;
        }
        const auto k = f.var.index();
        while (factor.size() <= k) factor.push_back(apply(p_tilde, pot, factor.back()));
        image *= pow(factor[k], f.exp);
        weight += static_cast<int>(f.exp);
      }
      image *= DiffPoly::monomial(Monomial::from_factors(std::move(kept)));
      result += ExpPoly::graded(std::move(image), weight - 1);
    }
  }
  std::optional<FamilyIndex> label;
  if (eta.label) {
    label = eta.label;
    label->family = eta.label->family == Family::HeatZ ? Family::PotentialZ : Family::PotentialQ;
  }
  return {pot, std::move(result), label};
}

DiffPoly w_jet_substitution(const DiffPoly& p) {
  if (p.contains(VarId::jet(0))) throw BareDependentVariable("w occurs undifferentiated; only w_x = -v/2 is defined");
  std::map<VarId, DiffPoly> rules;
  const int top = p.order();
  for (int j = 1; j <= top; ++j) rules.emplace(VarId::jet(j), sym::jet(j - 1).scaled(Rational(-1, 2)));
  return substitute(p, rules);
}

Characteristic potential_to_burgers(const Characteristic& eta, bool normalized) {
  if (eta.equation->kind() != EquationKind::PotentialBurgers)
    throw InvalidOperand("potential_to_burgers expects a potential Burgers characteristic");
  if (!eta.body.is_pure())
    throw NotProjectable("prolongation carries a factor e^{mw}, m != 0; not projectable to (t, x, w_x)");
  const auto& pot = EvolutionEquation::potential_burgers();
  const DiffPoly prolonged = dx(pot, eta.body.as_poly());
  if (prolonged.contains(VarKind::Par))
    throw NotProjectable("w_x coefficient depends on the parameter function; no Burgers counterpart");
  DiffPoly image;
  try {
    image = w_jet_substitution(prolonged);
  } catch (const BareDependentVariable&) {
    throw NotProjectable("w_x coefficient depends on w itself; not projectable to (t, x, w_x)");
  }
  image = image.scaled(normalized ? Rational(1) : Rational(-2));
  std::optional<FamilyIndex> label;
  if (eta.label && eta.label->family == Family::PotentialQ) label = FamilyIndex{Family::BurgersQ, eta.label->k, eta.label->l};
  return {EvolutionEquation::burgers(), std::move(image), label};
}

}  // namespace jetsym
