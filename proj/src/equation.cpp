#include "jetsym/equation.hpp"

#include <stdexcept>

#include "jetsym/errors.hpp"

namespace jetsym {

namespace {

void validate(const EvolutionEquation& eq, const DiffPoly& p) {
  for (const auto& term : p.terms()) {
    for (const auto& f : term.monomial.factors()) {
      switch (f.var.kind()) {
        case VarKind::Par:
          if (!eq.admits_parameters())
            throw InvalidOperand("parameter-function symbols are not part of the " + eq.name() + " ring");
          break;
        case VarKind::Zeta:
          throw InvalidOperand("zeta symbols cannot be differentiated in the " + eq.name() + " ring");
        case VarKind::Jet:
          if (f.var.index() > eq.jet_limit())
            throw OrderExceeded("jet index " + std::to_string(f.var.index()) + " exceeds the limit " +
                                std::to_string(eq.jet_limit()));
          break;
        default: break;
      }
    }
  }
}

}  // namespace

DiffPoly free_dx(const DiffPoly& p) {
  std::vector<Term> out;
  out.reserve(p.size() * 2);
  for (const auto& term : p.terms()) {
    for (const auto& f : term.monomial.factors()) {
      switch (f.var.kind()) {
        case VarKind::T: break;
        case VarKind::X:
          out.push_back({term.monomial.with_exponent(f.var, f.exp - 1), term.coeff * f.exp});
          break;
        case VarKind::Zeta: throw InvalidOperand("zeta symbols have no free total derivative");
        default: {
          const auto lowered = term.monomial.with_exponent(f.var, f.exp - 1);
          out.push_back({lowered * Monomial::of(f.var.shifted(1)), term.coeff * f.exp});
        }
      }
    }
  }
  return DiffPoly::from_terms(std::move(out));
}

EvolutionEquation::EvolutionEquation(std::string name, EquationKind kind, DiffPoly rhs, std::uint32_t jet_limit)
    : name_(std::move(name)), kind_(kind), rhs_(std::move(rhs)), jet_limit_(jet_limit) {
  if (!rhs_.only_kinds({VarKind::Jet})) throw InvalidOperand("equation right-hand side must use jet variables only");
  rhs_derivatives_.reserve(jet_limit_ + 1);
  rhs_derivatives_.push_back(rhs_);
  for (std::uint32_t k = 1; k <= jet_limit_; ++k) rhs_derivatives_.push_back(free_dx(rhs_derivatives_.back()));
}

const EvolutionEquation& EvolutionEquation::heat() {
  static const EvolutionEquation eq("heat", EquationKind::Heat, sym::jet(2));
  return eq;
}

const EvolutionEquation& EvolutionEquation::potential_burgers() {
  static const EvolutionEquation eq("potburgers", EquationKind::PotentialBurgers, sym::jet(2) + pow(sym::jet(1), 2));
  return eq;
}

const EvolutionEquation& EvolutionEquation::burgers() {
  static const EvolutionEquation eq("burgers", EquationKind::Burgers, sym::jet(2) - sym::jet(0) * sym::jet(1));
  return eq;
}

const EvolutionEquation& EvolutionEquation::from_name(const std::string& name) {
  if (name == "heat") return heat();
  if (name == "potburgers") return potential_burgers();
  if (name == "burgers") return burgers();
  throw std::invalid_argument("unknown equation: " + name);
}

const DiffPoly& EvolutionEquation::rhs_derivative(std::uint32_t k) const {
  if (k >= rhs_derivatives_.size())
    throw OrderExceeded("D_x^" + std::to_string(k) + " of the right-hand side is beyond the jet limit");
  return rhs_derivatives_[k];
}

Notation EvolutionEquation::notation() const {
  Notation n;
  switch (kind_) {
    case EquationKind::Heat: n.dependent = "u"; break;
    case EquationKind::PotentialBurgers: n.dependent = "w"; break;
    case EquationKind::Burgers: n.dependent = "v"; break;
  }
  return n;
}

std::string family_name(Family f) {
  switch (f) {
    case Family::HeatQ: return "HEAT_Q";
    case Family::PotentialQ: return "POT_Q";
    case Family::BurgersQ: return "BURGERS_Q";
    case Family::HeatZ: return "HEAT_Z";
    case Family::PotentialZ: return "POT_Z";
  }
  return "?";
}

Family parse_family(const std::string& name) {
  for (auto f : {Family::HeatQ, Family::PotentialQ, Family::BurgersQ, Family::HeatZ, Family::PotentialZ})
    if (family_name(f) == name) return f;
  throw std::invalid_argument("unknown family: " + name);
}

const EvolutionEquation& family_equation(Family f) {
  switch (f) {
    case Family::HeatQ:
    case Family::HeatZ: return EvolutionEquation::heat();
    case Family::PotentialQ:
    case Family::PotentialZ: return EvolutionEquation::potential_burgers();
    case Family::BurgersQ: return EvolutionEquation::burgers();
  }
  throw std::logic_error("unreachable");
}

Characteristic::Characteristic(const EvolutionEquation& eq, ExpPoly b, std::optional<FamilyIndex> lbl)
    : equation(&eq), body(std::move(b)), label(lbl) {
  for (const auto& [grade, p] : body.components()) {
    if (p.contains(VarKind::Zeta)) throw InvalidOperand("characteristic bodies cannot contain zeta symbols");
    if (!eq.admits_parameters() && p.contains(VarKind::Par))
      throw InvalidOperand("parameter-function symbols are not part of the " + eq.name() + " ring");
  }
}

DiffPoly dx(const EvolutionEquation& eq, const DiffPoly& p) {
  validate(eq, p);
  return free_dx(p);
}

DiffPoly dx_power(const EvolutionEquation& eq, const DiffPoly& p, unsigned n) {
  DiffPoly r = p;
  for (unsigned i = 0; i < n; ++i) r = dx(eq, r);
  return r;
}

DiffPoly dt(const EvolutionEquation& eq, const DiffPoly& p) {
  validate(eq, p);
  std::vector<Term> shifted;
  DiffPoly result;
  const int top = p.order();
  for (int k = 0; k <= top; ++k) {
    DiffPoly d = partial(p, VarId::jet(k));
    if (!d.is_zero()) result += d * eq.rhs_derivative(k);
  }
  for (const auto& term : p.terms()) {
    for (const auto& f : term.monomial.factors()) {
      if (f.var.kind() == VarKind::T) {
        shifted.push_back({term.monomial.with_exponent(f.var, f.exp - 1), term.coeff * f.exp});
      } else if (f.var.kind() == VarKind::Par) {
        const auto lowered = term.monomial.with_exponent(f.var, f.exp - 1);
        shifted.push_back({lowered * Monomial::of(f.var.shifted(2)), term.coeff * f.exp});
      }
    }
  }
  return result + DiffPoly::from_terms(std::move(shifted));
}

ExpPoly dx(const EvolutionEquation& eq, const ExpPoly& e) {
  ExpPoly r;
  for (const auto& [grade, p] : e.components()) {
    DiffPoly d = dx(eq, p);
    if (grade != 0) d += (sym::jet(1) * p).scaled(grade);
    r += ExpPoly::graded(std::move(d), grade);
  }
  return r;
}

ExpPoly dt(const EvolutionEquation& eq, const ExpPoly& e) {
  ExpPoly r;
  for (const auto& [grade, p] : e.components()) {
    DiffPoly d = dt(eq, p);
    if (grade != 0) d += (eq.rhs() * p).scaled(grade);
    r += ExpPoly::graded(std::move(d), grade);
  }
  return r;
}

DiffPoly frechet(const EvolutionEquation& eq, const DiffPoly& F, const DiffPoly& eta) {
  if (F.contains(VarKind::Par)) throw InvalidOperand("Fréchet derivative of a parameter-dependent function");
  DiffPoly result;
  DiffPoly derivative = eta;
  const int top = F.order();
  for (int k = 0; k <= top; ++k) {
    if (k > 0) derivative = dx(eq, derivative);
    DiffPoly coeff = partial(F, VarId::jet(k));
    if (!coeff.is_zero()) result += coeff * derivative;
  }
  return result;
}

ExpPoly frechet(const EvolutionEquation& eq, const DiffPoly& F, const ExpPoly& eta) {
  if (F.contains(VarKind::Par)) throw InvalidOperand("Fréchet derivative of a parameter-dependent function");
  ExpPoly result;
  ExpPoly derivative = eta;
  const int top = F.order();
  for (int k = 0; k <= top; ++k) {
    if (k > 0) derivative = dx(eq, derivative);
    DiffPoly coeff = partial(F, VarId::jet(k));
    if (!coeff.is_zero()) result += ExpPoly(coeff) * derivative;
  }
  return result;
}

ExpPoly invariance_residual(const EvolutionEquation& eq, const ExpPoly& eta) {
  return dt(eq, eta) - frechet(eq, eq.rhs(), eta);
}

ExpPoly invariance_residual(const Characteristic& eta) { return invariance_residual(*eta.equation, eta.body); }

DiffPoly invariance_residual(const EvolutionEquation& eq, const DiffPoly& eta) {
  return dt(eq, eta) - frechet(eq, eq.rhs(), eta);
}

}  // namespace jetsym
