#include "jetsym/family.hpp"

#include <algorithm>
#include <exception>
#include <stdexcept>

#include "jetsym/errors.hpp"

namespace jetsym {

namespace {

bool is_z(Family f) { return f == Family::HeatZ || f == Family::PotentialZ; }


DiffPoly apply_power(const OperatorExpr& op, const EvolutionEquation& eq, DiffPoly p, int n) {
  for (int i = 0; i < n; ++i) p = apply(op, eq, p);
  return p;
}

/// G^k D_x^l applied to a heat-ring polynomial.
DiffPoly heat_gk_dl(int k, int l, DiffPoly p) {
  const auto& heat = EvolutionEquation::heat();
  p = dx_power(heat, p, static_cast<unsigned>(l));
  return apply_power(ops::heat_g(), heat, std::move(p), k);
}

ExpPoly z_body(Family f, DiffPoly g) {
  return f == Family::PotentialZ ? ExpPoly::graded(std::move(g), -1) : ExpPoly(std::move(g));
}

void check_index(const FamilyIndex& idx) {
  if (idx.k < 0 || idx.l < 0) throw std::invalid_argument("family indices must be non-negative");
  if (idx.slot < 0 || idx.slot > 1) throw std::invalid_argument("parameter slot must be 0 or 1");
}

}  // namespace

Characteristic q_char(const FamilyIndex& idx) {
  check_index(idx);
  const auto& eq = family_equation(idx.family);
  switch (idx.family) {
    case Family::HeatQ: {
      DiffPoly body = apply_power(ops::heat_g(), eq, dx_power(eq, sym::jet(0), idx.l), idx.k);
      return {eq, std::move(body), idx};
    }
    case Family::PotentialQ: {
      DiffPoly body = apply_power(ops::potential_p(), eq, DiffPoly(1), idx.l);
      return {eq, apply_power(ops::potential_g(), eq, std::move(body), idx.k), idx};
    }
    case Family::BurgersQ: {
      DiffPoly body = apply_power(ops::burgers_p(), eq, DiffPoly(1), idx.l);
      body = apply_power(ops::burgers_g(), eq, std::move(body), idx.k);
      return {eq, dx(eq, body), idx};
    }
    case Family::HeatZ:
    case Family::PotentialZ:
      return {eq, z_body(idx.family, heat_gk_dl(idx.k, idx.l, sym::par(0, idx.slot))), idx};
  }
  throw std::logic_error("unreachable");
}

FamilyTable::FamilyTable(Family family, int max_order)
    : family_(family), max_order_(max_order), zero_(family_equation(family), ExpPoly{}, FamilyIndex{family, 0, 0}) {
  if (is_z(family)) throw std::invalid_argument("FamilyTable enumerates Q families only");
  const auto& eq = family_equation(family);
  OperatorExpr p_op, g_op;
  DiffPoly seed;
  switch (family) {
    case Family::HeatQ: p_op = ops::heat_p(); g_op = ops::heat_g(); seed = sym::jet(0); break;
    case Family::PotentialQ: p_op = ops::potential_p(); g_op = ops::potential_g(); seed = 1; break;
    default: p_op = ops::burgers_p(); g_op = ops::burgers_g(); seed = 1; break;
  }
  // potentials[k][l] = G^k P^l seed, built row by row.
  std::vector<std::vector<DiffPoly>> potentials(max_order + 1);
  for (int l = 0; l <= max_order; ++l)
    potentials[0].push_back(l == 0 ? seed : apply(p_op, eq, potentials[0][l - 1]));
  for (int k = 1; k <= max_order; ++k)
    for (int l = 0; k + l <= max_order; ++l) potentials[k].push_back(apply(g_op, eq, potentials[k - 1][l]));

  for (int n = 0; n <= max_order; ++n) {
    for (int k = 0; k <= n; ++k) {
      const int l = n - k;
      if (family == Family::BurgersQ && n == 0) continue;
      DiffPoly body = family == Family::BurgersQ ? dx(eq, potentials[k][l]) : potentials[k][l];
      index_[{k, l}] = members_.size();
      members_.emplace_back(eq, std::move(body), FamilyIndex{family, k, l});
    }
  }
}

const Characteristic& FamilyTable::at(int k, int l) const {
  if (family_ == Family::BurgersQ && k == 0 && l == 0) return zero_;
  auto it = index_.find({k, l});
  if (it == index_.end()) throw std::out_of_range("family member outside the table");
  return members_[it->second];
}

ExpPoly prolongation_action(const EvolutionEquation& eq, const ExpPoly& eta, const ExpPoly& zeta) {
  ExpPoly result;
  ExpPoly derivative = eta;
  const int top = zeta.order();
  for (int k = 0; k <= top; ++k) {
    if (k > 0) derivative = dx(eq, derivative);
    ExpPoly d = partial_jet(zeta, static_cast<std::uint32_t>(k));
    if (!d.is_zero()) result += derivative * d;
  }
  return result;
}

ExpPoly bracket(const EvolutionEquation& eq, const ExpPoly& eta, const ExpPoly& zeta) {
  return prolongation_action(eq, eta, zeta) - prolongation_action(eq, zeta, eta);
}

Characteristic commutator(const EvolutionEquation& eq, const Characteristic& eta, const Characteristic& zeta) {
  if (eta.equation != &eq || zeta.equation != &eq)
    throw InvalidOperand("commutator of characteristics from different equations");
  return {eq, bracket(eq, eta.body, zeta.body)};
}

ExpPoly closed_form_bracket(const FamilyIndex& a, const FamilyIndex& b, const Rational& scale) {
  check_index(a);
  check_index(b);
  if (family_equation(a.family) != family_equation(b.family))
    throw InvalidOperand("closed-form bracket of members from different equations");
  if (is_z(a.family) && is_z(b.family)) return {};
  if (!is_z(a.family) && is_z(b.family)) return -closed_form_bracket(b, a, scale);
  if (is_z(a.family)) {
    // [Z(g), Q^{kl}] = Z(G^k D_x^l g) with g = G^{a.k} D_x^{a.l} h.
    DiffPoly g = heat_gk_dl(a.k, a.l, sym::par(0, a.slot));
    return z_body(a.family, heat_gk_dl(b.k, b.l, std::move(g))).scaled(scale);
  }
  ExpPoly result;
  auto add_sum = [&](int k, int l2, int sign) {
    for (int i = 0; i <= std::min(k, l2); ++i) {
      Rational c = factorial(i) / Rational(Integer(1) << static_cast<unsigned long>(i)) * binomial(k, i) * binomial(l2, i);
      const int kk = a.k + b.k - i;
      const int ll = a.l + b.l - i;
      result += q_char(a.family, kk, ll).body.scaled(c * sign);
    }
  };
  add_sum(a.k, b.l, +1);
  add_sum(b.k, a.l, -1);
  return result.scaled(scale);
}

Characteristic structure_check(const FamilyIndex& a, const FamilyIndex& b, const Rational& scale) {
  const auto& eq = family_equation(a.family);
  ExpPoly brute = bracket(eq, q_char(a).body, q_char(b).body);
  return {eq, brute.scaled(scale * scale) - closed_form_bracket(a, b, scale)};
}

std::size_t StructureSweep::failures() const {
  return static_cast<std::size_t>(std::count_if(residuals.begin(), residuals.end(),
                                                [](const ExpPoly& r) { return !r.is_zero(); }));
}

namespace {

StructureSweep sweep_pairs(Family family, int max_order) {
  if (is_z(family)) throw std::invalid_argument("structure sweeps run over Q families");
  StructureSweep sweep;
  FamilyTable table(family, max_order);
  for (const auto& a : table.members())
    for (const auto& b : table.members()) sweep.pairs.emplace_back(*a.label, *b.label);
  sweep.residuals.resize(sweep.pairs.size());
  return sweep;
}

}  // namespace

StructureSweep structure_sweep_serial(Family family, int max_order, const Rational& scale) {
  StructureSweep sweep = sweep_pairs(family, max_order);
  for (std::size_t i = 0; i < sweep.pairs.size(); ++i)
    sweep.residuals[i] = structure_check(sweep.pairs[i].first, sweep.pairs[i].second, scale).body;
  return sweep;
}

StructureSweep structure_sweep(Family family, int max_order, const Rational& scale) {
  StructureSweep sweep = sweep_pairs(family, max_order);
  std::exception_ptr error;
  const auto n = static_cast<std::ptrdiff_t>(sweep.pairs.size());
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    try {
      sweep.residuals[i] = structure_check(sweep.pairs[i].first, sweep.pairs[i].second, scale).body;
    } catch (...) {
#pragma omp critical(jetsym_sweep_error)
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
  return sweep;
}

std::vector<LieGenerator> heat_essential_lie_algebra() {
  using namespace sym;
  const Rational half(1, 2), quarter(1, 4);
  return {
      {"P^t", 1, 0, 0},
      {"D", t().scaled(2), x(), jet(0).scaled(-half)},
      {"K", t() * t(), t() * x(), ((x() * x() + t().scaled(2)) * jet(0)).scaled(-quarter)},
      {"G^x", 0, t(), (x() * jet(0)).scaled(-half)},
      {"P^x", 0, 1, 0},
      {"I", 0, 0, jet(0)},
  };
}

Characteristic evolution_form(const LieGenerator& g, const EvolutionEquation& eq) {
  return {eq, g.phi - g.xi_t * eq.rhs() - g.xi_x * sym::jet(1)};
}

}  // namespace jetsym
