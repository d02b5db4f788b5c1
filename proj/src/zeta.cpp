#include "jetsym/zeta.hpp"

#include <exception>
#include <map>
#include <stdexcept>

#include "jetsym/equation.hpp"
#include "jetsym/errors.hpp"
#include "jetsym/operator.hpp"

namespace jetsym {

ZetaBasis build_zetas(int max_index) {
  if (max_index < 0) throw std::invalid_argument("zeta basis needs a non-negative size");
  const auto& burgers = EvolutionEquation::burgers();
  const auto p_hat = ops::burgers_p();
  ZetaBasis basis;
  basis.max_index = max_index;
  DiffPoly current = apply(p_hat, burgers, DiffPoly(1));
  for (int k = 0; k <= max_index; ++k) {
    basis.zetas.push_back(current);
    if (k < max_index) current = apply(p_hat, burgers, current);
  }
  basis.jets_in_zeta.push_back(sym::zeta(0).scaled(-2));
  for (int k = 1; k <= max_index; ++k) basis.jets_in_zeta.push_back(zeta_dx(basis.jets_in_zeta.back()));
  return basis;
}

DiffPoly zeta_dx(const DiffPoly& q) {
  if (!q.only_kinds({VarKind::T, VarKind::X, VarKind::Zeta}))
    throw InvalidOperand("zeta_dx expects a polynomial in t, x and zeta symbols");
  DiffPoly result = partial(q, VarId::x());
  const DiffPoly z0 = sym::zeta(0);
  const int top = q.max_index(VarKind::Zeta);
  for (int j = 0; j <= top; ++j) {
    DiffPoly d = partial(q, VarId::zeta(j));
    if (!d.is_zero()) result += d * (sym::zeta(j + 1) - z0 * sym::zeta(j));
  }
  return result;
}

bool ZetaIdentityReport::all_zero() const {
  for (const auto& r : derivative_residuals)
    if (!r.is_zero()) return false;
  for (const auto& r : potential_residuals)
    if (!r.is_zero()) return false;
  return true;
}

ZetaIdentityReport verify_zeta_identities(int max_index) {
  const auto basis = build_zetas(max_index + 1);
  const auto& burgers = EvolutionEquation::burgers();
  const auto potential_op = ops::burgers_potential_operator();
  ZetaIdentityReport report;
  report.derivative_residuals.resize(max_index + 1);
  report.potential_residuals.resize(max_index + 1);
  std::exception_ptr error;
#pragma omp parallel for schedule(dynamic)
  for (int k = 0; k <= max_index; ++k) {
    try {
      const auto& z = basis.zetas;
      report.derivative_residuals[k] = dx(burgers, z[k]) - (z[k + 1] - z[0] * z[k]);
      report.potential_residuals[k] = apply(potential_op, burgers, z[k], true);
    } catch (...) {
#pragma omp critical(jetsym_zeta_error)
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
  return report;
}

DiffPoly to_zeta_coordinates(const DiffPoly& p, const ZetaBasis& basis) {
  if (!p.only_kinds({VarKind::T, VarKind::X, VarKind::Jet}))
    throw InvalidOperand("to_zeta_coordinates expects a polynomial in t, x and v-jets");
  if (p.order() > basis.max_index)
    throw OrderExceeded("order " + std::to_string(p.order()) + " exceeds the zeta basis size " +
                        std::to_string(basis.max_index));
  std::map<VarId, DiffPoly> rules;
  for (int k = 0; k <= p.order(); ++k) rules.emplace(VarId::jet(k), basis.jets_in_zeta[k]);
  return substitute(p, rules);
}

DiffPoly from_zeta_coordinates(const DiffPoly& q, const ZetaBasis& basis) {
  if (!q.only_kinds({VarKind::T, VarKind::X, VarKind::Zeta}))
    throw InvalidOperand("from_zeta_coordinates expects a polynomial in t, x and zeta symbols");
  const int top = q.max_index(VarKind::Zeta);
  if (top > basis.max_index) throw OrderExceeded("zeta index beyond the basis size");
  std::map<VarId, DiffPoly> rules;
  for (int k = 0; k <= top; ++k) rules.emplace(VarId::zeta(k), basis.zetas[k]);
  return substitute(q, rules);
}

}  // namespace jetsym
