#include "jetsym/detsolve.hpp"

#include <algorithm>
#include <exception>
#include <stdexcept>

#include "jetsym/errors.hpp"
#include "jetsym/family.hpp"

namespace jetsym {

namespace {

void jet_monomials(int order, int max_degree, int var, std::vector<Monomial::Factor>& current,
                   std::vector<std::vector<Monomial::Factor>>& out) {
  if (var > order) {
    out.push_back(current);
    return;
  }
  for (int e = 0; e <= max_degree; ++e) {
    if (e > 0) current.push_back({VarId::jet(static_cast<std::uint32_t>(var)), static_cast<std::uint32_t>(e)});
    jet_monomials(order, max_degree - e, var + 1, current, out);
    if (e > 0) current.pop_back();
  }
}

void validate(const Ansatz& a) {
  if (a.equation == nullptr) throw std::invalid_argument("ansatz without an equation");
  if (a.order < 0 || a.jet_degree < 0 || a.x_degree < 0 || a.t_degree < 0)
    throw std::invalid_argument("ansatz bounds must be non-negative");
}

LinearSystem assemble(std::vector<Monomial> unknowns, const std::vector<DiffPoly>& residuals) {
  LinearSystem s;
  for (const auto& r : residuals)
    for (const auto& term : r.terms()) s.constraints.push_back(term.monomial);
  std::sort(s.constraints.begin(), s.constraints.end());
  s.constraints.erase(std::unique(s.constraints.begin(), s.constraints.end()), s.constraints.end());
  s.matrix.cols = unknowns.size();
  s.matrix.rows.resize(s.constraints.size());
  for (std::size_t col = 0; col < residuals.size(); ++col) {
    for (const auto& term : residuals[col].terms()) {
      const auto row = std::lower_bound(s.constraints.begin(), s.constraints.end(), term.monomial) - s.constraints.begin();
      s.matrix.rows[row].push_back({static_cast<std::uint32_t>(col), term.coeff});
    }
  }
  s.unknowns = std::move(unknowns);
  return s;
}

DiffPoly combine(const std::vector<Monomial>& unknowns, const DenseVector& coeffs) {
  std::vector<Term> terms;
  for (std::size_t i = 0; i < unknowns.size(); ++i)
    if (coeffs[i] != 0) terms.push_back({unknowns[i], coeffs[i]});
  return DiffPoly::from_terms(std::move(terms));
}

}  // namespace

Ansatz Ansatz::with_default_bounds(const EvolutionEquation& eq, int order) { return {&eq, order, order, order, order}; }

std::vector<Monomial> enumerate_ansatz(const Ansatz& a, std::size_t cap) {
  validate(a);
  std::vector<std::vector<Monomial::Factor>> jets;
  std::vector<Monomial::Factor> current;
  jet_monomials(a.order, a.jet_degree, 0, current, jets);
  const std::size_t size = jets.size() * static_cast<std::size_t>(a.x_degree + 1) * static_cast<std::size_t>(a.t_degree + 1);
  if (size > cap) throw AnsatzTooLarge(size, cap);
  std::vector<Monomial> out;
  out.reserve(size);
  for (int ta = 0; ta <= a.t_degree; ++ta)
    for (int xb = 0; xb <= a.x_degree; ++xb)
      for (const auto& jet : jets) {
        auto factors = jet;
        factors.push_back({VarId::t(), static_cast<std::uint32_t>(ta)});
        factors.push_back({VarId::x(), static_cast<std::uint32_t>(xb)});
        out.push_back(Monomial::from_factors(std::move(factors)));
      }
  std::sort(out.begin(), out.end());
  return out;
}

LinearSystem build_system_serial(const Ansatz& a, std::size_t cap) {
  auto unknowns = enumerate_ansatz(a, cap);
  std::vector<DiffPoly> residuals;
  residuals.reserve(unknowns.size());
  for (const auto& m : unknowns) residuals.push_back(invariance_residual(*a.equation, DiffPoly::monomial(m)));
  return assemble(std::move(unknowns), residuals);
}

LinearSystem build_system(const Ansatz& a, std::size_t cap) {
  auto unknowns = enumerate_ansatz(a, cap);
  std::vector<DiffPoly> residuals(unknowns.size());
  std::exception_ptr error;
  const auto n = static_cast<std::ptrdiff_t>(unknowns.size());
#pragma omp parallel for schedule(dynamic, 16)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    try {
      residuals[i] = invariance_residual(*a.equation, DiffPoly::monomial(unknowns[i]));
    } catch (...) {
#pragma omp critical(jetsym_build_error)
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
  return assemble(std::move(unknowns), residuals);
}

std::vector<DenseVector> nullspace(const LinearSystem& s) { return nullspace(s.matrix); }

const char* to_string(SpanVerdict v) {
  switch (v) {
    case SpanVerdict::Match: return "MATCH";
    case SpanVerdict::Mismatch: return "MISMATCH";
    case SpanVerdict::NotApplicable: return "N/A";
  }
  return "?";
}

std::size_t poly_rank(const std::vector<DiffPoly>& polys) {
  std::vector<Monomial> keys;
  for (const auto& p : polys)
    for (const auto& term : p.terms()) keys.push_back(term.monomial);
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
  SparseMatrix m;
  m.cols = polys.size();
  m.rows.resize(keys.size());
  for (std::size_t col = 0; col < polys.size(); ++col)
    for (const auto& term : polys[col].terms()) {
      const auto row = std::lower_bound(keys.begin(), keys.end(), term.monomial) - keys.begin();
      m.rows[row].push_back({static_cast<std::uint32_t>(col), term.coeff});
    }
  return rank(m);
}

bool fits_ansatz(const DiffPoly& p, const Ansatz& a) {
  for (const auto& term : p.terms()) {
    int jet_degree = 0;
    for (const auto& f : term.monomial.factors()) {
      switch (f.var.kind()) {
        case VarKind::T:
          if (static_cast<int>(f.exp) > a.t_degree) return false;
          break;
        case VarKind::X:
          if (static_cast<int>(f.exp) > a.x_degree) return false;
          break;
        case VarKind::Jet:
          if (static_cast<int>(f.var.index()) > a.order) return false;
          jet_degree += static_cast<int>(f.exp);
          break;
        default: return false;
      }
    }
    if (jet_degree > a.jet_degree) return false;
  }
  return true;
}

SolveReport solve_symmetries(const EvolutionEquation& eq, int order, const SolveOptions& options) {
  if (order < 0) throw std::invalid_argument("order must be non-negative");
  const bool burgers = eq.kind() == EquationKind::Burgers;
  if (!burgers && !(options.experimental_heat && eq.kind() == EquationKind::Heat))
    throw std::invalid_argument("the solver supports the Burgers equation (heat behind the experimental flag)");

  SolveReport report;
  report.order = order;
  report.ansatz = options.bounds.value_or(Ansatz::with_default_bounds(eq, order));
  report.ansatz.equation = &eq;
  report.ansatz.order = order;

  const LinearSystem system = build_system(report.ansatz, options.cap);
  report.ansatz_size = system.unknowns.size();
  report.constraint_count = system.constraints.size();

  std::vector<DiffPoly> bodies;
  for (const auto& v : nullspace(system)) {
    DiffPoly body = combine(system.unknowns, v);
    if (!invariance_residual(eq, body).is_zero())
      throw std::logic_error("solver produced a basis element with nonzero invariance residual");
    bodies.push_back(body);
    report.basis.emplace_back(eq, std::move(body));
  }
  report.dimension = report.basis.size();

  if (burgers) {
    std::vector<DiffPoly> family;
    if (order >= 1) {
      FamilyTable table(Family::BurgersQ, order);
      for (const auto& c : table.members()) family.push_back(c.poly());
    }
    std::vector<DiffPoly> joint = bodies;
    joint.insert(joint.end(), family.begin(), family.end());
    const auto r_basis = poly_rank(bodies);
    const auto r_family = poly_rank(family);
    const auto r_joint = poly_rank(joint);
    report.span = (r_basis == r_family && r_family == r_joint) ? SpanVerdict::Match : SpanVerdict::Mismatch;
  }
  return report;
}

}  // namespace jetsym
