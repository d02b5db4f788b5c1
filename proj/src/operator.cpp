#include "jetsym/operator.hpp"

#include <exception>

#include "jetsym/errors.hpp"

namespace jetsym {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

bool any_node(const OperatorExpr& op, bool (*leaf)(const OperatorExpr::Node&)) {
  if (leaf(op.node())) return true;
  if (auto* s = std::get_if<OperatorExpr::Sum>(&op.node()))
    for (const auto& t : s->terms)
      if (any_node(t, leaf)) return true;
  if (auto* c = std::get_if<OperatorExpr::Compose>(&op.node()))
    for (const auto& f : c->factors)
      if (any_node(f, leaf)) return true;
  return false;
}

/// K with rhs = D_x K, if the equation is in conservation form.
std::optional<DiffPoly> conservation_flux(const EvolutionEquation& eq) {
  if (!euler_residual(eq.rhs()).is_zero()) return std::nullopt;
  return dx_preimage(eq, eq.rhs());
}

}  // namespace

bool OperatorExpr::contains_dt() const {
  return any_node(*this, [](const Node& n) { return std::holds_alternative<TotalT>(n); });
}

bool OperatorExpr::contains_inverse() const {
  return any_node(*this, [](const Node& n) { return std::holds_alternative<InverseX>(n); });
}

OperatorExpr operator+(const OperatorExpr& a, const OperatorExpr& b) { return ops::sum({a, b}); }
OperatorExpr operator-(const OperatorExpr& a, const OperatorExpr& b) { return ops::sum({a, Rational(-1) * b}); }
OperatorExpr operator*(const OperatorExpr& a, const OperatorExpr& b) { return ops::compose({a, b}); }
OperatorExpr operator*(const Rational& c, const OperatorExpr& a) { return ops::compose({ops::scalar(c), a}); }

namespace ops {

OperatorExpr identity() { return OperatorExpr(OperatorExpr::Compose{}); }
OperatorExpr total_x() { return OperatorExpr(OperatorExpr::TotalX{}); }
OperatorExpr inverse_x() { return OperatorExpr(OperatorExpr::InverseX{}); }
OperatorExpr total_t() { return OperatorExpr(OperatorExpr::TotalT{}); }
OperatorExpr multiply(DiffPoly p) { return OperatorExpr(OperatorExpr::MulBy{std::move(p)}); }
OperatorExpr scalar(Rational c) { return OperatorExpr(OperatorExpr::Scale{std::move(c)}); }
OperatorExpr sum(std::vector<OperatorExpr> terms) { return OperatorExpr(OperatorExpr::Sum{std::move(terms)}); }
OperatorExpr compose(std::vector<OperatorExpr> factors) {
  return OperatorExpr(OperatorExpr::Compose{std::move(factors)});
}

OperatorExpr power(const OperatorExpr& op, unsigned n) { return compose(std::vector<OperatorExpr>(n, op)); }

OperatorExpr commutator(const OperatorExpr& a, const OperatorExpr& b) { return a * b - b * a; }

OperatorExpr heat_p() { return total_x(); }

OperatorExpr heat_g() { return sum({compose({multiply(sym::t()), total_x()}), multiply(sym::x().scaled(Rational(1, 2)))}); }

OperatorExpr potential_p() { return sum({total_x(), multiply(sym::jet(1))}); }

OperatorExpr potential_g() {
  return sum({compose({multiply(sym::t()), potential_p()}), multiply(sym::x().scaled(Rational(1, 2)))});
}

OperatorExpr burgers_p() { return sum({total_x(), multiply(sym::jet(0).scaled(Rational(-1, 2)))}); }

OperatorExpr burgers_g() {
  return sum({compose({multiply(sym::t()), total_x()}),
              multiply((sym::x() - sym::jet(0) * sym::t()).scaled(Rational(1, 2)))});
}

OperatorExpr recursion_r1() { return compose({total_x(), burgers_p(), inverse_x()}); }
OperatorExpr recursion_r2() { return compose({total_x(), burgers_g(), inverse_x()}); }

OperatorExpr burgers_potential_operator() {
  return sum({total_t(), compose({multiply(sym::jet(0)), total_x()}), compose({scalar(-1), total_x(), total_x()})});
}

}  // namespace ops

std::string to_text(const OperatorExpr& op) {
  return std::visit(
      Overloaded{
          [](const OperatorExpr::TotalX&) -> std::string { return "D_x"; },
          [](const OperatorExpr::InverseX&) -> std::string { return "D_x^-1"; },
          [](const OperatorExpr::TotalT&) -> std::string { return "D_t"; },
          [](const OperatorExpr::MulBy& m) -> std::string { return "(" + to_text(m.factor) + ")"; },
          [](const OperatorExpr::Scale& s) -> std::string { return to_string(s.factor); },
          [](const OperatorExpr::Sum& s) -> std::string {
            std::string out = "(";
            for (std::size_t i = 0; i < s.terms.size(); ++i) out += (i ? " + " : "") + to_text(s.terms[i]);
            return out + ")";
          },
          [](const OperatorExpr::Compose& c) -> std::string {
            if (c.factors.empty()) return "1";
            std::string out;
            for (std::size_t i = 0; i < c.factors.size(); ++i) out += (i ? "∘" : "") + to_text(c.factors[i]);
            return out;
          },
      },
      op.node());
}

DiffPoly apply(const OperatorExpr& op, const EvolutionEquation& eq, const DiffPoly& p, bool allow_dt) {
  return std::visit(
      Overloaded{
          [&](const OperatorExpr::TotalX&) { return dx(eq, p); },
          [&](const OperatorExpr::InverseX&) { return dx_inverse(eq, p); },
          [&](const OperatorExpr::TotalT&) {
            if (!allow_dt) throw InvalidOperand("D_t is only admitted in operator identity probes");
            return dt(eq, p);
          },
          [&](const OperatorExpr::MulBy& m) { return m.factor * p; },
          [&](const OperatorExpr::Scale& s) { return p.scaled(s.factor); },
          [&](const OperatorExpr::Sum& s) {
            DiffPoly r;
            for (const auto& t : s.terms) r += apply(t, eq, p, allow_dt);
            return r;
          },
          [&](const OperatorExpr::Compose& c) {
            DiffPoly r = p;
            for (auto it = c.factors.rbegin(); it != c.factors.rend(); ++it) r = apply(*it, eq, r, allow_dt);
            return r;
          },
      },
      op.node());
}

DiffPoly euler_residual(const DiffPoly& p) {
  if (p.contains(VarKind::Par)) throw InvalidOperand("Euler operator applied to a parameter-dependent polynomial");
  DiffPoly result;
  const int top = p.order();
  for (int k = 0; k <= top; ++k) {
    DiffPoly term = partial(p, VarId::jet(k));
    for (int i = 0; i < k; ++i) term = -free_dx(term);
    result += term;
  }
  return result;
}

IntegrabilityCertificate integrability_certificate(const DiffPoly& p) {
  IntegrabilityCertificate cert{euler_residual(p), false};
  cert.is_total_derivative = cert.euler_residual.is_zero();
  return cert;
}

DiffPoly dx_preimage(const EvolutionEquation& eq, const DiffPoly& p) {
  if (p.contains(VarKind::Par) || p.contains(VarKind::Zeta))
    throw InvalidOperand("D_x^-1 is defined on jet polynomials with polynomial (t,x) coefficients only");
  auto fail = [&](const std::string& why) -> DiffPoly {
    throw NotATotalDerivative("not a total x-derivative: " + why, euler_residual(p));
  };
  DiffPoly remaining = p;
  DiffPoly g;
  for (;;) {
    const int top = remaining.order();
    if (top == kOrderNone) {
      g += antiderivative(remaining, VarId::x());
      break;
    }
    if (top == 0) return fail("order-0 part left over");
    const auto top_var = VarId::jet(top);
    if (remaining.degree(top_var) > 1) return fail("nonlinear in the highest derivative");
    DiffPoly piece = antiderivative(partial(remaining, top_var), VarId::jet(top - 1));
    remaining -= dx(eq, piece);
    g += piece;
  }
  return g;
}

DiffPoly dx_inverse(const EvolutionEquation& eq, const DiffPoly& p) {
  DiffPoly g = dx_preimage(eq, p);
  const auto flux = conservation_flux(eq);
  if (!flux) return g;
  const DiffPoly drift = dt(eq, g) - frechet(eq, *flux, p);
  if (!drift.is_zero() && drift.only_kinds({VarKind::T})) g -= antiderivative(drift, VarId::t());
  return g;
}

bool ProbeReport::all_zero() const { return failures() == 0; }

std::size_t ProbeReport::failures() const {
  std::size_t n = 0;
  for (const auto& r : residuals) n += r.is_zero() ? 0 : 1;
  return n;
}

ProbeReport operator_identity_probe_serial(const OperatorExpr& lhs, const OperatorExpr& rhs,
                                           const EvolutionEquation& eq, const std::vector<DiffPoly>& probes) {
  ProbeReport report;
  report.residuals.reserve(probes.size());
  for (const auto& p : probes) report.residuals.push_back(apply(lhs, eq, p, true) - apply(rhs, eq, p, true));
  return report;
}

ProbeReport operator_identity_probe(const OperatorExpr& lhs, const OperatorExpr& rhs, const EvolutionEquation& eq,
                                    const std::vector<DiffPoly>& probes) {
  ProbeReport report;
  report.residuals.resize(probes.size());
  std::exception_ptr error;
  const auto n = static_cast<std::ptrdiff_t>(probes.size());
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    try {
      report.residuals[i] = apply(lhs, eq, probes[i], true) - apply(rhs, eq, probes[i], true);
    } catch (...) {
#pragma omp critical(jetsym_probe_error)
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
  return report;
}

}  // namespace jetsym
