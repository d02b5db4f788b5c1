#include "jetsym/checks.hpp"

#include <exception>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "jetsym/colemap.hpp"
#include "jetsym/detsolve.hpp"
#include "jetsym/errors.hpp"
#include "jetsym/family.hpp"
#include "jetsym/operator.hpp"
#include "jetsym/zeta.hpp"

namespace jetsym {

bool SuiteReport::pass() const { return failures() == 0 && !checks.empty(); }

std::size_t SuiteReport::failures() const {
  std::size_t n = 0;
  for (const auto& c : checks) n += (c.informational || c.pass()) ? 0 : 1;
  return n;
}

namespace {

/// A case evaluates to a residual (zero means the relation holds) or throws.
struct Case {
  std::string label;
  std::function<ExpPoly()> residual;
  Notation notation;
};

/// Residuals are evaluated in parallel and reported in case order.
CheckResult run_cases(std::string name, const std::vector<Case>& cases) {
  const auto n = static_cast<std::ptrdiff_t>(cases.size());
  std::vector<std::optional<std::string>> failure(cases.size());
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    try {
      ExpPoly r = cases[i].residual();
      if (!r.is_zero()) failure[i] = "residual " + to_text(r, cases[i].notation);
    } catch (const std::exception& ex) {
      failure[i] = std::string("threw: ") + ex.what();
    }
  }
  CheckResult out{std::move(name), cases.size(), 0, {}};
  for (std::size_t i = 0; i < cases.size(); ++i) {
    if (!failure[i]) continue;
    if (out.failed++ == 0) out.detail = cases[i].label + ": " + *failure[i];
  }
  return out;
}

std::string label(const FamilyIndex& idx) {
  std::string s = family_name(idx.family) + "^{" + std::to_string(idx.k) + std::to_string(idx.l) + "}";
  if (idx.slot != 0) s += "@" + std::to_string(idx.slot);
  return s;
}

std::string label(Family f, int k, int l) { return label(FamilyIndex{f, k, l, 0}); }

CheckResult from_sweep(std::string name, const StructureSweep& sweep, const Notation& n) {
  CheckResult out{std::move(name), sweep.pairs.size(), 0, {}};
  for (std::size_t i = 0; i < sweep.pairs.size(); ++i) {
    if (sweep.residuals[i].is_zero()) continue;
    if (out.failed++ == 0)
      out.detail = "[" + label(sweep.pairs[i].first) + ", " + label(sweep.pairs[i].second) +
                   "]: residual " + to_text(sweep.residuals[i], n);
  }
  return out;
}

const DiffPoly& burgers_q(int k, int l) {
  static const FamilyTable table(Family::BurgersQ, 8);
  return table.at(k, l).poly();
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"invariance", "commutators", "recursion", "operators",
                                              "zeta",       "maps",        "lie",       "solver"};
  return names;
}

SuiteReport invariance_suite(int max_order) {
  SuiteReport report{"invariance", {}};
  for (Family f : {Family::HeatQ, Family::PotentialQ, Family::BurgersQ}) {
    const FamilyTable table(f, max_order);
    std::vector<Case> cases;
    for (const auto& m : table.members())
      cases.push_back({label(*m.label), [&m] { return invariance_residual(m); }, m.equation->notation()});
    report.checks.push_back(run_cases("invariance " + family_name(f), cases));
  }
  for (Family f : {Family::HeatZ, Family::PotentialZ}) {
    std::vector<Case> cases;
    const Notation n = family_equation(f).notation();
    for (int s = 0; s <= max_order; ++s)
      for (int k = 0; k <= s; ++k)
        for (int slot = 0; slot <= 1; ++slot) {
          FamilyIndex idx{f, k, s - k, slot};
          cases.push_back({label(idx), [idx] { return invariance_residual(q_char(idx)); }, n});
        }
    report.checks.push_back(run_cases("invariance " + family_name(f) + " (symbolic h)", cases));
  }
  return report;
}

SuiteReport commutator_suite(int max_order) {
  SuiteReport report{"commutators", {}};
  for (Family f : {Family::HeatQ, Family::PotentialQ, Family::BurgersQ})
    report.checks.push_back(from_sweep("structure constants " + family_name(f), structure_sweep(f, max_order),
                                       family_equation(f).notation()));
  // The pushforward sends potential generators to -2 times the Burgers members.
  report.checks.push_back(from_sweep("structure constants BURGERS_Q for generators -2*Q",
                                     structure_sweep(Family::BurgersQ, max_order, -2),
                                     EvolutionEquation::burgers().notation()));
  report.checks.back().informational = true;
  for (auto [z, q] : {std::pair{Family::HeatZ, Family::HeatQ}, std::pair{Family::PotentialZ, Family::PotentialQ}}) {
    std::vector<Case> cases;
    const Notation n = family_equation(q).notation();
    for (int s = 0; s <= max_order + 1; ++s)
      for (int k = 0; k <= s; ++k) {
        FamilyIndex a{z, 0, 0, 0}, b{q, k, s - k, 0};
        cases.push_back({"[" + label(a) + ", " + label(b) + "]", [a, b] { return structure_check(a, b).body; }, n});
      }
    report.checks.push_back(run_cases("[" + family_name(z) + "(h), " + family_name(q) + "] closed form", cases));

    std::vector<Case> zz;
    for (int s = 0; s <= 2; ++s)
      for (int k = 0; k <= s; ++k) {
        FamilyIndex a{z, k, s - k, 0}, b{z, s - k, k, 1};
        zz.push_back({"[" + label(a) + ", " + label(b) + "]", [a, b] { return structure_check(a, b).body; }, n});
      }
    report.checks.push_back(run_cases("[" + family_name(z) + "(h1), " + family_name(z) + "(h2)] = 0", zz));
  }
  return report;
}

SuiteReport recursion_suite(int max_order) {
  SuiteReport report{"recursion", {}};
  const auto& eq = EvolutionEquation::burgers();
  const Notation n = eq.notation();
  const Rational half(1, 2);
  const auto r1 = ops::recursion_r1();
  const auto r2 = ops::recursion_r2();

  std::vector<Case> comm, conj;
  const auto bracket_r = ops::commutator(r1, r2);
  const auto conjugated = ops::total_x() * ops::commutator(ops::burgers_p(), ops::burgers_g()) * ops::inverse_x();
  for (int s = 1; s <= max_order; ++s)
    for (int k = 0; k <= s; ++k) {
      const int l = s - k;
      comm.push_back({label(Family::BurgersQ, k, l),
                      [&, k, l] { return ExpPoly(apply(bracket_r, eq, burgers_q(k, l)) - burgers_q(k, l).scaled(half)); },
                      n});
      conj.push_back({label(Family::BurgersQ, k, l),
                      [&, k, l] { return ExpPoly(apply(conjugated, eq, burgers_q(k, l)) - burgers_q(k, l).scaled(half)); },
                      n});
    }
  report.checks.push_back(run_cases("[R1,R2] eta = 1/2 eta", comm));
  report.checks.push_back(run_cases("D_x [P,G] D_x^-1 eta = 1/2 eta", conj));
  report.checks.back().informational = true;

  report.checks.push_back(run_cases(
      "R2 Q^{01} = R1 Q^{10}",
      {{"Q^{01}, Q^{10}", [&] { return ExpPoly(apply(r2, eq, burgers_q(0, 1)) - apply(r1, eq, burgers_q(1, 0))); }, n}}));

  std::vector<Case> chain_l, chain_k, mixed_a, mixed_b;
  for (int s = 1; s <= max_order; ++s) {
    chain_l.push_back({label(Family::BurgersQ, 0, s), [&, s] {
                         return ExpPoly(apply(ops::power(r1, s - 1), eq, burgers_q(0, 1)) - burgers_q(0, s));
                       }, n});
    chain_k.push_back({label(Family::BurgersQ, s, 0), [&, s] {
                         return ExpPoly(apply(ops::power(r2, s - 1), eq, burgers_q(1, 0)) - burgers_q(s, 0));
                       }, n});
  }
  for (int k = 1; k <= max_order; ++k)
    for (int l = 1; k + l <= max_order; ++l) {
      mixed_a.push_back({label(Family::BurgersQ, k, l), [&, k, l] {
                           auto op = ops::power(r2, k) * ops::power(r1, l - 1);
                           return ExpPoly(apply(op, eq, burgers_q(0, 1)) - burgers_q(k, l));
                         }, n});
      mixed_b.push_back({label(Family::BurgersQ, k, l), [&, k, l] {
                           auto op = ops::power(r2, k - 1) * ops::power(r1, l);
                           DiffPoly lower = (k == 1 && l == 1) ? DiffPoly() : burgers_q(k - 1, l - 1);
                           return ExpPoly(apply(op, eq, burgers_q(1, 0)) - lower.scaled(ratio(l - 1, 2)) -
                                          burgers_q(k, l));
                         }, n});
    }
  report.checks.push_back(run_cases("Q^{0l} = R1^{l-1} Q^{01}", chain_l));
  report.checks.push_back(run_cases("Q^{k0} = R2^{k-1} Q^{10}", chain_k));
  report.checks.push_back(run_cases("Q^{kl} = R2^k R1^{l-1} Q^{01}", mixed_a));
  report.checks.push_back(run_cases("Q^{kl} = R2^{k-1} R1^l Q^{10} - (l-1)/2 Q^{k-1,l-1}", mixed_b));
  return report;
}

SuiteReport operator_suite(int probe_count) {
  SuiteReport report{"operators", {}};
  std::mt19937_64 rng(20240611);

  auto probe_check = [&](std::string name, const OperatorExpr& lhs, const OperatorExpr& rhs,
                         const EvolutionEquation& eq, Family family) {
    std::vector<DiffPoly> probes;
    const FamilyTable table(family, 3);
    for (const auto& m : table.members()) probes.push_back(m.poly());
    while (static_cast<int>(probes.size()) < probe_count) probes.push_back(random_jet_poly(rng, 3, 4));
    const ProbeReport pr = operator_identity_probe(lhs, rhs, eq, probes);
    CheckResult c{std::move(name), probes.size(), pr.failures(), {}};
    for (std::size_t i = 0; i < probes.size(); ++i)
      if (!pr.residuals[i].is_zero()) {
        c.detail = "probe " + to_text(probes[i], eq.notation()) + ": residual " + to_text(pr.residuals[i], eq.notation());
        break;
      }
    report.checks.push_back(std::move(c));
  };

  const auto b = ops::burgers_potential_operator();
  const auto zero = ops::scalar(0);
  probe_check("[D_t + v D_x - D_x^2, P] = 0", ops::commutator(b, ops::burgers_p()), zero,
              EvolutionEquation::burgers(), Family::BurgersQ);
  probe_check("[D_t + v D_x - D_x^2, G] = 0", ops::commutator(b, ops::burgers_g()), zero,
              EvolutionEquation::burgers(), Family::BurgersQ);
  probe_check("PG = GP + 1/2 (heat)", ops::heat_p() * ops::heat_g(), ops::heat_g() * ops::heat_p() + ops::scalar(Rational(1, 2)),
              EvolutionEquation::heat(), Family::HeatQ);
  return report;
}

SuiteReport zeta_suite(int max_order) {
  SuiteReport report{"zeta", {}};
  const Notation n = EvolutionEquation::burgers().notation();
  const ZetaBasis basis = build_zetas(std::max(max_order, 6));
  using namespace sym;
  report.checks.push_back(run_cases(
      "zeta^0 = -1/2 v, zeta^1 = -1/2 v_x + 1/4 v^2",
      {{"zeta^0", [&] { return ExpPoly(basis.zetas[0] + jet(0).scaled(Rational(1, 2))); }, n},
       {"zeta^1", [&] {
          return ExpPoly(basis.zetas[1] - jet(1).scaled(Rational(-1, 2)) - (jet(0) * jet(0)).scaled(Rational(1, 4)));
        }, n}}));

  const ZetaIdentityReport ids = verify_zeta_identities(max_order);
  auto collect = [&](std::string name, const std::vector<DiffPoly>& residuals) {
    CheckResult c{std::move(name), residuals.size(), 0, {}};
    for (std::size_t k = 0; k < residuals.size(); ++k)
      if (!residuals[k].is_zero() && c.failed++ == 0)
        c.detail = "k=" + std::to_string(k) + ": residual " + to_text(residuals[k], n);
    report.checks.push_back(std::move(c));
  };
  collect("D_x zeta^k = zeta^{k+1} - zeta^0 zeta^k", ids.derivative_residuals);
  collect("(D_t + v D_x - D_x^2) zeta^k = 0", ids.potential_residuals);

  std::mt19937_64 rng(7);
  std::vector<Case> trips;
  for (int i = 0; i < 24; ++i) {
    DiffPoly p = random_jet_poly(rng, 1 + i % 6, 5);
    trips.push_back({to_text(p, n), [&basis, p] {
                       return ExpPoly(from_zeta_coordinates(to_zeta_coordinates(p, basis), basis) - p);
                     }, n});
  }
  report.checks.push_back(run_cases("zeta coordinate round trip", trips));
  return report;
}

SuiteReport maps_suite(int max_order) {
  SuiteReport report{"maps", {}};
  const FamilyTable heat(Family::HeatQ, max_order);
  const FamilyTable pot(Family::PotentialQ, max_order);
  const FamilyTable burg(Family::BurgersQ, max_order);
  const Notation wn = EvolutionEquation::potential_burgers().notation();
  const Notation vn = EvolutionEquation::burgers().notation();

  std::vector<Case> up, down, normalized;
  for (const auto& m : heat.members()) {
    const int k = m.label->k, l = m.label->l;
    up.push_back({label(*m.label), [&, k, l] { return heat_to_potential(heat.at(k, l)).body - pot.at(k, l).body; }, wn});
    if (k + l == 0) continue;
    down.push_back({label(Family::PotentialQ, k, l), [&, k, l] {
                      return potential_to_burgers(pot.at(k, l)).body - burg.at(k, l).body.scaled(-2);
                    }, vn});
    normalized.push_back({label(Family::PotentialQ, k, l), [&, k, l] {
                            return potential_to_burgers(pot.at(k, l), true).body - burg.at(k, l).body;
                          }, vn});
  }
  report.checks.push_back(run_cases("heat_to_potential(Q^{kl}) = POT_Q^{kl}", up));
  report.checks.push_back(run_cases("potential_to_burgers(POT_Q^{kl}) = -2 BURGERS_Q^{kl}", down));
  report.checks.push_back(run_cases("normalized image = BURGERS_Q^{kl}", normalized));
  report.checks.push_back(run_cases(
      "kernel: POT_Q^{00} maps to 0",
      {{label(Family::PotentialQ, 0, 0), [&] { return potential_to_burgers(pot.at(0, 0)).body; }, vn}}));

  std::vector<Case> z;
  for (int s = 0; s <= std::min(max_order, 2); ++s)
    for (int k = 0; k <= s; ++k) {
      FamilyIndex idx{Family::PotentialZ, k, s - k, 0};
      z.push_back({label(idx), [idx]() -> ExpPoly {
                     try {
                       potential_to_burgers(q_char(idx));
                     } catch (const NotProjectable&) {
                       return {};
                     }
                     throw std::runtime_error("mapped without NotProjectable");
                   }, vn});
    }
  report.checks.push_back(run_cases("POT_Z(h) is NotProjectable", z));
  return report;
}

SuiteReport lie_suite() {
  SuiteReport report{"lie", {}};
  const auto& eq = EvolutionEquation::heat();
  const FamilyTable q(Family::HeatQ, 2);
  const Rational half(1, 2);
  const std::vector<DiffPoly> expected{
      q.at(0, 2).poly(), q.at(1, 1).poly().scaled(2) + q.at(0, 0).poly().scaled(half), q.at(2, 0).poly(),
      q.at(1, 0).poly(), q.at(0, 1).poly(), q.at(0, 0).poly()};
  const auto gens = heat_essential_lie_algebra();
  CheckResult match{"evolution forms of g^ess = Q list up to sign", gens.size(), 0, "signs:"};
  std::vector<Case> inv;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const DiffPoly form = evolution_form(gens[i], eq).poly();
    std::string sign = form == expected[i] ? "+" : form == -expected[i] ? "-" : "?";
    if (sign == "?") ++match.failed;
    match.detail += " " + gens[i].name + ":" + sign;
    inv.push_back({gens[i].name, [form, &eq] { return invariance_residual(eq, ExpPoly(form)); }, eq.notation()});
  }
  report.checks.push_back(std::move(match));
  report.checks.push_back(run_cases("evolution forms are symmetries", inv));
  return report;
}

SuiteReport solver_suite(int max_order) {
  SuiteReport report{"solver", {}};
  std::size_t previous = 0;
  for (int n = 1; n <= max_order; ++n) {
    const SolveReport r = solve_symmetries(EvolutionEquation::burgers(), n);
    const std::size_t want = static_cast<std::size_t>(n * (n + 3) / 2);
    CheckResult c{"solve BURGERS order " + std::to_string(n), 1, 0, {}};
    std::ostringstream os;
    os << "dimension " << r.dimension << " (expected " << want << "), increment " << r.dimension - previous
       << ", span " << to_string(r.span) << ", ansatz " << r.ansatz_size;
    c.detail = os.str();
    if (r.dimension != want || r.span != SpanVerdict::Match || r.dimension - previous != std::size_t(n + 1))
      c.failed = 1;
    previous = r.dimension;
    report.checks.push_back(std::move(c));
  }
  return report;
}

std::vector<SuiteReport> run_suite(const std::string& name, int max_order) {
  if (name == "all") {
    std::vector<SuiteReport> out;
    for (const auto& s : suite_names()) out.push_back(run_suite(s, max_order).front());
    return out;
  }
  if (name == "invariance") return {invariance_suite(max_order)};
  if (name == "commutators") return {commutator_suite(max_order)};
  if (name == "recursion") return {recursion_suite(max_order)};
  if (name == "operators") return {operator_suite()};
  if (name == "zeta") return {zeta_suite(max_order)};
  if (name == "maps") return {maps_suite(max_order)};
  if (name == "lie") return {lie_suite()};
  if (name == "solver") return {solver_suite(max_order)};
  throw std::invalid_argument("unknown suite '" + name + "'");
}

DiffPoly random_jet_poly(std::mt19937_64& rng, int order, int terms) {
  std::uniform_int_distribution<int> small(0, 2), jet_count(0, 3), jet_index(0, order), num(-5, 5), den(1, 4);
  DiffPoly p;
  for (int i = 0; i < terms; ++i) {
    DiffPoly m = pow(sym::t(), small(rng)) * pow(sym::x(), small(rng));
    for (int j = jet_count(rng); j > 0; --j) m *= sym::jet(jet_index(rng));
    int a = 0;
    while (a == 0) a = num(rng);
    p += m.scaled(ratio(a, den(rng)));
  }
  return p;
}

std::string format_check(const CheckResult& c) {
  std::ostringstream os;
  if (c.informational) os << "INFO ";
  if (c.pass())
    os << "PASS " << c.name << " (" << c.cases << " cases)";
  else
    os << "FAIL " << c.name << " (" << c.failed << "/" << c.cases << " failed)";
  if (!c.detail.empty()) os << ": " << c.detail;
  return os.str();
}

}  // namespace jetsym
