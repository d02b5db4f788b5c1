#include "jetsym/serialize.hpp"

#include <json.hpp>
#include <sstream>
#include <stdexcept>

#include "jetsym/family.hpp"

namespace jetsym {

using nlohmann::ordered_json;

namespace {

Family table_family(const EvolutionEquation& eq) {
  switch (eq.kind()) {
    case EquationKind::Heat: return Family::HeatQ;
    case EquationKind::PotentialBurgers: return Family::PotentialQ;
    case EquationKind::Burgers: return Family::BurgersQ;
  }
  throw std::logic_error("unknown equation kind");
}

ordered_json body_json(const ExpPoly& body) {
  ordered_json terms = ordered_json::array();
  for (const auto& [grade, p] : body.components()) {
    for (const auto& term : p.terms()) {
      ordered_json mono = ordered_json::array();
      for (const auto& f : term.monomial.factors()) mono.push_back(ordered_json::array({var_key(f.var), f.exp}));
      terms.push_back({{"grade", grade}, {"monomial", mono}, {"coeff", to_string(term.coeff, true)}});
    }
  }
  return terms;
}

ExpPoly body_from_json(const ordered_json& terms) {
  if (!terms.is_array()) throw std::invalid_argument("body must be an array of terms");
  std::map<int, std::vector<Term>> by_grade;
  for (const auto& t : terms) {
    std::vector<Monomial::Factor> factors;
    for (const auto& f : t.at("monomial")) {
      if (!f.is_array() || f.size() != 2) throw std::invalid_argument("monomial factor must be [key, exp]");
      factors.push_back({parse_var_key(f[0].get<std::string>()), f[1].get<std::uint32_t>()});
    }
    by_grade[t.at("grade").get<int>()].push_back(
        {Monomial::from_factors(std::move(factors)), parse_rational(t.at("coeff").get<std::string>())});
  }
  ExpPoly out;
  for (auto& [grade, ts] : by_grade) out += ExpPoly::graded(DiffPoly::from_terms(std::move(ts)), grade);
  return out;
}

std::string family_latex(Family f, int k, int l) {
  std::string base = "\\mathfrak{Q}";
  if (f == Family::PotentialQ) base = "\\tilde{\\mathfrak{Q}}";
  if (f == Family::BurgersQ) base = "\\hat{\\mathfrak{Q}}";
  return base + "^{" + std::to_string(k) + std::to_string(l) + "}";
}

std::string var_latex(VarId v, const Notation& n) {
  auto with_x = [](const std::string& base, std::uint32_t k) {
    return k == 0 ? base : base + "_{" + std::string(k, 'x') + "}";
  };
  switch (v.kind()) {
    case VarKind::T: return "t";
    case VarKind::X: return "x";
    case VarKind::Jet: return with_x(n.dependent, v.index());
    case VarKind::Par: return with_x(v.slot() == 0 ? n.parameter : n.second_parameter, v.index());
    case VarKind::Zeta: return "\\zeta^{" + std::to_string(v.index()) + "}";
  }
  return "?";
}

std::string coeff_latex(const Rational& c) {
  if (c.get_den() == 1) return c.get_num().get_str();
  return "\\frac{" + c.get_num().get_str() + "}{" + c.get_den().get_str() + "}";
}

std::string poly_latex(const DiffPoly& p, const Notation& n) {
  if (p.is_zero()) return "0";
  std::string out;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const Rational mag = abs(it->coeff);
    out += out.empty() ? (it->coeff < 0 ? "-" : "") : (it->coeff < 0 ? " - " : " + ");
    if (it->monomial.is_one()) {
      out += coeff_latex(mag);
      continue;
    }
    if (mag != 1) out += coeff_latex(mag) + " ";
    bool first = true;
    for (const auto& f : it->monomial.factors()) {
      if (!first) out += " ";
      first = false;
      std::string v = var_latex(f.var, n);
      if (f.exp > 1) {
        // v_{xx}^2 reads badly without grouping
        if (v.find('_') != std::string::npos || v.find('^') != std::string::npos) v = "{" + v + "}";
        v += "^{" + std::to_string(f.exp) + "}";
      }
      out += v;
    }
  }
  return out;
}

}  // namespace

SymmetryTableDoc make_table(const EvolutionEquation& eq, int max_order) {
  SymmetryTableDoc doc;
  doc.equation = eq.name();
  FamilyTable table(table_family(eq), max_order);
  for (const auto& m : table.members())
    doc.entries.push_back({m.label->family, m.label->k, m.label->l, m.body});
  return doc;
}

std::string to_json(const SymmetryTableDoc& doc, int indent) {
  ordered_json j;
  j["equation"] = doc.equation;
  ordered_json entries = ordered_json::array();
  for (const auto& e : doc.entries)
    entries.push_back({{"family", family_name(e.family)}, {"k", e.k}, {"l", e.l}, {"body", body_json(e.body)}});
  j["entries"] = entries;
  j["metadata"] = {{"engine_version", doc.engine_version}, {"monomial_order", doc.monomial_order}};
  return j.dump(indent) + "\n";
}

SymmetryTableDoc table_from_json(const std::string& text) {
  try {
    const auto j = ordered_json::parse(text);
    SymmetryTableDoc doc;
    doc.equation = j.at("equation").get<std::string>();
    for (const auto& e : j.at("entries"))
      doc.entries.push_back({parse_family(e.at("family").get<std::string>()), e.at("k").get<int>(),
                             e.at("l").get<int>(), body_from_json(e.at("body"))});
    doc.engine_version = j.at("metadata").at("engine_version").get<std::string>();
    doc.monomial_order = j.at("metadata").at("monomial_order").get<std::string>();
    return doc;
  } catch (const nlohmann::json::exception& ex) {
    throw std::invalid_argument(std::string("bad table document: ") + ex.what());
  }
}

std::string to_json(const SolveReport& report, int indent) {
  ordered_json j;
  j["equation"] = report.ansatz.equation->name();
  j["order"] = report.order;
  j["ansatz"] = {{"jet_degree", report.ansatz.jet_degree},
                 {"x_degree", report.ansatz.x_degree},
                 {"t_degree", report.ansatz.t_degree},
                 {"size", report.ansatz_size}};
  j["constraints"] = report.constraint_count;
  j["dimension"] = report.dimension;
  j["span"] = to_string(report.span);
  ordered_json basis = ordered_json::array();
  for (const auto& b : report.basis) basis.push_back(body_json(b.body));
  j["basis"] = basis;
  j["metadata"] = {{"engine_version", kEngineVersion}, {"monomial_order", kMonomialOrder}};
  return j.dump(indent) + "\n";
}

std::string to_latex(const ExpPoly& body, const Notation& notation) {
  if (body.is_zero()) return "0";
  std::string out;
  for (const auto& [grade, p] : body.components()) {
    if (!out.empty()) out += " + ";
    if (grade == 0) {
      out += poly_latex(p, notation);
      continue;
    }
    std::string g = grade == 1 ? "" : grade == -1 ? "-" : std::to_string(grade);
    out += "\\left(" + poly_latex(p, notation) + "\\right) e^{" + g + notation.dependent + "}";
  }
  return out;
}

std::string to_latex(const SymmetryTableDoc& doc) {
  const Notation n = EvolutionEquation::from_name(doc.equation).notation();
  std::ostringstream os;
  os << "\\begin{align*}\n";
  for (std::size_t i = 0; i < doc.entries.size(); ++i) {
    const auto& e = doc.entries[i];
    os << family_latex(e.family, e.k, e.l) << " &= " << to_latex(e.body, n);
    os << (i + 1 < doc.entries.size() ? " \\\\\n" : "\n");
  }
  os << "\\end{align*}\n";
  return os.str();
}

std::string to_text(const SymmetryTableDoc& doc) {
  const Notation n = EvolutionEquation::from_name(doc.equation).notation();
  std::ostringstream os;
  for (const auto& e : doc.entries)
    os << family_name(e.family) << "^{" << e.k << e.l << "} = " << to_text(e.body, n) << "\n";
  return os.str();
}

bool latex_well_formed(const std::string& latex) {
  long depth = 0;
  for (std::size_t i = 0; i < latex.size(); ++i) {
    const unsigned char c = latex[i];
    if (c < 0x20 && c != '\n') return false;
    if (c == '\\' && i + 1 < latex.size() && (latex[i + 1] == '{' || latex[i + 1] == '}')) {
      ++i;
      continue;
    }
    if (c == '{') ++depth;
    if (c == '}' && --depth < 0) return false;
  }
  return depth == 0;
}

}  // namespace jetsym
