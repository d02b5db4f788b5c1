#include "jetsym/diffpoly.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace jetsym {

DiffPoly::DiffPoly(const Rational& c) {
  if (c != 0) terms_.push_back({Monomial{}, c});
}

DiffPoly DiffPoly::variable(VarId v, std::uint32_t exp) { return monomial(Monomial::of(v, exp)); }

DiffPoly DiffPoly::monomial(const Monomial& m, const Rational& c) {
  DiffPoly p;
  if (c != 0) p.terms_.push_back({m, c});
  return p;
}

DiffPoly DiffPoly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.monomial < b.monomial; });
  DiffPoly p;
  p.terms_.reserve(terms.size());
  for (auto& term : terms) {
    if (!p.terms_.empty() && p.terms_.back().monomial == term.monomial) {
      p.terms_.back().coeff += term.coeff;
    } else {
      if (!p.terms_.empty() && p.terms_.back().coeff == 0) p.terms_.pop_back();
      p.terms_.push_back(std::move(term));
    }
  }
  if (!p.terms_.empty() && p.terms_.back().coeff == 0) p.terms_.pop_back();
  return p;
}

bool DiffPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.front().monomial.is_one());
}

Rational DiffPoly::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, const Monomial& key) { return t.monomial < key; });
  return (it != terms_.end() && it->monomial == m) ? it->coeff : Rational(0);
}

int DiffPoly::max_index(VarKind kind) const {
  int best = -1;
  for (const auto& term : terms_)
    for (const auto& f : term.monomial.factors())
      if (f.var.kind() == kind) best = std::max(best, static_cast<int>(f.var.index()));
  return best;
}

int DiffPoly::order() const {
  const int k = max_index(VarKind::Jet);
  return k < 0 ? kOrderNone : k;
}

std::uint32_t DiffPoly::degree(VarId v) const {
  std::uint32_t d = 0;
  for (const auto& term : terms_) d = std::max(d, term.monomial.exponent(v));
  return d;
}

bool DiffPoly::contains(VarId v) const { return degree(v) > 0; }

bool DiffPoly::only_kinds(std::initializer_list<VarKind> kinds) const {
  for (const auto& term : terms_)
    for (const auto& f : term.monomial.factors())
      if (std::find(kinds.begin(), kinds.end(), f.var.kind()) == kinds.end()) return false;
  return true;
}

DiffPoly DiffPoly::operator-() const {
  DiffPoly r = *this;
  for (auto& term : r.terms_) term.coeff = -term.coeff;
  return r;
}

std::vector<Term> DiffPoly::merge(const std::vector<Term>& a, const std::vector<Term>& b, bool subtract) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() || j != b.end()) {
    if (j == b.end() || (i != a.end() && i->monomial < j->monomial)) {
      out.push_back(*i++);
    } else if (i == a.end() || j->monomial < i->monomial) {
      out.push_back({j->monomial, subtract ? Rational(-j->coeff) : j->coeff});
      ++j;
    } else {
      Rational c = subtract ? Rational(i->coeff - j->coeff) : Rational(i->coeff + j->coeff);
      if (c != 0) out.push_back({i->monomial, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

DiffPoly& DiffPoly::operator+=(const DiffPoly& o) {
  if (o.terms_.empty()) return *this;
  terms_ = merge(terms_, o.terms_, false);
  return *this;
}

DiffPoly& DiffPoly::operator-=(const DiffPoly& o) {
  if (o.terms_.empty()) return *this;
  terms_ = merge(terms_, o.terms_, true);
  return *this;
}

DiffPoly DiffPoly::scaled(const Rational& c) const {
  if (c == 0) return {};
  DiffPoly r = *this;
  for (auto& term : r.terms_) term.coeff *= c;
  return r;
}

DiffPoly operator*(const DiffPoly& a, const DiffPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Term> products;
  products.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& ta : a.terms_)
    for (const auto& tb : b.terms_) products.push_back({ta.monomial * tb.monomial, ta.coeff * tb.coeff});
  return DiffPoly::from_terms(std::move(products));
}

DiffPoly add(const DiffPoly& p, const DiffPoly& q) { return p + q; }
DiffPoly mul(const DiffPoly& p, const DiffPoly& q) { return p * q; }
DiffPoly scale(const DiffPoly& p, const Rational& c) { return p.scaled(c); }

DiffPoly pow(const DiffPoly& p, unsigned n) {
  DiffPoly result(1);
  DiffPoly base = p;
  while (n > 0) {
    if (n & 1u) result *= base;
    n >>= 1u;
    if (n > 0) base *= base;
  }
  return result;
}

DiffPoly partial(const DiffPoly& p, VarId v) {
  std::vector<Term> out;
  for (const auto& term : p.terms()) {
    const auto e = term.monomial.exponent(v);
    if (e == 0) continue;
    out.push_back({term.monomial.with_exponent(v, e - 1), term.coeff * e});
  }
  return DiffPoly::from_terms(std::move(out));
}

DiffPoly antiderivative(const DiffPoly& p, VarId v) {
  std::vector<Term> out;
  for (const auto& term : p.terms()) {
    const auto e = term.monomial.exponent(v);
    out.push_back({term.monomial.with_exponent(v, e + 1), term.coeff / (e + 1)});
  }
  return DiffPoly::from_terms(std::move(out));
}

DiffPoly substitute(const DiffPoly& p, const std::map<VarId, DiffPoly>& rules) {
  if (rules.empty()) return p;
  std::map<std::pair<VarId, std::uint32_t>, DiffPoly> powers;
  auto power_of = [&](VarId v, std::uint32_t e) -> const DiffPoly& {
    auto key = std::make_pair(v, e);
    auto it = powers.find(key);
    if (it == powers.end()) it = powers.emplace(key, pow(rules.at(v), e)).first;
    return it->second;
  };
  DiffPoly result;
  for (const auto& term : p.terms()) {
    std::vector<Monomial::Factor> kept;
    DiffPoly factor(term.coeff);
    for (const auto& f : term.monomial.factors()) {
      if (rules.count(f.var))
        factor *= power_of(f.var, f.exp);
      else
        kept.push_back(f);
    }
    result += factor * DiffPoly::monomial(Monomial::from_factors(std::move(kept)));
  }
  return result;
}

namespace sym {
DiffPoly t() { return DiffPoly::variable(VarId::t()); }
DiffPoly x() { return DiffPoly::variable(VarId::x()); }
DiffPoly jet(std::uint32_t k) { return DiffPoly::variable(VarId::jet(k)); }
DiffPoly par(std::uint32_t j, std::uint32_t slot) { return DiffPoly::variable(VarId::par(j, slot)); }
DiffPoly zeta(std::uint32_t k) { return DiffPoly::variable(VarId::zeta(k)); }
}  // namespace sym

namespace {

std::string var_text(VarId v, const Notation& n) {
  auto subscripted = [](const std::string& base, std::uint32_t k) {
    return k == 0 ? base : base + "_" + std::to_string(k);
  };
  switch (v.kind()) {
    case VarKind::T: return "t";
    case VarKind::X: return "x";
    case VarKind::Jet: return subscripted(n.dependent, v.index());
    case VarKind::Par: return subscripted(v.slot() == 0 ? n.parameter : n.second_parameter, v.index());
    case VarKind::Zeta: return n.zeta + std::to_string(v.index());
  }
  return "?";
}

}  // namespace

std::string to_text(const Monomial& m, const Notation& notation) {
  std::string out;
  for (const auto& f : m.factors()) {
    if (!out.empty()) out += '*';
    out += var_text(f.var, notation);
    if (f.exp > 1) out += "^" + std::to_string(f.exp);
  }
  return out.empty() ? "1" : out;
}

std::string to_text(const DiffPoly& p, const Notation& notation) {
  if (p.is_zero()) return "0";
  std::string out;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const bool negative = it->coeff < 0;
    const Rational magnitude = abs(it->coeff);
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    if (it->monomial.is_one()) {
      out += to_string(magnitude);
    } else {
      if (magnitude != 1) out += to_string(magnitude) + "*";
      out += to_text(it->monomial, notation);
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const DiffPoly& p) { return os << to_text(p); }

}  // namespace jetsym
