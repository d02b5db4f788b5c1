#include "jetsym/exppoly.hpp"

#include <algorithm>
#include <ostream>

#include "jetsym/errors.hpp"

namespace jetsym {

ExpPoly::ExpPoly(DiffPoly p) { put(0, std::move(p)); }

ExpPoly ExpPoly::graded(DiffPoly p, int grade) {
  ExpPoly e;
  e.put(grade, std::move(p));
  return e;
}

void ExpPoly::put(int grade, DiffPoly p) {
  if (p.is_zero())
    components_.erase(grade);
  else
    components_[grade] = std::move(p);
}

const DiffPoly& ExpPoly::component(int grade) const {
  static const DiffPoly zero;
  auto it = components_.find(grade);
  return it == components_.end() ? zero : it->second;
}

bool ExpPoly::is_pure() const { return components_.empty() || (components_.size() == 1 && components_.count(0)); }

const DiffPoly& ExpPoly::as_poly() const {
  if (!is_pure()) throw InvalidOperand("exponential factor present where a plain polynomial is required");
  return component(0);
}

int ExpPoly::order() const {
  int best = kOrderNone;
  for (const auto& [grade, p] : components_) {
    best = std::max(best, p.order());
    if (grade != 0) best = std::max(best, 0);  // e^{m z0} depends on z0
  }
  return best;
}

int ExpPoly::max_index(VarKind kind) const {
  int best = -1;
  for (const auto& [grade, p] : components_) {
    best = std::max(best, p.max_index(kind));
    if (grade != 0 && kind == VarKind::Jet) best = std::max(best, 0);
  }
  return best;
}

ExpPoly ExpPoly::operator-() const {
  ExpPoly r = *this;
  for (auto& [grade, p] : r.components_) p = -p;
  return r;
}

ExpPoly& ExpPoly::operator+=(const ExpPoly& o) {
  for (const auto& [grade, p] : o.components_) put(grade, component(grade) + p);
  return *this;
}

ExpPoly& ExpPoly::operator-=(const ExpPoly& o) {
  for (const auto& [grade, p] : o.components_) put(grade, component(grade) - p);
  return *this;
}

ExpPoly ExpPoly::scaled(const Rational& c) const {
  ExpPoly r;
  for (const auto& [grade, p] : components_) r.put(grade, p.scaled(c));
  return r;
}

ExpPoly ExpPoly::shifted(int by) const {
  ExpPoly r;
  for (const auto& [grade, p] : components_) r.components_.emplace(grade + by, p);
  return r;
}

ExpPoly operator*(const ExpPoly& a, const ExpPoly& b) {
  ExpPoly r;
  for (const auto& [ga, pa] : a.components_)
    for (const auto& [gb, pb] : b.components_) r.put(ga + gb, r.component(ga + gb) + pa * pb);
  return r;
}

ExpPoly partial_jet(const ExpPoly& e, std::uint32_t k) {
  ExpPoly r;
  const auto v = VarId::jet(k);
  for (const auto& [grade, p] : e.components()) {
    DiffPoly d = partial(p, v);
    if (k == 0 && grade != 0) d += p.scaled(grade);
    r += ExpPoly::graded(std::move(d), grade);
  }
  return r;
}

std::string to_text(const ExpPoly& e, const Notation& notation) {
  if (e.is_zero()) return "0";
  std::string out;
  for (const auto& [grade, p] : e.components()) {
    if (!out.empty()) out += " + ";
    if (grade == 0) {
      out += to_text(p, notation);
      continue;
    }
    out += "(" + to_text(p, notation) + ")*exp(";
    if (grade == -1)
      out += "-";
    else if (grade != 1)
      out += std::to_string(grade) + "*";
    out += notation.dependent + ")";
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const ExpPoly& e) { return os << to_text(e); }

}  // namespace jetsym
