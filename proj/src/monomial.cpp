#include "jetsym/monomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace jetsym {

namespace {

void check_index(std::uint32_t k) {
  if (k > VarId::kMaxIndex) throw std::out_of_range("variable index too large");
}

}  // namespace

VarId VarId::jet(std::uint32_t k) {
  check_index(k);
  return VarId(pack(VarKind::Jet, 0, k));
}

VarId VarId::par(std::uint32_t j, std::uint32_t slot) {
  check_index(j);
  if (slot > 0xFF) throw std::out_of_range("parameter slot too large");
  return VarId(pack(VarKind::Par, slot, j));
}

VarId VarId::zeta(std::uint32_t k) {
  check_index(k);
  return VarId(pack(VarKind::Zeta, 0, k));
}

VarId VarId::shifted(std::int32_t by) const {
  const auto k = static_cast<std::int64_t>(index()) + by;
  if (kind() == VarKind::T || kind() == VarKind::X) throw std::logic_error("cannot shift t or x");
  if (k < 0) throw std::out_of_range("negative variable index");
  check_index(static_cast<std::uint32_t>(k));
  return VarId(pack(kind(), slot(), static_cast<std::uint32_t>(k)));
}

std::string var_key(VarId v) {
  switch (v.kind()) {
    case VarKind::T: return "t";
    case VarKind::X: return "x";
    case VarKind::Jet: return "z" + std::to_string(v.index());
    case VarKind::Par: {
      std::string key = "h" + std::to_string(v.index());
      if (v.slot() != 0) key += "@" + std::to_string(v.slot());
      return key;
    }
    case VarKind::Zeta: return "zeta" + std::to_string(v.index());
  }
  return "?";
}

VarId parse_var_key(const std::string& key) {
  auto number = [&](std::size_t from, std::size_t to) {
    const auto digits = key.substr(from, to - from);
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(), ::isdigit))
      throw std::invalid_argument("bad variable key: " + key);
    return static_cast<std::uint32_t>(std::stoul(digits));
  };
  if (key == "t") return VarId::t();
  if (key == "x") return VarId::x();
  if (key.rfind("zeta", 0) == 0) return VarId::zeta(number(4, key.size()));
  if (key.rfind('z', 0) == 0) return VarId::jet(number(1, key.size()));
  if (key.rfind('h', 0) == 0) {
    const auto at = key.find('@');
    if (at == std::string::npos) return VarId::par(number(1, key.size()));
    return VarId::par(number(1, at), number(at + 1, key.size()));
  }
  throw std::invalid_argument("bad variable key: " + key);
}

Monomial Monomial::of(VarId v, std::uint32_t exp) {
  Monomial m;
  if (exp > 0) {
    m.factors_.push_back({v, exp});
    m.degree_ = exp;
  }
  return m;
}

Monomial Monomial::from_factors(std::vector<Factor> factors) {
  std::sort(factors.begin(), factors.end(),
            [](const Factor& a, const Factor& b) { return a.var < b.var; });
  Monomial m;
  for (const auto& f : factors) {
    if (f.exp == 0) continue;
    if (!m.factors_.empty() && m.factors_.back().var == f.var)
      m.factors_.back().exp += f.exp;
    else
      m.factors_.push_back(f);
    m.degree_ += f.exp;
  }
  return m;
}

std::uint32_t Monomial::exponent(VarId v) const {
  auto it = std::lower_bound(factors_.begin(), factors_.end(), v,
                             [](const Factor& f, VarId id) { return f.var < id; });
  return (it != factors_.end() && it->var == v) ? it->exp : 0;
}

Monomial Monomial::with_exponent(VarId v, std::uint32_t exp) const {
  Monomial m;
  m.factors_.reserve(factors_.size() + 1);
  bool placed = false;
  for (const auto& f : factors_) {
    if (!placed && v <= f.var) {
      placed = true;
      if (exp > 0) m.factors_.push_back({v, exp});
      if (f.var == v) continue;
    }
    m.factors_.push_back(f);
  }
  if (!placed && exp > 0) m.factors_.push_back({v, exp});
  for (const auto& f : m.factors_) m.degree_ += f.exp;
  return m;
}

Monomial Monomial::without_kind(VarKind kind) const {
  Monomial m;
  for (const auto& f : factors_) {
    if (f.var.kind() == kind) continue;
    m.factors_.push_back(f);
    m.degree_ += f.exp;
  }
  return m;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial m;
  m.factors_.reserve(a.factors_.size() + b.factors_.size());
  auto i = a.factors_.begin();
  auto j = b.factors_.begin();
  while (i != a.factors_.end() && j != b.factors_.end()) {
    if (i->var < j->var) {
      m.factors_.push_back(*i++);
    } else if (j->var < i->var) {
      m.factors_.push_back(*j++);
    } else {
      m.factors_.push_back({i->var, i->exp + j->exp});
      ++i;
      ++j;
    }
  }
  m.factors_.insert(m.factors_.end(), i, a.factors_.end());
  m.factors_.insert(m.factors_.end(), j, b.factors_.end());
  m.degree_ = a.degree_ + b.degree_;
  return m;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  if (a.degree_ != b.degree_) return a.degree_ <=> b.degree_;
  const auto n = std::min(a.factors_.size(), b.factors_.size());
  for (std::size_t i = 0; i < n; ++i) {
    const auto& fa = a.factors_[i];
    const auto& fb = b.factors_[i];
    // The side holding the smaller variable has a positive exponent where the
    // other has zero, so it is the larger monomial.
    if (fa.var != fb.var) return fa.var < fb.var ? std::strong_ordering::greater : std::strong_ordering::less;
    if (fa.exp != fb.exp) return fa.exp <=> fb.exp;
  }
  return a.factors_.size() <=> b.factors_.size();
}

}  // namespace jetsym
