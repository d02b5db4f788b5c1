#pragma once

#include <map>

#include "jetsym/diffpoly.hpp"

namespace jetsym {

/// Σ_m p_m · e^{m·z₀}: the exponential-graded extension of the jet ring with
/// integer grades. Zero components are never stored, so a grade-0-only value
/// is canonically a DiffPoly.
class ExpPoly {
 public:
  ExpPoly() = default;
  ExpPoly(DiffPoly p);  // NOLINT(google-explicit-constructor)
  ExpPoly(const Rational& c) : ExpPoly(DiffPoly(c)) {}  // NOLINT(google-explicit-constructor)
  ExpPoly(int c) : ExpPoly(DiffPoly(c)) {}              // NOLINT(google-explicit-constructor)

  /// p · e^{grade·z₀}
  static ExpPoly graded(DiffPoly p, int grade);

  const std::map<int, DiffPoly>& components() const { return components_; }
  const DiffPoly& component(int grade) const;
  bool is_zero() const { return components_.empty(); }
  /// True when nothing outside grade 0 is stored (zero counts as pure).
  bool is_pure() const;
  /// The grade-0 part; throws InvalidOperand if other grades are present.
  const DiffPoly& as_poly() const;

  int order() const;
  int max_index(VarKind kind) const;
  bool contains(VarKind kind) const { return max_index(kind) >= 0; }

  ExpPoly operator-() const;
  ExpPoly& operator+=(const ExpPoly& o);
  ExpPoly& operator-=(const ExpPoly& o);
  ExpPoly scaled(const Rational& c) const;
  /// Grade shift: multiplies by e^{by·z₀}.
  ExpPoly shifted(int by) const;

  friend ExpPoly operator+(ExpPoly a, const ExpPoly& b) { return a += b; }
  friend ExpPoly operator-(ExpPoly a, const ExpPoly& b) { return a -= b; }
  friend ExpPoly operator*(const ExpPoly& a, const ExpPoly& b);
  friend bool operator==(const ExpPoly&, const ExpPoly&) = default;

 private:
  void put(int grade, DiffPoly p);
  std::map<int, DiffPoly> components_;
};

/// ∂/∂z_k; for k = 0 each grade m also contributes m·p_m.
ExpPoly partial_jet(const ExpPoly& e, std::uint32_t k);

std::string to_text(const ExpPoly& e, const Notation& notation = {});
std::ostream& operator<<(std::ostream& os, const ExpPoly& e);

}  // namespace jetsym
