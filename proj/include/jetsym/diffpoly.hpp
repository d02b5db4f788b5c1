#pragma once

#include <climits>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "jetsym/monomial.hpp"
#include "jetsym/rational.hpp"

namespace jetsym {

struct Term {
  Monomial monomial;
  Rational coeff;
  friend bool operator==(const Term&, const Term&) = default;
};

/// Sentinel returned by DiffPoly::order() when no jet variable occurs.
inline constexpr int kOrderNone = INT_MIN;

/// Exact sparse polynomial in t, x, jet variables, parameter-function
/// derivatives and ζ symbols, with rational coefficients.
///
/// Terms are stored sorted ascending in the graded-lex order with nonzero
/// coefficients only, so structural equality is polynomial equality.
class DiffPoly {
 public:
  DiffPoly() = default;
  DiffPoly(const Rational& c);  // NOLINT(google-explicit-constructor)
  DiffPoly(long c) : DiffPoly(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  DiffPoly(int c) : DiffPoly(Rational(c)) {}   // NOLINT(google-explicit-constructor)

  static DiffPoly variable(VarId v, std::uint32_t exp = 1);
  static DiffPoly monomial(const Monomial& m, const Rational& c = 1);
  /// Sorts, merges equal monomials and drops zero coefficients.
  static DiffPoly from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational coefficient(const Monomial& m) const;

  /// Highest jet index present, or kOrderNone.
  int order() const;
  std::uint32_t degree(VarId v) const;
  /// Highest index of the given kind, or -1.
  int max_index(VarKind kind) const;
  bool contains(VarKind kind) const { return max_index(kind) >= 0; }
  bool contains(VarId v) const;
  /// True if every variable occurring is of one of the listed kinds.
  bool only_kinds(std::initializer_list<VarKind> kinds) const;

  DiffPoly operator-() const;
  DiffPoly& operator+=(const DiffPoly& o);
  DiffPoly& operator-=(const DiffPoly& o);
  DiffPoly& operator*=(const DiffPoly& o) { return *this = *this * o; }
  DiffPoly scaled(const Rational& c) const;

  friend DiffPoly operator+(DiffPoly a, const DiffPoly& b) { return a += b; }
  friend DiffPoly operator-(DiffPoly a, const DiffPoly& b) { return a -= b; }
  friend DiffPoly operator*(const DiffPoly& a, const DiffPoly& b);
  friend bool operator==(const DiffPoly&, const DiffPoly&) = default;

 private:
  static std::vector<Term> merge(const std::vector<Term>& a, const std::vector<Term>& b, bool subtract);
  std::vector<Term> terms_;
};

DiffPoly add(const DiffPoly& p, const DiffPoly& q);
DiffPoly mul(const DiffPoly& p, const DiffPoly& q);
DiffPoly scale(const DiffPoly& p, const Rational& c);
DiffPoly pow(const DiffPoly& p, unsigned n);

/// Formal partial derivative; every other variable is held fixed.
DiffPoly partial(const DiffPoly& p, VarId v);

/// Simultaneous substitution; unmapped variables pass through.
DiffPoly substitute(const DiffPoly& p, const std::map<VarId, DiffPoly>& rules);

/// Formal antiderivative with respect to a single variable, no constant.
DiffPoly antiderivative(const DiffPoly& p, VarId v);

inline int order(const DiffPoly& p) { return p.order(); }
inline std::uint32_t degree(const DiffPoly& p, VarId v) { return p.degree(v); }

/// Variable shorthands for building polynomials in code and tests.
namespace sym {
DiffPoly t();
DiffPoly x();
DiffPoly jet(std::uint32_t k);
DiffPoly par(std::uint32_t j, std::uint32_t slot = 0);
DiffPoly zeta(std::uint32_t k);
}  // namespace sym

/// How variables are spelled in human-readable output.
struct Notation {
  std::string dependent = "z";
  std::string parameter = "h";
  std::string second_parameter = "g";
  std::string zeta = "ζ";
};

/// Plain text, leading (largest) term first, e.g. "t^2*v_2 + 1/2*x*v".
std::string to_text(const DiffPoly& p, const Notation& notation = {});
std::string to_text(const Monomial& m, const Notation& notation = {});

std::ostream& operator<<(std::ostream& os, const DiffPoly& p);

}  // namespace jetsym
