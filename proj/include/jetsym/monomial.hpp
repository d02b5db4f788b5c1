#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace jetsym {

/// Variable kinds, listed in the global variable order. Zeta symbols form a
/// separate bank used only by the ζ-coordinate rewriting.
enum class VarKind : std::uint8_t { T = 0, X = 1, Jet = 2, Par = 3, Zeta = 4 };

/// A ring variable packed into one integer so that comparing codes gives the
/// global order T < X < Jet(0) < Jet(1) < … < Par(0) < Par(1) < … < Zeta(0) < ….
///
/// Par carries a function slot as well: slot 0 is the parameter function h,
/// slot 1 a second independent solution used in brackets like [Z(h¹), Z(h²)].
class VarId {
 public:
  static constexpr std::uint32_t kMaxIndex = 0xFFFF;

  constexpr VarId() = default;

  static constexpr VarId t() { return VarId(pack(VarKind::T, 0, 0)); }
  static constexpr VarId x() { return VarId(pack(VarKind::X, 0, 0)); }
  static VarId jet(std::uint32_t k);
  static VarId par(std::uint32_t j, std::uint32_t slot = 0);
  static VarId zeta(std::uint32_t k);

  constexpr VarKind kind() const { return static_cast<VarKind>(code_ >> 24); }
  constexpr std::uint32_t index() const { return code_ & 0xFFFF; }
  constexpr std::uint32_t slot() const { return (code_ >> 16) & 0xFF; }
  constexpr std::uint32_t code() const { return code_; }

  /// Same kind and slot, index shifted by `by` (used by D_x on Jet/Par/Zeta).
  VarId shifted(std::int32_t by) const;

  friend constexpr bool operator==(VarId, VarId) = default;
  friend constexpr auto operator<=>(VarId a, VarId b) { return a.code_ <=> b.code_; }

 private:
  constexpr explicit VarId(std::uint32_t code) : code_(code) {}
  static constexpr std::uint32_t pack(VarKind kind, std::uint32_t slot, std::uint32_t index) {
    return (static_cast<std::uint32_t>(kind) << 24) | (slot << 16) | index;
  }
  std::uint32_t code_ = 0;
};

/// Stable identifier used by the JSON form: "t", "x", "z3", "h2", "h2@1", "zeta4".
std::string var_key(VarId v);
VarId parse_var_key(const std::string& key);

/// Power product of ring variables. Factors are kept sorted by VarId with
/// strictly positive exponents, so equal monomials are bytewise identical.
///
/// The ordering is graded lexicographic: total degree first, then the
/// exponent of the smallest VarId decides (larger exponent = larger monomial).
class Monomial {
 public:
  struct Factor {
    VarId var;
    std::uint32_t exp;
    friend bool operator==(const Factor&, const Factor&) = default;
  };

  Monomial() = default;
  static Monomial of(VarId v, std::uint32_t exp = 1);
  /// Builds from arbitrary factors; merges duplicates and drops zero exponents.
  static Monomial from_factors(std::vector<Factor> factors);

  std::span<const Factor> factors() const { return factors_; }
  std::uint32_t degree() const { return degree_; }
  bool is_one() const { return factors_.empty(); }
  std::uint32_t exponent(VarId v) const;

  /// Copy with the exponent of `v` replaced (0 removes the variable).
  Monomial with_exponent(VarId v, std::uint32_t exp) const;
  /// Copy with every factor of the given kind removed.
  Monomial without_kind(VarKind kind) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.degree_ == b.degree_ && a.factors_ == b.factors_;
  }
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);

 private:
  std::vector<Factor> factors_;
  std::uint32_t degree_ = 0;
};

}  // namespace jetsym
