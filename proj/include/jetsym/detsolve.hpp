#pragma once

#include <optional>
#include <vector>

#include "jetsym/equation.hpp"
#include "jetsym/linalg.hpp"

namespace jetsym {

/// Polynomial ansatz for a characteristic of order ≤ `order`: monomials
/// t^a x^b · (jet monomial in z_0..z_order) with a ≤ t_degree, b ≤ x_degree
/// and total jet degree ≤ jet_degree.
struct Ansatz {
  const EvolutionEquation* equation = &EvolutionEquation::burgers();
  int order = 1;
  int jet_degree = 1;
  int x_degree = 1;
  int t_degree = 1;

  /// All bounds equal to the order.
  static Ansatz with_default_bounds(const EvolutionEquation& eq, int order);
};

inline constexpr std::size_t kDefaultAnsatzCap = 200000;

/// Ansatz monomials in ascending monomial order. Throws AnsatzTooLarge.
std::vector<Monomial> enumerate_ansatz(const Ansatz& a, std::size_t cap = kDefaultAnsatzCap);

/// invariance_residual(Σ c_α m_α) = 0, split by residual monomial.
struct LinearSystem {
  std::vector<Monomial> unknowns;     // columns
  std::vector<Monomial> constraints;  // rows, ascending
  SparseMatrix matrix;
};

/// Residuals of the ansatz monomials are computed in parallel and scattered
/// into rows in a fixed order.
LinearSystem build_system(const Ansatz& a, std::size_t cap = kDefaultAnsatzCap);
LinearSystem build_system_serial(const Ansatz& a, std::size_t cap = kDefaultAnsatzCap);

std::vector<DenseVector> nullspace(const LinearSystem& s);

enum class SpanVerdict { Match, Mismatch, NotApplicable };
const char* to_string(SpanVerdict v);

struct SolveReport {
  int order = 0;
  Ansatz ansatz;
  std::size_t ansatz_size = 0;
  std::size_t constraint_count = 0;
  std::size_t dimension = 0;
  std::vector<Characteristic> basis;
  SpanVerdict span = SpanVerdict::NotApplicable;
};

struct SolveOptions {
  std::optional<Ansatz> bounds;  // order field is overwritten by the requested order
  std::size_t cap = kDefaultAnsatzCap;
  /// Heat is solvable only behind this flag; its answer is heat polynomials
  /// mixed with the linear family and is not compared against anything.
  bool experimental_heat = false;
};

/// Builds and solves the bounded determining system, rebuilds the
/// characteristics, checks each residual is exactly zero and, for Burgers,
/// compares the span with {𝔔̂^{kl} : 1 ≤ k+l ≤ n}.
SolveReport solve_symmetries(const EvolutionEquation& eq, int order, const SolveOptions& options = {});

/// Rank of a set of polynomials over the rationals.
std::size_t poly_rank(const std::vector<DiffPoly>& polys);

/// Every monomial of p is an ansatz monomial.
bool fits_ansatz(const DiffPoly& p, const Ansatz& a);

}  // namespace jetsym
