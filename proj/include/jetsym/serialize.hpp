#pragma once

#include <string>
#include <vector>

#include "jetsym/detsolve.hpp"
#include "jetsym/equation.hpp"

namespace jetsym {

inline constexpr const char* kEngineVersion = "1.0.0";
inline constexpr const char* kMonomialOrder = "grlex:t<x<jet<par<zeta";

struct TableEntry {
  Family family = Family::HeatQ;
  int k = 0;
  int l = 0;
  ExpPoly body;
  friend bool operator==(const TableEntry&, const TableEntry&) = default;
};

/// A table of family members. Bodies keep the global ascending term order.
struct SymmetryTableDoc {
  std::string equation;
  std::vector<TableEntry> entries;
  std::string engine_version = kEngineVersion;
  std::string monomial_order = kMonomialOrder;
  friend bool operator==(const SymmetryTableDoc&, const SymmetryTableDoc&) = default;
};

/// The Q family of `eq` (heat, potential Burgers or Burgers) with k+l ≤ max_order.
SymmetryTableDoc make_table(const EvolutionEquation& eq, int max_order);

/// Terms are {"grade", "monomial": [[key, exp], ...], "coeff": "num/den"}.
std::string to_json(const SymmetryTableDoc& doc, int indent = 2);
/// Throws std::invalid_argument on schema violations.
SymmetryTableDoc table_from_json(const std::string& text);

/// Dimension, ansatz bounds, span verdict and the basis bodies.
std::string to_json(const SolveReport& report, int indent = 2);

std::string to_latex(const ExpPoly& body, const Notation& notation);
std::string to_latex(const SymmetryTableDoc& doc);
std::string to_text(const SymmetryTableDoc& doc);

/// Braces balance and no control characters other than newline.
bool latex_well_formed(const std::string& latex);

}  // namespace jetsym
