#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "jetsym/diffpoly.hpp"

namespace jetsym {

/// One relation checked over a set of cases. `detail` names the first failing
/// case and its residual, or carries an informational note.
struct CheckResult {
  std::string name;
  std::size_t cases = 0;
  std::size_t failed = 0;
  std::string detail;
  /// Reported alongside a relation but not part of any verdict.
  bool informational = false;
  bool pass() const { return failed == 0 && cases > 0; }
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;
  /// Both ignore informational checks.
  bool pass() const;
  std::size_t failures() const;
};

/// Suite names accepted by run_suite, in the order "all" runs them.
const std::vector<std::string>& suite_names();

/// `max_order` bounds k+l for family sweeps, the ζ index for the zeta suite
/// and the solver order for the solver suite. Throws std::invalid_argument on
/// an unknown suite name. "all" returns one report per suite.
std::vector<SuiteReport> run_suite(const std::string& name, int max_order);

SuiteReport invariance_suite(int max_order);
/// Q-family structure constants for k+l ≤ max_order, [Z(h), Q^{kl}] for
/// k+l ≤ max_order+1 and [Z(h¹), Z(h²)].
SuiteReport commutator_suite(int max_order);
SuiteReport recursion_suite(int max_order);
SuiteReport operator_suite(int probe_count = 24);
SuiteReport zeta_suite(int max_order);
SuiteReport maps_suite(int max_order);
SuiteReport lie_suite();
SuiteReport solver_suite(int max_order);

/// Random polynomial in t, x and z_0..z_order: `terms` monomials of jet degree
/// ≤ 3 and t, x degree ≤ 2, small nonzero rational coefficients.
DiffPoly random_jet_poly(std::mt19937_64& rng, int order, int terms);

/// "PASS name (cases)" or "FAIL name (failed/cases): detail", prefixed with
/// "INFO " for informational checks.
std::string format_check(const CheckResult& c);

}  // namespace jetsym
