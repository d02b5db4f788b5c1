#pragma once

#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "jetsym/equation.hpp"

namespace jetsym {

/// Operator expression tree over D_x, D_x⁻¹, D_t, multiplication operators
/// and rational scalars. Composition applies right to left; the empty
/// composition is the identity. Nodes are shared and immutable.
class OperatorExpr {
 public:
  struct TotalX {};
  struct InverseX {};
  /// Admitted only by operator_identity_probe.
  struct TotalT {};
  struct MulBy {
    DiffPoly factor;
  };
  struct Scale {
    Rational factor;
  };
  struct Sum {
    std::vector<OperatorExpr> terms;
  };
  struct Compose {
    std::vector<OperatorExpr> factors;
  };
  using Node = std::variant<TotalX, InverseX, TotalT, MulBy, Scale, Sum, Compose>;

  OperatorExpr() : OperatorExpr(Compose{}) {}
  explicit OperatorExpr(Node node) : node_(std::make_shared<const Node>(std::move(node))) {}

  const Node& node() const { return *node_; }
  bool contains_dt() const;
  bool contains_inverse() const;

  friend OperatorExpr operator+(const OperatorExpr& a, const OperatorExpr& b);
  friend OperatorExpr operator-(const OperatorExpr& a, const OperatorExpr& b);
  /// a * b is the composition a ∘ b.
  friend OperatorExpr operator*(const OperatorExpr& a, const OperatorExpr& b);
  friend OperatorExpr operator*(const Rational& c, const OperatorExpr& a);

 private:
  std::shared_ptr<const Node> node_;
};

namespace ops {
OperatorExpr identity();
OperatorExpr total_x();
OperatorExpr inverse_x();
OperatorExpr total_t();
OperatorExpr multiply(DiffPoly p);
OperatorExpr scalar(Rational c);
OperatorExpr sum(std::vector<OperatorExpr> terms);
OperatorExpr compose(std::vector<OperatorExpr> factors);
OperatorExpr power(const OperatorExpr& op, unsigned n);
OperatorExpr commutator(const OperatorExpr& a, const OperatorExpr& b);

/// P = D_x and G = tD_x + x/2 (heat equation).
OperatorExpr heat_p();
OperatorExpr heat_g();
/// P̃ = D_x + w_x and G̃ = tP̃ + x/2 (potential Burgers).
OperatorExpr potential_p();
OperatorExpr potential_g();
/// P̂ = D_x − v/2 and Ĝ = tD_x + (x − vt)/2 (Burgers).
OperatorExpr burgers_p();
OperatorExpr burgers_g();
/// R₁ = D_x P̂ D_x⁻¹, R₂ = D_x Ĝ D_x⁻¹.
OperatorExpr recursion_r1();
OperatorExpr recursion_r2();
/// D_t + vD_x − D_x², the operator annihilating the potentials Ĝ^k P̂^l 1.
OperatorExpr burgers_potential_operator();
}  // namespace ops

std::string to_text(const OperatorExpr& op);

/// Structural evaluation. D_x⁻¹ uses dx_inverse; D_t is rejected unless
/// `allow_dt` is set (only operator_identity_probe sets it).
DiffPoly apply(const OperatorExpr& op, const EvolutionEquation& eq, const DiffPoly& p, bool allow_dt = false);

/// Σ_k (−D_x)^k ∂p/∂z_k in the free jet ring; zero iff p lies in the image of D_x.
DiffPoly euler_residual(const DiffPoly& p);

struct IntegrabilityCertificate {
  DiffPoly euler_residual;
  bool is_total_derivative = false;
};
IntegrabilityCertificate integrability_certificate(const DiffPoly& p);

/// g with D_x g = p, by peeling off the top jet variable. The result has no
/// term built from t alone (so in particular no constant term). Throws
/// NotATotalDerivative carrying the Euler residual.
DiffPoly dx_preimage(const EvolutionEquation& eq, const DiffPoly& p);

/// The D_x⁻¹ used inside operator expressions. Starts from dx_preimage and,
/// when the equation is a conservation law z_t = D_x K and the potential
/// residual D_t g − K'[D_x g] is a function of t alone, adds the function of t
/// that cancels it. On symmetry characteristics this selects the potential
/// symmetry, e.g. D_x⁻¹ 𝔔̂^{kl} = Ĝ^k P̂^l 1.
DiffPoly dx_inverse(const EvolutionEquation& eq, const DiffPoly& p);

struct ProbeReport {
  std::vector<DiffPoly> residuals;
  bool all_zero() const;
  std::size_t failures() const;
};

/// Evaluates lhs − rhs on every probe. Probes run in parallel.
ProbeReport operator_identity_probe(const OperatorExpr& lhs, const OperatorExpr& rhs, const EvolutionEquation& eq,
                                    const std::vector<DiffPoly>& probes);
/// Serial reference for operator_identity_probe.
ProbeReport operator_identity_probe_serial(const OperatorExpr& lhs, const OperatorExpr& rhs,
                                           const EvolutionEquation& eq, const std::vector<DiffPoly>& probes);

}  // namespace jetsym
