#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "common.hpp"

#include "jetsym/family.hpp"
#include "jetsym/operator.hpp"

namespace {
const EvolutionEquation& heat = EvolutionEquation::heat();
const EvolutionEquation& burgers = EvolutionEquation::burgers();
const Rational half = q(1, 2);
}  // namespace

TEST_CASE("application of the built-in operators") {
  CHECK(apply(ops::heat_g(), heat, jet(0)) == T() * jet(1) + (X() * jet(0)).scaled(half));
  CHECK(apply(ops::burgers_p() * ops::burgers_p(), burgers, 1) ==
        jet(1).scaled(-half) + (jet(0) * jet(0)).scaled(q(1, 4)));
  CHECK(apply(ops::heat_g() * ops::heat_g(), heat, jet(0)) ==
        T() * T() * jet(2) + T() * X() * jet(1) + ((X() * X()).scaled(q(1, 4)) + T().scaled(half)) * jet(0));
  CHECK(apply(ops::potential_p(), EvolutionEquation::potential_burgers(), 1) == jet(1));
  CHECK(apply(ops::identity(), heat, jet(3)) == jet(3));
  CHECK(apply(ops::compose({}), heat, jet(3)) == jet(3));
  CHECK(apply(ops::scalar(3) + ops::power(ops::total_x(), 2), heat, X() * jet(0)) == 3 * X() * jet(0) + X() * jet(2) + 2 * jet(1));
  CHECK_THROWS_AS(apply(ops::total_t(), heat, jet(0)), InvalidOperand);
  CHECK(ops::total_t().contains_dt());
  CHECK(ops::recursion_r1().contains_inverse());
  CHECK_FALSE(ops::heat_g().contains_inverse());
  CHECK(to_text(ops::heat_p()) == "D_x");
}

TEST_CASE("Euler operator") {
  CHECK(euler_residual(jet(0) * jet(1)).is_zero());
  CHECK(euler_residual(jet(1) * jet(1)) == -2 * jet(2));
  CHECK(euler_residual(jet(0)) == 1);
  CHECK(integrability_certificate(T() * jet(2)).is_total_derivative);
  CHECK_FALSE(integrability_certificate(jet(0) * jet(0)).is_total_derivative);
  CHECK_THROWS_AS(euler_residual(par(0)), InvalidOperand);
}

TEST_CASE("D_x preimage") {
  CHECK(dx_preimage(burgers, jet(1) + jet(0) * jet(1)) == jet(0) + (jet(0) * jet(0)).scaled(half));
  CHECK(dx_preimage(burgers, jet(1).scaled(-half)) == jet(0).scaled(-half));
  CHECK(apply(ops::recursion_r1(), burgers, jet(1).scaled(-half)) ==
        jet(2).scaled(-half) + (jet(0) * jet(1)).scaled(half));
  CHECK(dx_preimage(burgers, DiffPoly(1)) == X());
  CHECK_THROWS_AS(dx_preimage(burgers, jet(0)), NotATotalDerivative);
  try {
    dx_preimage(burgers, jet(1) * jet(1));
    FAIL("expected NotATotalDerivative");
  } catch (const NotATotalDerivative& e) {
    CHECK(e.euler_residual() == -2 * jet(2));
  }
}

TEST_CASE("D_x preimage round trip and certificate soundness") {
  std::mt19937_64 rng(9);
  int accepted = 0, rejected = 0;
  for (int i = 0; i < 40; ++i) {
    const DiffPoly g = random_jet_poly(rng, 3, 4);
    const DiffPoly p = dx(burgers, g);
    const DiffPoly back = dx_preimage(burgers, p);
    CHECK(dx(burgers, back) == p);
    CHECK(dx(burgers, dx_inverse(burgers, p)) == p);
    // the preimage differs from g by a function of t alone
    CHECK((g - back).only_kinds({VarKind::T}));

    const DiffPoly r = i % 2 ? dx(burgers, random_jet_poly(rng, 2, 3)) : random_jet_poly(rng, 3, 3) + jet(0) * jet(0) * X();
    const bool total = euler_residual(r).is_zero();
    try {
      const DiffPoly g2 = dx_preimage(burgers, r);
      CHECK(dx(burgers, g2) == r);
      CHECK(total);
      ++accepted;
    } catch (const NotATotalDerivative& e) {
      CHECK_FALSE(total);
      CHECK(e.euler_residual() == euler_residual(r));
      ++rejected;
    }
  }
  CHECK(rejected > 0);
  CHECK(accepted > 0);
  CHECK(accepted + rejected == 40);
}

TEST_CASE("D_x inverse picks the potential on symmetries") {
  const FamilyTable table(Family::BurgersQ, 4);
  for (const auto& m : table.members()) {
    const int k = m.label->k, l = m.label->l;
    const DiffPoly potential = apply(ops::power(ops::burgers_g(), k) * ops::power(ops::burgers_p(), l), burgers, 1);
    CHECK(dx_inverse(burgers, m.poly()) == potential);
    CHECK_NOTHROW(apply(ops::recursion_r1(), burgers, m.poly()));
    CHECK_NOTHROW(apply(ops::recursion_r2(), burgers, m.poly()));
  }
  // the zero-constant preimage of Q^{20} differs by a function of t
  CHECK(dx_inverse(burgers, table.at(2, 0).poly()) - dx_preimage(burgers, table.at(2, 0).poly()) == T().scaled(half));
}

TEST_CASE("operator identity probes") {
  std::vector<DiffPoly> probes;
  for (int s = 0; s <= 4; ++s)
    for (int k = 0; k <= s; ++k)
      probes.push_back(apply(ops::power(ops::burgers_g(), k) * ops::power(ops::burgers_p(), s - k), burgers, 1));
  const auto b = ops::burgers_potential_operator();
  CHECK(operator_identity_probe(ops::commutator(b, ops::burgers_p()), ops::scalar(0), burgers, probes).all_zero());
  CHECK(operator_identity_probe(ops::commutator(b, ops::burgers_g()), ops::scalar(0), burgers, probes).all_zero());
  // the potentials themselves solve the potential equation
  CHECK(operator_identity_probe(b, ops::scalar(0), burgers, probes).all_zero());

  std::mt19937_64 rng(4);
  std::vector<DiffPoly> heat_probes;
  for (int i = 0; i < 20; ++i) heat_probes.push_back(random_jet_poly(rng, 3, 4));
  const auto pg = ops::heat_p() * ops::heat_g();
  const auto gp_half = ops::heat_g() * ops::heat_p() + ops::scalar(half);
  const ProbeReport par = operator_identity_probe(pg, gp_half, heat, heat_probes);
  const ProbeReport ser = operator_identity_probe_serial(pg, gp_half, heat, heat_probes);
  CHECK(par.all_zero());
  CHECK(par.residuals == ser.residuals);
  CHECK(operator_identity_probe(pg, ops::heat_g() * ops::heat_p(), heat, heat_probes).failures() == heat_probes.size());
}

TEST_CASE("[R1, R2] on the Burgers family") {
  // Holds on every member except Q^{10}: there D_x loses the constant
  // P G 1 - G P 1 = 1/2, and [R1, R2] Q^{10} comes out as Q^{10}.
  const FamilyTable table(Family::BurgersQ, 5);
  std::vector<DiffPoly> probes;
  for (const auto& m : table.members()) probes.push_back(m.poly());
  const auto lhs = ops::commutator(ops::recursion_r1(), ops::recursion_r2());
  const ProbeReport r = operator_identity_probe(lhs, ops::scalar(half), burgers, probes);
  CHECK(r.failures() == 1);
  for (std::size_t i = 0; i < probes.size(); ++i) {
    const auto& label = *table.members()[i].label;
    if (label.k == 1 && label.l == 0)
      CHECK(r.residuals[i] == probes[i].scaled(half));
    else
      CHECK(r.residuals[i].is_zero());
  }
  const auto conjugated = ops::total_x() * ops::commutator(ops::burgers_p(), ops::burgers_g()) * ops::inverse_x();
  CHECK(operator_identity_probe(conjugated, ops::scalar(half), burgers, probes).all_zero());
}

TEST_CASE("DxInv propagates NotATotalDerivative") {
  CHECK_THROWS_AS(apply(ops::recursion_r1(), burgers, jet(0)), NotATotalDerivative);
  CHECK_THROWS_AS(operator_identity_probe(ops::recursion_r2(), ops::identity(), burgers, {jet(1), jet(0)}),
                  NotATotalDerivative);
}
