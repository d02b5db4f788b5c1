#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "common.hpp"

#include "jetsym/equation.hpp"

namespace {
const EvolutionEquation& heat = EvolutionEquation::heat();
const EvolutionEquation& pot = EvolutionEquation::potential_burgers();
const EvolutionEquation& burgers = EvolutionEquation::burgers();
}  // namespace

TEST_CASE("built-in equations") {
  CHECK(heat.rhs() == jet(2));
  CHECK(pot.rhs() == jet(2) + jet(1) * jet(1));
  CHECK(burgers.rhs() == jet(2) - jet(0) * jet(1));
  CHECK(&EvolutionEquation::from_name("potburgers") == &pot);
  CHECK_THROWS(EvolutionEquation::from_name("kdv"));
  for (std::uint32_t k = 0; k < 6; ++k) CHECK(burgers.rhs_derivative(k + 1) == dx(burgers, burgers.rhs_derivative(k)));
  CHECK_THROWS_AS(burgers.rhs_derivative(burgers.jet_limit() + 1), OrderExceeded);
}

TEST_CASE("total x-derivative") {
  CHECK(dx(burgers, jet(0).scaled(q(-1, 2))) == jet(1).scaled(q(-1, 2)));
  CHECK(dx(heat, T() * jet(1) + (X() * jet(0)).scaled(q(1, 2))) ==
        T() * jet(2) + jet(0).scaled(q(1, 2)) + (X() * jet(1)).scaled(q(1, 2)));
  CHECK(dx(heat, par(0) * jet(0)) == par(1) * jet(0) + par(0) * jet(1));
  CHECK(dx(heat, T()).is_zero());
  CHECK(dx_power(heat, X() * X() * X(), 3) == 6);
}

TEST_CASE("total t-derivative") {
  CHECK(dt(heat, jet(1)) == jet(3));
  CHECK(dt(burgers, jet(0)) == jet(2) - jet(0) * jet(1));
  CHECK(dt(heat, par(0)) == par(2));
  CHECK(dt(pot, T() * T()) == 2 * T());
  CHECK(dt(heat, par(1, 1)) == par(3, 1));
}

TEST_CASE("Frechet derivative") {
  CHECK(frechet(burgers, burgers.rhs(), jet(1)) == jet(3) - jet(1) * jet(1) - jet(0) * jet(2));
  std::mt19937_64 rng(3);
  for (int i = 0; i < 5; ++i) {
    const DiffPoly eta = random_jet_poly(rng, 2, 3);
    CHECK(frechet(heat, heat.rhs(), eta) == dx_power(heat, eta, 2));
    CHECK(frechet(burgers, jet(0), eta) == eta);
  }
}

TEST_CASE("invariance residual") {
  CHECK(invariance_residual(burgers, jet(1)).is_zero());
  CHECK(invariance_residual(burgers, jet(0)) == jet(0) * jet(1));
  CHECK(invariance_residual(heat, ExpPoly(par(0))).is_zero());
  CHECK(invariance_residual(heat, jet(0)).is_zero());
  CHECK(invariance_residual(pot, DiffPoly(1)).is_zero());
  CHECK_FALSE(invariance_residual(pot, jet(0)).is_zero());
}

TEST_CASE("invalid operands") {
  CHECK_THROWS_AS(dx(burgers, par(0)), InvalidOperand);
  CHECK_THROWS_AS(dt(burgers, par(0) * jet(1)), InvalidOperand);
  CHECK_THROWS_AS(dx(heat, sym::zeta(0)), InvalidOperand);
  CHECK_THROWS_AS(Characteristic(burgers, ExpPoly(par(0))), InvalidOperand);
  CHECK_THROWS_AS(dx(heat, jet(heat.jet_limit() + 1)), OrderExceeded);
  CHECK_THROWS_AS(dt(heat, jet(heat.jet_limit() + 1)), OrderExceeded);
}

TEST_CASE("D_x and D_t commute on-shell") {
  std::mt19937_64 rng(5);
  for (const EvolutionEquation* eq : {&heat, &pot, &burgers}) {
    for (int i = 0; i < 24; ++i) {
      DiffPoly p = random_jet_poly(rng, 3, 4);
      if (eq->admits_parameters() && i % 3 == 0) p += par(i % 4) * jet(1) + X() * par(1, 1);
      CHECK(dx(*eq, dt(*eq, p)) == dt(*eq, dx(*eq, p)));
    }
  }
}

TEST_CASE("invariance residual is linear") {
  std::mt19937_64 rng(6);
  for (const EvolutionEquation* eq : {&heat, &pot, &burgers}) {
    for (int i = 0; i < 10; ++i) {
      const DiffPoly a = random_jet_poly(rng, 3, 3), b = random_jet_poly(rng, 3, 3);
      const Rational ca = q(i + 1, 3), cb = q(-2, i + 1);
      CHECK(invariance_residual(*eq, a.scaled(ca) + b.scaled(cb)) ==
            invariance_residual(*eq, a).scaled(ca) + invariance_residual(*eq, b).scaled(cb));
    }
  }
}

TEST_CASE("exponential grades follow the chain rule") {
  // D_x(h e^{-w}) = (h_1 - h w_1) e^{-w}
  const ExpPoly e = ExpPoly::graded(par(0), -1);
  CHECK(dx(pot, e) == ExpPoly::graded(par(1) - par(0) * jet(1), -1));
  CHECK(dt(pot, ExpPoly::graded(DiffPoly(1), 1)) == ExpPoly::graded(pot.rhs(), 1));
  CHECK(invariance_residual(pot, e).is_zero());
  CHECK(partial_jet(ExpPoly::graded(jet(0), 2), 0) == ExpPoly::graded(1 + 2 * jet(0), 2));
  CHECK_THROWS_AS(e.as_poly(), InvalidOperand);
  CHECK(to_text(e, pot.notation()) == "(h)*exp(-w)");
}
