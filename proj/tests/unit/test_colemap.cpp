#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "common.hpp"

#include "jetsym/colemap.hpp"
#include "jetsym/family.hpp"

namespace {
const EvolutionEquation& heat = EvolutionEquation::heat();
const EvolutionEquation& pot = EvolutionEquation::potential_burgers();
const Rational half = q(1, 2);
}  // namespace

TEST_CASE("heat to potential") {
  CHECK(heat_to_potential(q_char(Family::HeatQ, 0, 0)).poly() == 1);
  CHECK(heat_to_potential(q_char(Family::HeatQ, 0, 1)).poly() == jet(1));
  const Characteristic z = heat_to_potential(q_char(Family::HeatZ, 0, 0));
  CHECK(z.body == ExpPoly::graded(par(0), -1));
  CHECK(z.equation == &pot);
  REQUIRE(z.label.has_value());
  CHECK(z.label->family == Family::PotentialZ);
  // u_2 + u (not a family member) maps termwise
  CHECK(heat_to_potential(Characteristic(heat, jet(2) + jet(0))).poly() == jet(2) + jet(1) * jet(1) + 1);
}

TEST_CASE("w-jet substitution") {
  CHECK(w_jet_substitution(jet(1) * jet(1)) == (jet(0) * jet(0)).scaled(q(1, 4)));
  CHECK(w_jet_substitution(jet(2) + jet(1) * jet(1)) == jet(1).scaled(-half) + (jet(0) * jet(0)).scaled(q(1, 4)));
  CHECK(w_jet_substitution(T() * X()) == T() * X());
  CHECK_THROWS_AS(w_jet_substitution(jet(0)), BareDependentVariable);
}

TEST_CASE("potential to Burgers") {
  CHECK(potential_to_burgers(q_char(Family::PotentialQ, 0, 0)).body.is_zero());
  const Characteristic img = potential_to_burgers(q_char(Family::PotentialQ, 0, 1));
  CHECK(img.poly() == jet(1));
  CHECK(img.equation == &EvolutionEquation::burgers());
  CHECK(potential_to_burgers(q_char(Family::PotentialQ, 0, 1), true).poly() == jet(1).scaled(-half));
  CHECK_THROWS_AS(potential_to_burgers(q_char(Family::PotentialZ, 0, 0)), NotProjectable);
  CHECK_THROWS_AS(potential_to_burgers(q_char(Family::PotentialZ, 1, 2, 1)), NotProjectable);
  // D_x(w w_1) keeps a bare w: not a function of (t, x, w_x)
  CHECK_THROWS_AS(potential_to_burgers(Characteristic(pot, jet(0) * jet(1))), NotProjectable);
  CHECK(potential_to_burgers(Characteristic(pot, jet(0))).poly() == jet(0));
}

TEST_CASE("the chain sends Q to -2 Q-hat") {
  const FamilyTable h(Family::HeatQ, 5), p(Family::PotentialQ, 5), b(Family::BurgersQ, 5);
  for (const auto& m : h.members()) {
    const int k = m.label->k, l = m.label->l;
    const Characteristic w = heat_to_potential(m);
    CHECK(w.body == p.at(k, l).body);
    CHECK(w.label->family == Family::PotentialQ);
    const Characteristic v = potential_to_burgers(w);
    CHECK(v.body == b.at(k, l).body.scaled(-2));
    CHECK(invariance_residual(v).is_zero());
  }
}

TEST_CASE("the pushforward is a homomorphism up to the factor") {
  // [phi a, phi b] = phi [a, b] with phi = potential_to_burgers
  const FamilyTable p(Family::PotentialQ, 2);
  const auto& burgers = EvolutionEquation::burgers();
  for (const auto& a : p.members())
    for (const auto& b : p.members()) {
      const ExpPoly lhs = bracket(burgers, potential_to_burgers(a).body, potential_to_burgers(b).body);
      const ExpPoly rhs = potential_to_burgers(commutator(pot, a, b)).body;
      CHECK(lhs == rhs);
    }
}
