#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "common.hpp"

TEST_CASE("rationals are exact and canonical") {
  CHECK(q(2, 4) == q(1, 2));
  CHECK(to_string(q(6, -4)) == "-3/2");
  CHECK(to_string(q(3), true) == "3/1");
  CHECK(parse_rational("-10/4") == q(-5, 2));
  CHECK(parse_rational("7") == q(7));
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1.5"), std::invalid_argument);
  CHECK(binomial(5, 2) == 10);
  CHECK(factorial(6) == 720);
  // far beyond 64 bits
  CHECK(to_string(factorial(25)) == "15511210043330985984000000");
}

TEST_CASE("variable order and keys") {
  CHECK(VarId::t() < VarId::x());
  CHECK(VarId::x() < VarId::jet(0));
  CHECK(VarId::jet(0) < VarId::jet(7));
  CHECK(VarId::jet(64) < VarId::par(0));
  CHECK(VarId::par(3) < VarId::par(0, 1));
  CHECK(VarId::par(9, 1) < VarId::zeta(0));
  for (VarId v : {VarId::t(), VarId::x(), VarId::jet(3), VarId::par(2), VarId::par(2, 1), VarId::zeta(4)})
    CHECK(parse_var_key(var_key(v)) == v);
  CHECK(var_key(VarId::par(2, 1)) == "h2@1");
  CHECK_THROWS(parse_var_key("q7"));
}

TEST_CASE("monomial order is graded lexicographic") {
  const auto m = [](const DiffPoly& p) { return p.terms().front().monomial; };
  CHECK(m(jet(5)) < m(jet(0) * jet(0)));        // degree first
  CHECK(m(jet(1)) < m(T()));                    // smaller variable ranks higher
  CHECK(m(T() * jet(3)) < m(T() * T()));
  CHECK(m(X() * jet(0)) < m(T() * jet(2)));
  const DiffPoly p = jet(2) + T() * T() + X();
  CHECK(to_text(p) == "t^2 + x + z_2");
}

TEST_CASE("ring operations") {
  CHECK(add(jet(1), -jet(1)).is_zero());
  CHECK(partial(mul(jet(0), jet(1)), VarId::jet(1)) == jet(0));
  CHECK(scale(jet(0) * jet(0), q(1, 2)) == DiffPoly::monomial(Monomial::of(VarId::jet(0), 2), q(1, 2)));
  CHECK(pow(jet(0) + 1, 3) == jet(0) * jet(0) * jet(0) + 3 * jet(0) * jet(0) + 3 * jet(0) + 1);
  CHECK(DiffPoly(0).is_zero());
  CHECK(DiffPoly(q(1, 3)).is_constant());
}

TEST_CASE("partial derivatives") {
  CHECK(partial(T() * jet(1) * jet(1), VarId::jet(1)) == 2 * T() * jet(1));
  CHECK(partial(X() * X(), VarId::x()) == 2 * X());
  CHECK(partial(jet(0), VarId::t()).is_zero());
  CHECK(partial(par(2) * jet(0), VarId::par(2)) == jet(0));
}

TEST_CASE("substitution") {
  CHECK(substitute(jet(1) * jet(1), {{VarId::jet(1), jet(0).scaled(q(-1, 2))}}) == (jet(0) * jet(0)).scaled(q(1, 4)));
  const DiffPoly p = jet(2) - jet(0) * jet(1);
  CHECK(substitute(p, {}) == p);
  CHECK(substitute(p, {{VarId::jet(0), DiffPoly()}}) == jet(2));
  // simultaneous, not sequential
  CHECK(substitute(jet(0) + 2 * jet(1), {{VarId::jet(0), jet(1)}, {VarId::jet(1), jet(0)}}) == jet(1) + 2 * jet(0));
}

TEST_CASE("order and degree") {
  CHECK(order(jet(1).scaled(q(-1, 2)) + (jet(0) * jet(0)).scaled(q(1, 4))) == 1);
  CHECK(order(T() * X()) == kOrderNone);
  CHECK(degree(T() * T() * jet(2) + T() * X() * jet(1), VarId::t()) == 2);
  CHECK((par(3) * jet(1)).max_index(VarKind::Par) == 3);
  CHECK(antiderivative(2 * T() * jet(0), VarId::t()) == T() * T() * jet(0));
}

TEST_CASE("ring axioms on random polynomials") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 40; ++i) {
    const DiffPoly a = random_jet_poly(rng, 3, 4), b = random_jet_poly(rng, 3, 4), c = random_jet_poly(rng, 3, 3);
    CHECK(a * b == b * a);
    CHECK(a + b == b + a);
    CHECK((a * b) * c == a * (b * c));
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a - a).is_zero());
    CHECK(a * 1 == a);
    CHECK((a * 0).is_zero());
  }
}

TEST_CASE("partial derivatives commute") {
  std::mt19937_64 rng(12);
  const std::vector<VarId> vars{VarId::t(), VarId::x(), VarId::jet(0), VarId::jet(1), VarId::jet(2), VarId::jet(3)};
  for (int i = 0; i < 10; ++i) {
    const DiffPoly p = random_jet_poly(rng, 3, 6);
    for (VarId a : vars)
      for (VarId b : vars) CHECK(partial(partial(p, a), b) == partial(partial(p, b), a));
  }
}

TEST_CASE("text output") {
  Notation n;
  n.dependent = "v";
  CHECK(to_text(T() * jet(1).scaled(q(-1, 2)) + q(1, 2), n) == "-1/2*t*v_1 + 1/2");
  CHECK(to_text(DiffPoly()) == "0");
  CHECK(to_text(par(1, 1) * jet(0)) == "z*g_1");
  std::ostringstream os;
  os << jet(3);
  CHECK(os.str() == "z_3");
}
