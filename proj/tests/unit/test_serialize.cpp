#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "common.hpp"

#include <json.hpp>

#include "jetsym/family.hpp"
#include "jetsym/serialize.hpp"

TEST_CASE("tables") {
  const SymmetryTableDoc b = make_table(EvolutionEquation::burgers(), 2);
  REQUIRE(b.entries.size() == 5);
  CHECK(b.entries.back().k == 2);
  CHECK(b.entries.back().l == 0);
  CHECK(b.entries.back().family == Family::BurgersQ);
  const SymmetryTableDoc h = make_table(EvolutionEquation::heat(), 0);
  REQUIRE(h.entries.size() == 1);
  CHECK(h.entries[0].body == ExpPoly(jet(0)));
  CHECK(to_text(h) == "HEAT_Q^{00} = u\n");
}

TEST_CASE("JSON round trip") {
  for (const char* name : {"heat", "potburgers", "burgers"}) {
    const SymmetryTableDoc doc = make_table(EvolutionEquation::from_name(name), 3);
    const std::string js = to_json(doc);
    const SymmetryTableDoc back = table_from_json(js);
    CHECK(back == doc);
    CHECK(to_json(back) == js);
  }
  SymmetryTableDoc z;
  z.equation = "potburgers";
  z.entries.push_back({Family::PotentialZ, 1, 1, q_char(Family::PotentialZ, 1, 1, 1).body});
  z.entries.push_back({Family::PotentialQ, 0, 0, ExpPoly::graded(T() * q(-7, 3), 2) + ExpPoly(q(5, 9))});
  CHECK(table_from_json(to_json(z)) == z);
}

TEST_CASE("JSON schema") {
  const auto j = nlohmann::json::parse(to_json(make_table(EvolutionEquation::burgers(), 1)));
  CHECK(j["equation"] == "burgers");
  CHECK(j["metadata"]["monomial_order"] == kMonomialOrder);
  const auto& e = j["entries"][1];
  CHECK(e["family"] == "BURGERS_Q");
  CHECK(e["k"] == 1);
  // 1/2 - 1/2 t v_1, ascending in the global order
  REQUIRE(e["body"].size() == 2);
  CHECK(e["body"][0]["monomial"].empty());
  CHECK(e["body"][0]["coeff"] == "1/2");
  CHECK(e["body"][0]["grade"] == 0);
  CHECK(e["body"][1]["monomial"] == nlohmann::json::parse(R"([["t",1],["z1",1]])"));
  CHECK(e["body"][1]["coeff"] == "-1/2");
  CHECK(nlohmann::json::parse(to_json(SymmetryTableDoc{"heat", {{Family::HeatQ, 0, 0, ExpPoly(jet(0))}}}))
            ["entries"][0]["body"][0]["coeff"] == "1/1");
}

TEST_CASE("malformed documents") {
  CHECK_THROWS_AS(table_from_json("{"), std::invalid_argument);
  CHECK_THROWS_AS(table_from_json(R"({"equation":"heat"})"), std::invalid_argument);
  CHECK_THROWS_AS(table_from_json(R"({"equation":"heat","entries":[{"family":"HEAT_Q","k":0,"l":0,
      "body":[{"grade":0,"monomial":[["z0",1]],"coeff":"0.5"}]}],"metadata":{"engine_version":"1","monomial_order":"x"}})"),
                  std::invalid_argument);
}

TEST_CASE("LaTeX") {
  const std::string tex = to_latex(make_table(EvolutionEquation::burgers(), 3));
  CHECK(latex_well_formed(tex));
  CHECK(tex.find("\\hat{\\mathfrak{Q}}^{01} &= -\\frac{1}{2} v_{x}") != std::string::npos);
  CHECK(tex.find("v_{xx}") != std::string::npos);
  const std::string pot = to_latex(make_table(EvolutionEquation::potential_burgers(), 2));
  CHECK(pot.find("\\tilde{\\mathfrak{Q}}^{02} &= {w_{x}}^{2} + w_{xx}") != std::string::npos);
  CHECK(latex_well_formed(to_latex(q_char(Family::PotentialZ, 2, 1).body, EvolutionEquation::potential_burgers().notation())));
  CHECK(to_latex(ExpPoly::graded(par(0), -1), EvolutionEquation::potential_burgers().notation()) == "\\left(h\\right) e^{-w}");
  CHECK_FALSE(latex_well_formed("{a"));
  CHECK_FALSE(latex_well_formed("a}{"));
  CHECK_FALSE(latex_well_formed("a\tb"));
  CHECK(latex_well_formed("\\{ a \\}"));
}

TEST_CASE("output is deterministic") {
  const auto& eq = EvolutionEquation::heat();
  CHECK(to_json(make_table(eq, 4)) == to_json(make_table(eq, 4)));
  CHECK(to_latex(make_table(eq, 4)) == to_latex(make_table(eq, 4)));
}

TEST_CASE("solve report JSON") {
  const auto j = nlohmann::json::parse(to_json(solve_symmetries(EvolutionEquation::burgers(), 2)));
  CHECK(j["dimension"] == 5);
  CHECK(j["span"] == "MATCH");
  CHECK(j["basis"].size() == 5);
  CHECK(j["ansatz"]["size"] == 90);
}
