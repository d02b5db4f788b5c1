#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "common.hpp"

#include "jetsym/detsolve.hpp"
#include "jetsym/family.hpp"

namespace {
const EvolutionEquation& burgers = EvolutionEquation::burgers();

SparseMatrix dense(std::size_t cols, const std::vector<std::vector<long>>& rows) {
  SparseMatrix m{cols, {}};
  for (const auto& r : rows) {
    SparseRow row;
    for (std::size_t c = 0; c < r.size(); ++c)
      if (r[c] != 0) row.push_back({static_cast<std::uint32_t>(c), Rational(r[c])});
    m.rows.push_back(row);
  }
  return m;
}

SparseMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, int density) {
  std::uniform_int_distribution<int> pick(0, 99), val(-4, 4), den(1, 3);
  SparseMatrix m{cols, {}};
  for (std::size_t r = 0; r < rows; ++r) {
    SparseRow row;
    for (std::size_t c = 0; c < cols; ++c)
      if (pick(rng) < density) {
        const int v = val(rng);
        if (v != 0) row.push_back({static_cast<std::uint32_t>(c), ratio(v, den(rng))});
      }
    m.rows.push_back(row);
  }
  return m;
}

bool in_kernel(const SparseMatrix& m, const DenseVector& v) {
  for (const auto& row : m.rows) {
    Rational s = 0;
    for (const auto& e : row) s += e.value * v[e.col];
    if (s != 0) return false;
  }
  return true;
}
}  // namespace

TEST_CASE("nullspace basics") {
  const auto z = nullspace(SparseMatrix{3, {}});
  REQUIRE(z.size() == 3);
  CHECK(z[0] == DenseVector{1, 0, 0});
  CHECK(z[2] == DenseVector{0, 0, 1});
  const auto n = nullspace(dense(2, {{1, -1}}));
  REQUIRE(n.size() == 1);
  CHECK(n[0] == DenseVector{1, 1});
  CHECK(nullspace(dense(2, {{1, 0}, {0, 3}})).empty());
  CHECK(rank(dense(3, {{1, 2, 3}, {2, 4, 6}, {0, 0, 1}})) == 2);
  // normalization: first nonzero entry is 1
  const auto m = nullspace(dense(3, {{0, 2, 4}}));
  REQUIRE(m.size() == 2);
  CHECK(m[1] == DenseVector{0, 1, q(-1, 2)});
}

TEST_CASE("blocks") {
  const auto blocks = column_blocks(dense(5, {{1, 0, 1, 0, 0}, {0, 0, 1, 0, 2}, {0, 1, 0, 0, 0}}));
  REQUIRE(blocks.size() == 3);
  CHECK(blocks[0] == std::vector<std::uint32_t>{0, 2, 4});
  CHECK(blocks[1] == std::vector<std::uint32_t>{1});
  CHECK(blocks[2] == std::vector<std::uint32_t>{3});
}

TEST_CASE("parallel nullspace matches the serial reference") {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 30; ++i) {
    const SparseMatrix m = random_matrix(rng, 4 + i % 9, 6 + i % 11, 10 + 3 * (i % 7));
    const auto a = nullspace(m), b = nullspace_serial(m);
    CHECK(a == b);
    CHECK(a.size() + rank(m) == m.cols);
    for (const auto& v : a) CHECK(in_kernel(m, v));
  }
}

TEST_CASE("ansatz enumeration") {
  const Ansatz a = Ansatz::with_default_bounds(burgers, 1);
  const auto mons = enumerate_ansatz(a);
  CHECK(mons.size() == 12);
  CHECK(std::is_sorted(mons.begin(), mons.end()));
  CHECK(enumerate_ansatz(Ansatz::with_default_bounds(burgers, 2)).size() == 90);
  CHECK_THROWS_AS(enumerate_ansatz(Ansatz::with_default_bounds(burgers, 4), 100), AnsatzTooLarge);
  try {
    enumerate_ansatz(Ansatz::with_default_bounds(burgers, 3), 10);
  } catch (const AnsatzTooLarge& e) {
    CHECK(e.size() == 560);
  }
}

TEST_CASE("system construction") {
  const Ansatz a = Ansatz::with_default_bounds(burgers, 2);
  const LinearSystem s = build_system(a), r = build_system_serial(a);
  CHECK(s.unknowns == r.unknowns);
  CHECK(s.constraints == r.constraints);
  REQUIRE(s.matrix.rows.size() == r.matrix.rows.size());
  for (std::size_t i = 0; i < s.matrix.rows.size(); ++i) {
    REQUIRE(s.matrix.rows[i].size() == r.matrix.rows[i].size());
    for (std::size_t j = 0; j < s.matrix.rows[i].size(); ++j) {
      CHECK(s.matrix.rows[i][j].col == r.matrix.rows[i][j].col);
      CHECK(s.matrix.rows[i][j].value == r.matrix.rows[i][j].value);
    }
  }
  CHECK(nullspace(s).size() == 5);
  CHECK(nullspace_serial(s.matrix) == nullspace(s.matrix));

  // the translation v_1 is in the order-1 kernel
  const LinearSystem s1 = build_system(Ansatz::with_default_bounds(burgers, 1));
  DenseVector v1(s1.unknowns.size(), 0);
  for (std::size_t i = 0; i < s1.unknowns.size(); ++i)
    if (s1.unknowns[i] == jet(1).terms().front().monomial) v1[i] = 1;
  CHECK(in_kernel(s1.matrix, v1));
}

TEST_CASE("degenerate ansatz") {
  CHECK(solve_symmetries(burgers, 0).dimension == 0);
  SolveOptions o;
  Ansatz a = Ansatz::with_default_bounds(burgers, 0);
  a.jet_degree = a.x_degree = a.t_degree = 2;
  o.bounds = a;
  CHECK(solve_symmetries(burgers, 0, o).dimension == 0);
  // the single monomial v has residual v v_1
  Ansatz single = Ansatz::with_default_bounds(burgers, 0);
  single.jet_degree = 1;
  const LinearSystem s = build_system(single);
  CHECK(nullspace(s).empty());
}

TEST_CASE("dimension law and span") {
  const std::size_t expected[] = {2, 5, 9, 14};
  for (int n = 1; n <= 4; ++n) {
    const SolveReport r = solve_symmetries(burgers, n);
    CHECK(r.dimension == expected[n - 1]);
    CHECK(r.basis.size() == r.dimension);
    CHECK(r.span == SpanVerdict::Match);
    for (const auto& b : r.basis) CHECK(invariance_residual(b).is_zero());
  }
  const SolveReport r1 = solve_symmetries(burgers, 1);
  std::vector<DiffPoly> joint{q_char(Family::BurgersQ, 0, 1).poly(), q_char(Family::BurgersQ, 1, 0).poly()};
  CHECK(poly_rank(joint) == 2);
  for (const auto& b : r1.basis) joint.push_back(b.poly());
  CHECK(poly_rank(joint) == 2);
}

TEST_CASE("family containment in the default ansatz") {
  for (int n = 1; n <= 5; ++n) {
    const Ansatz a = Ansatz::with_default_bounds(burgers, n);
    const FamilyTable table(Family::BurgersQ, n);
    for (const auto& m : table.members()) CHECK(fits_ansatz(m.poly(), a));
  }
  CHECK_FALSE(fits_ansatz(jet(3), Ansatz::with_default_bounds(burgers, 2)));
}

TEST_CASE("determinism and guards") {
  const SolveReport a = solve_symmetries(burgers, 3), b = solve_symmetries(burgers, 3);
  REQUIRE(a.basis.size() == b.basis.size());
  for (std::size_t i = 0; i < a.basis.size(); ++i) CHECK(a.basis[i].body == b.basis[i].body);
  CHECK_THROWS(solve_symmetries(EvolutionEquation::heat(), 1));
  SolveOptions heat;
  heat.experimental_heat = true;
  const SolveReport h = solve_symmetries(EvolutionEquation::heat(), 1, heat);
  CHECK(h.span == SpanVerdict::NotApplicable);
  CHECK(h.dimension > 0);
  SolveOptions capped;
  capped.cap = 50;
  CHECK_THROWS_AS(solve_symmetries(burgers, 2, capped), AnsatzTooLarge);
}
