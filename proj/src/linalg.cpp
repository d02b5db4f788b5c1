#include "jetsym/linalg.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace jetsym {

namespace {

struct IntEntry {
  std::uint32_t col;
  Integer value;
};
using IntRow = std::vector<IntEntry>;

/// Scales a rational row to a primitive integer row with a positive leading entry.
IntRow to_primitive(const SparseRow& row) {
  Integer lcm_den = 1;
  for (const auto& e : row) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), e.value.get_den_mpz_t());
  IntRow out;
  out.reserve(row.size());
  for (const auto& e : row) {
    Integer v = e.value.get_num() * (lcm_den / e.value.get_den());
    if (v != 0) out.push_back({e.col, std::move(v)});
  }
  return out;
}

void make_primitive(IntRow& row) {
  if (row.empty()) return;
  Integer g = 0;
  for (const auto& e : row) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), e.value.get_mpz_t());
    if (g == 1) break;
  }
  if (row.front().value < 0) g = -g;
  if (g != 1)
    for (auto& e : row) mpz_divexact(e.value.get_mpz_t(), e.value.get_mpz_t(), g.get_mpz_t());
}

Integer entry(const IntRow& row, std::uint32_t col) {
  auto it = std::lower_bound(row.begin(), row.end(), col, [](const IntEntry& e, std::uint32_t c) { return e.col < c; });
  return (it != row.end() && it->col == col) ? it->value : Integer(0);
}

/// a·row − b·pivot, where the combination cancels column `col`.
IntRow eliminate(const IntRow& row, const IntRow& pivot, std::uint32_t col) {
  const Integer a = entry(pivot, col);
  const Integer b = entry(row, col);
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  const Integer ra = a / g;
  const Integer rb = b / g;
  IntRow out;
  out.reserve(row.size() + pivot.size());
  auto i = row.begin();
  auto j = pivot.begin();
  while (i != row.end() || j != pivot.end()) {
    if (j == pivot.end() || (i != row.end() && i->col < j->col)) {
      out.push_back({i->col, ra * i->value});
      ++i;
    } else if (i == row.end() || j->col < i->col) {
      out.push_back({j->col, -rb * j->value});
      ++j;
    } else {
      Integer v = ra * i->value - rb * j->value;
      if (v != 0) out.push_back({i->col, std::move(v)});
      ++i;
      ++j;
    }
  }
  make_primitive(out);
  return out;
}

struct KernelVector {
  std::uint32_t free_col;
  std::vector<std::pair<std::uint32_t, Rational>> entries;  // sorted by column
};

/// Fraction-free elimination on one block; returns the kernel vectors of the
/// block in terms of global column indices.
std::vector<KernelVector> block_kernel(const std::vector<std::uint32_t>& cols, const std::vector<const SparseRow*>& rows) {
  std::map<std::uint32_t, IntRow> pivots;
  for (const SparseRow* source : rows) {
    IntRow r = to_primitive(*source);
    make_primitive(r);
    while (!r.empty()) {
      auto it = pivots.find(r.front().col);
      if (it == pivots.end()) {
        const auto lead = r.front().col;
        pivots.emplace(lead, std::move(r));
        break;
      }
      r = eliminate(r, it->second, it->first);
    }
  }
  // Back substitution to reduced echelon form, largest pivot first.
  for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
    IntRow& row = it->second;
    for (;;) {
      std::uint32_t target = 0;
      bool found = false;
      for (std::size_t i = 1; i < row.size(); ++i) {
        if (pivots.count(row[i].col)) {
          target = row[i].col;
          found = true;
          break;
        }
      }
      if (!found) break;
      row = eliminate(row, pivots.at(target), target);
    }
  }
  std::vector<KernelVector> kernel;
  for (auto col : cols) {
    if (pivots.count(col)) continue;
    KernelVector v{col, {}};
    for (const auto& [pcol, prow] : pivots) {
      Integer a = entry(prow, col);
      if (a == 0) continue;
      Rational value(-a, prow.front().value);
      value.canonicalize();
      v.entries.emplace_back(pcol, std::move(value));
    }
    v.entries.emplace_back(col, Rational(1));
    std::sort(v.entries.begin(), v.entries.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    kernel.push_back(std::move(v));
  }
  return kernel;
}

std::vector<DenseVector> densify(std::vector<KernelVector> kernel, std::size_t cols) {
  std::sort(kernel.begin(), kernel.end(), [](const auto& a, const auto& b) { return a.free_col < b.free_col; });
  std::vector<DenseVector> out;
  out.reserve(kernel.size());
  for (auto& kv : kernel) {
    DenseVector v(cols);
    const Rational lead = kv.entries.front().second;
    for (auto& [col, value] : kv.entries) v[col] = value / lead;
    out.push_back(std::move(v));
  }
  return out;
}

void check_columns(const SparseMatrix& m) {
  for (const auto& row : m.rows)
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (row[i].col >= m.cols) throw std::out_of_range("sparse entry beyond the column count");
      if (i > 0 && row[i - 1].col >= row[i].col) throw std::invalid_argument("sparse row not sorted by column");
    }
}

}  // namespace

std::vector<std::vector<std::uint32_t>> column_blocks(const SparseMatrix& m) {
  std::vector<std::uint32_t> parent(m.cols);
  std::iota(parent.begin(), parent.end(), 0u);
  auto find = [&](std::uint32_t c) {
    while (parent[c] != c) c = parent[c] = parent[parent[c]];
    return c;
  };
  for (const auto& row : m.rows)
    for (std::size_t i = 1; i < row.size(); ++i) {
      auto a = find(row[0].col);
      auto b = find(row[i].col);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  std::map<std::uint32_t, std::vector<std::uint32_t>> groups;
  for (std::uint32_t c = 0; c < m.cols; ++c) groups[find(c)].push_back(c);
  std::vector<std::vector<std::uint32_t>> blocks;
  blocks.reserve(groups.size());
  for (auto& [root, cols] : groups) blocks.push_back(std::move(cols));
  return blocks;
}

std::vector<DenseVector> nullspace(const SparseMatrix& m) {
  check_columns(m);
  const auto blocks = column_blocks(m);
  std::vector<std::uint32_t> block_of(m.cols);
  for (std::size_t b = 0; b < blocks.size(); ++b)
    for (auto c : blocks[b]) block_of[c] = static_cast<std::uint32_t>(b);
  std::vector<std::vector<const SparseRow*>> block_rows(blocks.size());
  for (const auto& row : m.rows)
    if (!row.empty()) block_rows[block_of[row.front().col]].push_back(&row);

  std::vector<std::vector<KernelVector>> partial(blocks.size());
  const auto n = static_cast<std::ptrdiff_t>(blocks.size());
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t b = 0; b < n; ++b) partial[b] = block_kernel(blocks[b], block_rows[b]);

  std::vector<KernelVector> kernel;
  for (auto& part : partial)
    for (auto& kv : part) kernel.push_back(std::move(kv));
  return densify(std::move(kernel), m.cols);
}

std::vector<DenseVector> nullspace_serial(const SparseMatrix& m) {
  check_columns(m);
  // Rows as column → value maps; pivot rows are scaled to a leading 1.
  using RatRow = std::map<std::uint32_t, Rational>;
  std::map<std::uint32_t, RatRow> pivots;
  for (const auto& source : m.rows) {
    RatRow r;
    for (const auto& e : source)
      if (e.value != 0) r.emplace(e.col, e.value);
    for (auto& [pcol, prow] : pivots) {
      auto it = r.find(pcol);
      if (it == r.end()) continue;
      const Rational factor = it->second;
      for (const auto& [c, v] : prow) {
        Rational& slot = r[c];
        slot -= factor * v;
        if (slot == 0) r.erase(c);
      }
    }
    if (r.empty()) continue;
    const auto lead = r.begin()->first;
    const Rational inv = 1 / r.begin()->second;
    for (auto& [c, v] : r) v *= inv;
    // Keep the existing pivot rows reduced with respect to the new pivot.
    for (auto& [pcol, prow] : pivots) {
      auto it = prow.find(lead);
      if (it == prow.end()) continue;
      const Rational factor = it->second;
      for (const auto& [c, v] : r) {
        Rational& slot = prow[c];
        slot -= factor * v;
        if (slot == 0) prow.erase(c);
      }
    }
    pivots.emplace(lead, std::move(r));
  }
  std::vector<KernelVector> kernel;
  for (std::uint32_t col = 0; col < m.cols; ++col) {
    if (pivots.count(col)) continue;
    KernelVector v{col, {}};
    for (const auto& [pcol, prow] : pivots) {
      auto it = prow.find(col);
      if (it != prow.end()) v.entries.emplace_back(pcol, -it->second);
    }
    v.entries.emplace_back(col, Rational(1));
    std::sort(v.entries.begin(), v.entries.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    kernel.push_back(std::move(v));
  }
  return densify(std::move(kernel), m.cols);
}

std::size_t rank(const SparseMatrix& m) { return m.cols - nullspace(m).size(); }

}  // namespace jetsym
