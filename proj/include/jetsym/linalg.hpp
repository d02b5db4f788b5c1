#pragma once

#include <cstdint>
#include <vector>

#include "jetsym/rational.hpp"

namespace jetsym {

struct SparseEntry {
  std::uint32_t col;
  Rational value;
};
/// Entries sorted by column, no explicit zeros.
using SparseRow = std::vector<SparseEntry>;

struct SparseMatrix {
  std::size_t cols = 0;
  std::vector<SparseRow> rows;
};

using DenseVector = std::vector<Rational>;

/// Exact kernel basis of `m`.
///
/// The matrix is split into independent blocks (connected components of the
/// row/column incidence graph) that are eliminated in parallel with
/// fraction-free integer row operations. Pivots are the first nonzero column
/// in the fixed column order, so the basis is the one read off the reduced
/// row echelon form: one vector per free column, ordered by that column, each
/// scaled so its first nonzero entry is 1.
std::vector<DenseVector> nullspace(const SparseMatrix& m);

/// Serial reference: rational Gauss–Jordan over the whole matrix, no
/// blocking. Produces the same basis as nullspace().
std::vector<DenseVector> nullspace_serial(const SparseMatrix& m);

std::size_t rank(const SparseMatrix& m);

/// Connected components of the incidence graph; each block lists its columns
/// in increasing order. Columns touched by no row form singleton blocks.
std::vector<std::vector<std::uint32_t>> column_blocks(const SparseMatrix& m);

}  // namespace jetsym
