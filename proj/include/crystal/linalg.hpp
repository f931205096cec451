#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

namespace crystal {

/// Row-sparse integer matrix, as produced by simplicial and Taylor boundary
/// maps. Entries within a row are sorted by column and nonzero.
struct SparseMatrix {
  using Entry = std::pair<std::uint32_t, std::int64_t>;

  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::vector<Entry>> row_entries;

  SparseMatrix() = default;
  SparseMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), row_entries(r) {}
};

/// Rank over F_p by sparse Gaussian elimination.
std::size_t rank_mod_p(const SparseMatrix& m, std::uint32_t p);

/// Exact rank over Q by dense fraction-free (Bareiss) elimination on GMP integers.
std::size_t rank_bareiss(const SparseMatrix& m);

/// Exact rank over Q by sparse fraction-free row elimination. Rows are kept
/// primitive (content divided out); 64-bit arithmetic with a GMP fallback.
std::size_t rank_sparse_integer(const SparseMatrix& m);

/// Rank over the prime field of the given characteristic (0 means Q). Small
/// matrices go through Bareiss, large sparse ones through sparse elimination.
std::size_t matrix_rank(const SparseMatrix& m, std::uint32_t characteristic);

}  // namespace crystal
