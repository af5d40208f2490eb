#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "ic/sets.hpp"

namespace ic {

// 0/1 support pattern. Row k's support set G_k lists the columns where the
// row is nonzero. At most 64 columns (row masks are machine words); every
// instance this library handles is far below that.
class BinaryMatrix {
 public:
  BinaryMatrix(int rows, int cols);
  static BinaryMatrix from_support_rows(int cols, const std::vector<IndexSet>& row_supports);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  bool get(int k, int i) const;
  void set(int k, int i, bool on = true);

  IndexSet row_support(int k) const;               // G_k, ascending
  uint64_t row_mask(int k) const;                  // bit i-1 set iff (k,i) in support
  std::vector<std::pair<int, int>> support() const;  // all (k,i), row-major order

  BinaryMatrix submatrix(const IndexSet& row_set, const IndexSet& col_set) const;

  bool operator==(const BinaryMatrix& o) const = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<uint64_t> row_masks_;
};

// Maximum cardinality matching between row and column vertices, edges at
// support positions. Hopcroft-Karp with lowest-vertex-index tie-breaks, so
// the matching itself (not just its size) is deterministic. This equals the
// maximum rank attainable by any matrix that fits the pattern.
int mcm(const BinaryMatrix& g);

// mcm of the induced submatrix; recomputed from scratch (inputs are tiny,
// incremental matching maintenance would be needless complexity).
int mcm_submatrix(const BinaryMatrix& g, const IndexSet& row_set, const IndexSet& col_set);

// Exhaustive reference: tries every system of distinct representatives.
// Only for r, m <= 8; throws CapExceeded beyond that.
int mcm_bruteforce(const BinaryMatrix& g);

}  // namespace ic
