#include "ic/matching.hpp"

#include <cassert>
#include <queue>

#include "ic/error.hpp"

namespace ic {

BinaryMatrix::BinaryMatrix(int rows, int cols) : rows_(rows), cols_(cols), row_masks_(rows, 0) {
  assert(rows >= 0);
  if (cols < 0 || cols > 64) throw Error("BinaryMatrix: column count must be in [0, 64]");
}

BinaryMatrix BinaryMatrix::from_support_rows(int cols, const std::vector<IndexSet>& row_supports) {
  BinaryMatrix out(static_cast<int>(row_supports.size()), cols);
  for (size_t k = 0; k < row_supports.size(); ++k)
    for (int i : row_supports[k]) out.set(static_cast<int>(k) + 1, i);
  return out;
}

bool BinaryMatrix::get(int k, int i) const {
  assert(k >= 1 && k <= rows_ && i >= 1 && i <= cols_);
  return (row_masks_[k - 1] >> (i - 1)) & 1;
}

void BinaryMatrix::set(int k, int i, bool on) {
  assert(k >= 1 && k <= rows_);
  if (i < 1 || i > cols_) throw Error("BinaryMatrix::set: column " + std::to_string(i) + " out of range");
  if (on)
    row_masks_[k - 1] |= uint64_t{1} << (i - 1);
  else
    row_masks_[k - 1] &= ~(uint64_t{1} << (i - 1));
}

IndexSet BinaryMatrix::row_support(int k) const {
  assert(k >= 1 && k <= rows_);
  return from_mask(row_masks_[k - 1]);
}

uint64_t BinaryMatrix::row_mask(int k) const {
  assert(k >= 1 && k <= rows_);
  return row_masks_[k - 1];
}

std::vector<std::pair<int, int>> BinaryMatrix::support() const {
  std::vector<std::pair<int, int>> out;
  for (int k = 1; k <= rows_; ++k)
    for (int i : row_support(k)) out.emplace_back(k, i);
  return out;
}

BinaryMatrix BinaryMatrix::submatrix(const IndexSet& row_set, const IndexSet& col_set) const {
  BinaryMatrix out(static_cast<int>(row_set.size()), static_cast<int>(col_set.size()));
  for (size_t a = 0; a < row_set.size(); ++a)
    for (size_t b = 0; b < col_set.size(); ++b)
      if (get(row_set[a], col_set[b])) out.set(static_cast<int>(a) + 1, static_cast<int>(b) + 1);
  return out;
}

namespace {

// Hopcroft-Karp on rows (left) vs columns (right). Vertices are processed in
// ascending index order everywhere, which pins down the matching exactly.
class HopcroftKarp {
 public:
  explicit HopcroftKarp(const BinaryMatrix& g) : g_(g), r_(g.rows()), m_(g.cols()) {
    match_row_.assign(r_ + 1, 0);
    match_col_.assign(m_ + 1, 0);
    dist_.assign(r_ + 1, 0);
  }

  int run() {
    int matched = 0;
    while (bfs()) {
      for (int k = 1; k <= r_; ++k)
        if (match_row_[k] == 0 && dfs(k)) ++matched;
    }
    return matched;
  }

 private:
  static constexpr int kInf = 1 << 29;

  bool bfs() {
    std::queue<int> q;
    for (int k = 1; k <= r_; ++k) {
      if (match_row_[k] == 0) {
        dist_[k] = 0;
        q.push(k);
      } else {
        dist_[k] = kInf;
      }
    }
    bool found = false;
    while (!q.empty()) {
      int k = q.front();
      q.pop();
      for (uint64_t bits = g_.row_mask(k); bits; bits &= bits - 1) {
        int i = __builtin_ctzll(bits) + 1;
        int nk = match_col_[i];
        if (nk == 0) {
          found = true;
        } else if (dist_[nk] == kInf) {
          dist_[nk] = dist_[k] + 1;
          q.push(nk);
        }
      }
    }
    return found;
  }

  bool dfs(int k) {
    for (uint64_t bits = g_.row_mask(k); bits; bits &= bits - 1) {
      int i = __builtin_ctzll(bits) + 1;
      int nk = match_col_[i];
      if (nk == 0 || (dist_[nk] == dist_[k] + 1 && dfs(nk))) {
        match_row_[k] = i;
        match_col_[i] = k;
        return true;
      }
    }
    dist_[k] = kInf;
    return false;
  }

  const BinaryMatrix& g_;
  int r_, m_;
  std::vector<int> match_row_, match_col_, dist_;
};

int bruteforce_rec(const BinaryMatrix& g, int k, uint64_t used_cols) {
  if (k > g.rows()) return 0;
  // Either leave row k unmatched...
  int best = bruteforce_rec(g, k + 1, used_cols);
  // ...or match it to any free supported column.
  for (uint64_t bits = g.row_mask(k) & ~used_cols; bits; bits &= bits - 1) {
    uint64_t bit = bits & (~bits + 1);
    best = std::max(best, 1 + bruteforce_rec(g, k + 1, used_cols | bit));
  }
  return best;
}

}  // namespace

int mcm(const BinaryMatrix& g) {
  if (g.rows() == 0 || g.cols() == 0) return 0;
  return HopcroftKarp(g).run();
}

int mcm_submatrix(const BinaryMatrix& g, const IndexSet& row_set, const IndexSet& col_set) {
  return mcm(g.submatrix(row_set, col_set));
}

int mcm_bruteforce(const BinaryMatrix& g) {
  if (g.rows() > 8 || g.cols() > 8)
    throw CapExceeded("mcm_bruteforce: capped at 8x8, got " + std::to_string(g.rows()) + "x" +
                      std::to_string(g.cols()));
  return bruteforce_rec(g, 1, 0);
}

}  // namespace ic
