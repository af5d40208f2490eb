#include "ic/mcd.hpp"

#include <algorithm>
#include <random>

#include "ic/error.hpp"
#include "ic/umcd.hpp"

namespace ic {

namespace {

// Depth-first walk over independent subsets of `allowed`. The moment the
// target column falls inside the span of the current subset, the subset either
// is a circuit support (all dependency coefficients nonzero) or covers one
// found on another branch, so descent stops either way.
void circuit_dfs(const FieldMatrix& head, const FieldMatrix& target_col,
                 const IndexSet& allowed, std::size_t next, IndexSet& cur,
                 std::vector<IndexSet>& out) {
  auto f = solve_dependency(head.columns(cur), target_col);
  if (f.has_value()) {
    bool all_nonzero = true;
    for (const FpElem& c : *f) all_nonzero &= !c.is_zero();
    if (all_nonzero) out.push_back(cur);
    return;
  }
  for (std::size_t idx = next; idx < allowed.size(); ++idx) {
    int j = allowed[idx];
    // Extend only while the subset stays independent.
    if (solve_dependency(head.columns(cur), head.columns({j})).has_value()) continue;
    cur.push_back(j);
    circuit_dfs(head, target_col, allowed, idx + 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<IndexSet> circuits_through(const FieldMatrix& head, int target,
                                       const IndexSet& allowed) {
  if (target < 1 || target > head.cols()) throw Error("circuits_through: bad column");
  if (set_contains(allowed, target)) throw Error("circuits_through: allowed must exclude target");
  std::vector<IndexSet> out;
  IndexSet cur;
  circuit_dfs(head, head.columns({target}), allowed, 0, cur, out);
  return out;
}

uint64_t veto_value(const FieldMatrix& head, const std::vector<uint64_t>& row_so_far,
                    int target, const IndexSet& support) {
  auto f = solve_dependency(head.columns(support), head.columns({target}));
  if (!f.has_value()) throw Error("veto_value: support does not span the target column");
  FpElem acc(0, head.modulus());
  for (std::size_t idx = 0; idx < support.size(); ++idx) {
    if ((*f)[idx].is_zero()) throw Error("veto_value: support is not a circuit through the target");
    acc = acc + FpElem(row_so_far[support[idx] - 1], head.modulus()) * (*f)[idx];
  }
  return acc.val;
}

std::vector<uint64_t> veto_set(const FieldMatrix& head, const std::vector<uint64_t>& row_so_far,
                               int target, const IndexSet& allowed) {
  std::vector<uint64_t> z;
  for (const IndexSet& support : circuits_through(head, target, allowed)) {
    z.push_back(veto_value(head, row_so_far, target, support));
  }
  std::sort(z.begin(), z.end());
  z.erase(std::unique(z.begin(), z.end()), z.end());
  return z;
}

FieldMatrix mcd(const BinaryMatrix& pattern, uint64_t q, const McdOptions& opt,
                McdStats* stats) {
  const int r = pattern.rows();
  const int m = pattern.cols();
  if (!is_prime(q)) throw Error("mcd: field size " + std::to_string(q) + " is not prime");
  if (!opt.allow_small_q && r > 0) {
    uint64_t bound = umcd_q_min(m, r);
    if (q < bound) {
      throw Error("mcd: field size " + std::to_string(q) + " is below the guarantee bound " +
                  std::to_string(bound) + " for a " + std::to_string(r) + "x" +
                  std::to_string(m) + " pattern (allow_small_q overrides)");
    }
  }

  FieldMatrix h(r, m, q);
  if (r == 0) return h;
  for (int i : pattern.row_support(1)) h.set(1, i, 1);

  std::mt19937_64 rng(opt.seed);
  for (int k = 2; k <= r; ++k) {
    const FieldMatrix head = h.row_prefix(k - 1);
    IndexSet order = pattern.row_support(k);
    if (opt.seeded) std::shuffle(order.begin(), order.end(), rng);
    std::vector<uint64_t> row_vals(m, 0);
    IndexSet pending = pattern.row_support(k);  // cells of this row still open
    for (int i : order) {
      pending = set_difference(pending, {i});
      // Every already-fixed column may participate in a dependency; the open
      // cells of this row may not, since their values are still unknown.
      IndexSet allowed = set_difference(range_set(m), pending);
      allowed = set_difference(allowed, {i});
      std::vector<IndexSet> circuits = circuits_through(head, i, allowed);
      std::vector<uint64_t> vetoed;
      for (const IndexSet& support : circuits) {
        vetoed.push_back(veto_value(head, row_vals, i, support));
      }
      std::sort(vetoed.begin(), vetoed.end());
      vetoed.erase(std::unique(vetoed.begin(), vetoed.end()), vetoed.end());
      if (stats) {
        stats->circuits_found += circuits.size();
        stats->cells_assigned += 1;
        stats->max_vetoes_at_cell = std::max(stats->max_vetoes_at_cell,
                                             static_cast<uint64_t>(vetoed.size()));
      }
      if (vetoed.size() >= q) {
        throw Error("mcd: every value of GF(" + std::to_string(q) + ") is vetoed at row " +
                    std::to_string(k) + ", column " + std::to_string(i) +
                    " (field too small for this pattern)");
      }
      uint64_t value;
      if (opt.seeded) {
        uint64_t pick = rng() % (q - vetoed.size());
        value = pick;
        for (uint64_t z : vetoed) {
          if (z <= value) ++value;
        }
      } else {
        value = 0;
        for (uint64_t z : vetoed) {
          if (z == value) ++value;
          else if (z > value) break;
        }
      }
      row_vals[i - 1] = value;
      h.set(k, i, value);
    }
  }
  if (stats && r >= 1) stats->cells_assigned += pattern.row_support(1).size();
  return h;
}

MaxrankReport verify_maxrank(const FieldMatrix& h, const BinaryMatrix& pattern, int max_m) {
  const int r = pattern.rows();
  const int m = pattern.cols();
  if (h.rows() != r || h.cols() != m) throw Error("verify_maxrank: shape mismatch");
  if (m > max_m) {
    throw CapExceeded("verify_maxrank: " + std::to_string(m) + " columns exceeds cap " +
                      std::to_string(max_m) + " (2^m column sets)");
  }
  for (int k = 1; k <= r; ++k) {
    for (int i = 1; i <= m; ++i) {
      if (!pattern.get(k, i) && h.get(k, i) != 0) {
        throw Error("verify_maxrank: matrix does not fit the pattern at row " +
                    std::to_string(k) + ", column " + std::to_string(i));
      }
    }
  }
  IndexSet all_rows;
  for (uint64_t mask = 1; mask < (1ULL << m); ++mask) {
    IndexSet cols = from_mask(mask);
    for (int k = 1; k <= r; ++k) {
      all_rows.push_back(k);
      int rk = rank(h.submatrix(all_rows, cols));
      int mc = mcm_submatrix(pattern, all_rows, cols);
      if (rk != mc) {
        all_rows.clear();
        return {false, k, cols, rk, mc};
      }
    }
    all_rows.clear();
  }
  return {};
}

}  // namespace ic
