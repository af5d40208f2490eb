#pragma once

#include <cstdint>
#include <vector>

#include "ic/gf.hpp"
#include "ic/matching.hpp"
#include "ic/sets.hpp"

namespace ic {

struct McdOptions {
  bool allow_small_q = false;  // skip the guarantee-bound check on q
  bool seeded = false;         // randomized cell order and value picks
  uint64_t seed = 0;
};

struct McdStats {
  uint64_t circuits_found = 0;  // dependency sets solved across all cells
  uint64_t cells_assigned = 0;
  uint64_t max_vetoes_at_cell = 0;
};

// Minimal dependent column sets of `head` that contain `target`, with every
// other member drawn from `allowed`. Each returned set lists the members
// besides target, ascending; sets are emitted in lexicographic order. The
// empty set is returned (alone) when column target of head is zero.
std::vector<IndexSet> circuits_through(const FieldMatrix& head, int target,
                                       const IndexSet& allowed);

// The one value for the open cell (next row, column target) that would make
// the new column dependent on `support`: the already-filled row values dotted
// with the unique coefficients expressing target's head-column over support.
uint64_t veto_value(const FieldMatrix& head, const std::vector<uint64_t>& row_so_far,
                    int target, const IndexSet& support);

// All forbidden values for the cell, deduplicated, ascending.
std::vector<uint64_t> veto_set(const FieldMatrix& head, const std::vector<uint64_t>& row_so_far,
                               int target, const IndexSet& allowed);

// Completes the 0/1 pattern into a matrix over GF(q) whose every row-prefix
// submatrix reaches the rank its support pattern allows (the matching number).
// Row one copies the pattern; later cells take the smallest value outside
// their veto set, columns processed in ascending order. q must be prime and,
// unless allow_small_q is set, at least the binomial guarantee bound for the
// pattern's shape. Below the bound a cell can run out of values, which throws.
FieldMatrix mcd(const BinaryMatrix& pattern, uint64_t q, const McdOptions& opt = {},
                McdStats* stats = nullptr);

struct MaxrankReport {
  bool ok = true;
  int k = 0;        // failing row-prefix length, 0 when ok
  IndexSet cols;    // failing column set, empty when ok
  int rank_found = 0;
  int matching = 0;
};

// Exhaustively checks rank(h rows 1..k, columns L) == matching number of the
// same pattern submatrix, for every k and every nonempty L. Exponential in
// columns, so it refuses instances wider than max_m.
MaxrankReport verify_maxrank(const FieldMatrix& h, const BinaryMatrix& pattern,
                             int max_m = 12);

}  // namespace ic
