#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "ic/instance.hpp"
#include "ic/rational.hpp"
#include "ic/umcd.hpp"

namespace ic {

// Baseline broadcast-rate schemes (MDS, partial clique covers, the recursive
// scheme, interlinked-cycle covers, a bounded GF(2) minrank brute force) and
// the partial/fractional extensions that reuse the update-based scheme as the
// per-block code. All rates are exact: integers where the scheme is integral,
// rationals where time sharing is involved.

// A weighted family of member sets covering every receiver at least once.
// local_rate is the per-block rate of whatever scheme produced the cover;
// total_rate = sum of weight * local_rate.
struct CoverEntry {
  IndexSet members;
  Rational weight;
  Rational local_rate;
};

struct Cover {
  std::vector<CoverEntry> entries;
  Rational total_rate;
};

// MDS rate of a member set: |M| - min_{i in M} |M intersect A_i|. The whole
// instance is the full member set.
int mds_rate(const Subinstance& sub);
int mds_rate(const Instance& inst);

// Best partition of [m] into MDS-coded blocks, by dynamic programming over
// subsets. Among equal-cost partitions the lexicographically smallest block
// structure wins (blocks ordered by minimum element, compared elementwise).
// Cap m <= 15.
std::pair<int, Partition> pcc_rate(const Instance& inst);

// Fractional relaxation: time sharing over MDS solutions of all nonempty
// subsets, solved as an exact covering LP. Cap m <= 12.
std::pair<Rational, Cover> fpcc_rate(const Instance& inst);

// Same LP restricted to minimal blocks: sets whose MDS rate no partition into
// smaller blocks can beat. Reproduces the unrestricted optimum.
std::pair<Rational, Cover> fpcc_rate_minimal(const Instance& inst);

// Recursive scheme: beta({i}) = 1, and for larger M the min-max LP over all
// proper nonempty subsets, where receiver i pays only for blocks not fully
// inside A_i. Memoized over all subsets of [m]; cap m <= 9.
Rational recursive_rate(const Instance& inst);

// An interlinked-cycle structure: member set M with an inner set J such that
// between every ordered pair of distinct inner vertices there is exactly one
// path whose interior avoids J, and no such closed path returns to an inner
// vertex. One transmission serves all of J, so the rate is |M| - |J| + 1.
struct IccStructure {
  IndexSet members;
  IndexSet inner;
  int rate = 0;
};

struct IccCoverEntry {
  IccStructure structure;
  Rational weight;
};

struct IccResult {
  Rational rate;
  std::vector<IccCoverEntry> cover;
};

struct IccScalarResult {
  int rate = 0;
  std::vector<IccStructure> blocks;
};

// Number of directed simple paths from `from` to `to` whose interior vertices
// all lie in allowed_interior (endpoints need not). With from == to it counts
// directed cycles through `from` with interior in allowed_interior. Throws
// CapExceeded once more than `cap` paths are found.
uint64_t count_simple_paths(const Instance& inst, int from, int to,
                            const IndexSet& allowed_interior,
                            uint64_t cap = 100000);

// Whether (members, inner) forms a valid interlinked-cycle structure.
bool is_valid_inner_set(const Instance& inst, const IndexSet& members,
                        const IndexSet& inner, uint64_t path_cap = 100000);

// Largest valid inner set for a member set (lexicographically smallest among
// maximum-size ones). Always valid: the empty inner set.
IndexSet largest_inner_set(const Instance& inst, const IndexSet& members,
                           uint64_t path_cap = 100000);

// Fractional interlinked-cycle cover: covering LP over every member set,
// each priced by its best inner set. Cap m <= 8.
IccResult icc_rate(const Instance& inst);

// Integer-weight restriction of the same cover (blocks may overlap).
IccScalarResult icc_rate_scalar(const Instance& inst);

// Minimum GF(2) rank over all matrices with unit diagonal, free entries at
// (i, j) for j in A_i, and zeros elsewhere. Branch-and-bound over the free
// entries; cap sum |A_i| <= 24.
int minrank_gf2_bruteforce(const Instance& inst);

// Partition DP like pcc_rate but with the update-based scheme's rate as the
// block cost (each block solved as its own induced instance). Cap m <= 15.
std::pair<int, Partition> pumcd_rate(
    const Instance& inst, const TieBreak& tb = TieBreak::lowest_index());

// Fractional version: covering LP over all nonempty subsets priced by the
// update-based scheme. Cap m <= 12.
std::pair<Rational, Cover> fpumcd_rate(
    const Instance& inst, const TieBreak& tb = TieBreak::lowest_index());

}  // namespace ic
