#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ic/instance.hpp"
#include "ic/matching.hpp"
#include "ic/sets.hpp"

namespace ic {

// How to pick the transmitter w when several receivers tie for the smallest
// side-information set.
struct TieBreak {
  enum class Kind { LowestIndex, Seeded, ExhaustiveMin };
  Kind kind = Kind::LowestIndex;
  uint64_t seed = 0;

  static TieBreak lowest_index() { return {Kind::LowestIndex, 0}; }
  static TieBreak seeded(uint64_t s) { return {Kind::Seeded, s}; }
  static TieBreak exhaustive_min() { return {Kind::ExhaustiveMin, 0}; }
};

struct UmcdRound {
  int chosen = 0;      // receiver w whose set drives this round
  IndexSet group;      // G_k = {w} union A_w (the support of pattern row k)
  IndexSet satisfied;  // receivers that become decodable after this round
};

struct UmcdResult {
  int rate = 0;                  // number of rounds / pattern rows
  BinaryMatrix support{0, 0};    // rate x m pattern; row k has support G_k
  std::vector<UmcdRound> schedule;
  uint64_t q_min = 0;            // field-size bound C(m, min(m/2, rate))
  bool q_min_degenerate = false; // true when that bound is below 2
  uint64_t branches_explored = 1;  // schedules tried (>1 only for exhaustive)
};

// Runs the round-based scheduler: each round picks an unsatisfied receiver w
// with the fewest known messages, emits the row supported on {w} union A_w,
// and retires every receiver whose matching number over its interfering
// columns grows by exactly one when its own column is added.
UmcdResult run_umcd(const Instance& inst, const TieBreak& tb = TieBreak::lowest_index());

// Test hook: drives the first rounds with an explicit choice sequence,
// skipping the fewest-known rule (choices only need to be unsatisfied).
// Remaining rounds, if any, fall back to the lowest-index rule.
UmcdResult run_umcd_forced(const Instance& inst, const std::vector<int>& choices);

int umcd_rate(const Instance& inst, const TieBreak& tb = TieBreak::lowest_index());

// Smallest field size guaranteed to admit a max-rank completion of any
// achievable pattern: C(m, min(floor(m/2), rate)). Sets *degenerate when the
// bound is < 2 (a field still needs at least two elements).
uint64_t umcd_q_min(int m, int rate, bool* degenerate = nullptr);

// One line per round: "k: w=3 G_k={2,3} satisfied={3}".
std::string format_schedule(const UmcdResult& res);

}  // namespace ic
