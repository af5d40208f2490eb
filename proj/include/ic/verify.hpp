#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ic/gf.hpp"
#include "ic/instance.hpp"
#include "ic/umcd.hpp"

namespace ic {

enum class DecodeMethod { Exhaustive, Rank };

// True iff receiver i always recovers x_i from the first k transmissions of
// h plus its side information. Decided by brute force: enumerate every
// message vector and flag two that agree on the codeword prefix and on A_i
// yet differ in x_i. Cap q^m <= 10^7; throws CapExceeded beyond it.
bool decodable_exhaustive(const Instance& inst, const FieldMatrix& h, int i,
                          int k);

// The same question by ranks: appending column i to the interfering columns
// B_i must raise the rank of the k-row prefix by exactly one.
bool decodable_rank(const Instance& inst, const FieldMatrix& h, int i, int k);

// Verdicts for every receiver at every prefix length, one method throughout.
// verdict[k-1][i-1] = receiver i decodable after the first k transmissions.
struct DecodabilityReport {
  DecodeMethod method = DecodeMethod::Rank;
  std::vector<std::vector<bool>> verdict;
};

DecodabilityReport decodability_table(const Instance& inst,
                                      const FieldMatrix& h,
                                      DecodeMethod method);

// Outcome of the end-to-end consistency check. When ok is false,
// failing_check is one of "shape", "support", "maxrank", "schedule-rank",
// "schedule-exhaustive", and detail pinpoints the first offending spot.
// exhaustive_checked records whether the brute-force leg ran (it is skipped,
// not failed, when q^m exceeds the enumeration cap).
struct PipelineReport {
  bool ok = true;
  std::string failing_check;
  std::string detail;
  int rate = 0;
  uint64_t q = 0;
  bool exhaustive_checked = false;
};

// Checks a finished code against the scheduler's word: the matrix fits the
// support, every row-prefix/column-subset rank meets its matching bound, and
// exactly the scheduled receivers decode at every prefix — by ranks always,
// and exhaustively when q^m is within the cap.
PipelineReport verify_code_against_schedule(const Instance& inst,
                                            const UmcdResult& scheduled,
                                            const FieldMatrix& h);

// Scheduler, synthesis, and the check above in one call. q = 0 picks the
// smallest prime meeting the field-size guarantee; anything smaller needs
// allow_small_q and may legitimately fail inside synthesis (thrown Error).
PipelineReport full_pipeline_check(const Instance& inst, uint64_t q = 0,
                                   bool allow_small_q = false);

}  // namespace ic
