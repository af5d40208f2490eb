#include "ic/umcd.hpp"

#include <algorithm>
#include <bit>
#include <climits>
#include <sstream>

#include "ic/error.hpp"

namespace ic {

namespace {

constexpr uint64_t kExhaustiveLeafCap = 100000;

uint64_t splitmix64(uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// Matching number of the emitted rows with columns restricted to colmask.
int mcm_cols(const std::vector<uint64_t>& row_masks, uint64_t colmask, int m) {
  BinaryMatrix g(static_cast<int>(row_masks.size()), m);
  for (int k = 1; k <= static_cast<int>(row_masks.size()); ++k) {
    uint64_t bits = row_masks[k - 1] & colmask;
    while (bits) {
      g.set(k, std::countr_zero(bits) + 1);
      bits &= bits - 1;
    }
  }
  return mcm(g);
}

// Shared round mechanics: side-information masks and the satisfaction test.
struct Engine {
  const Instance& inst;
  int m;
  std::vector<uint64_t> interfering;  // B_i as masks
  std::vector<int> known;             // |A_i|

  explicit Engine(const Instance& in) : inst(in), m(in.m()) {
    interfering.resize(m);
    known.resize(m);
    for (int i = 1; i <= m; ++i) {
      interfering[i - 1] = to_mask(inst.B(i));
      known[i - 1] = static_cast<int>(inst.A(i).size());
    }
  }

  uint64_t all_mask() const { return m >= 64 ? ~0ULL : (1ULL << m) - 1; }

  uint64_t group_mask(int w) const { return to_mask(inst.A(w)) | (1ULL << (w - 1)); }

  // Unsatisfied receivers whose side-information set is smallest, ascending.
  std::vector<int> candidates(uint64_t n_mask) const {
    int best = INT_MAX;
    std::vector<int> out;
    for (uint64_t rest = n_mask; rest; rest &= rest - 1) {
      int i = std::countr_zero(rest) + 1;
      if (known[i - 1] < best) {
        best = known[i - 1];
        out.clear();
      }
      if (known[i - 1] == best) out.push_back(i);
    }
    return out;
  }

  // Receivers in n_mask whose matching number over their interfering columns
  // rises by one when their own column joins, given the rows emitted so far.
  uint64_t newly_satisfied(const std::vector<uint64_t>& rows, uint64_t n_mask) const {
    uint64_t sat = 0;
    for (uint64_t rest = n_mask; rest; rest &= rest - 1) {
      int i = std::countr_zero(rest) + 1;
      uint64_t own = 1ULL << (i - 1);
      if (mcm_cols(rows, interfering[i - 1] | own, m) ==
          mcm_cols(rows, interfering[i - 1], m) + 1) {
        sat |= own;
      }
    }
    return sat;
  }
};

UmcdResult finalize(const Instance& inst, std::vector<UmcdRound> schedule,
                    uint64_t branches) {
  UmcdResult res;
  res.rate = static_cast<int>(schedule.size());
  res.support = BinaryMatrix(res.rate, inst.m());
  for (int k = 1; k <= res.rate; ++k) {
    for (int i : schedule[k - 1].group) res.support.set(k, i);
  }
  res.schedule = std::move(schedule);
  res.q_min = umcd_q_min(inst.m(), res.rate, &res.q_min_degenerate);
  res.branches_explored = branches;
  return res;
}

UmcdResult run_sequence(const Instance& inst, const TieBreak& tb,
                        const std::vector<int>* forced) {
  Engine eng(inst);
  uint64_t n_mask = eng.all_mask();
  std::vector<uint64_t> rows;
  std::vector<UmcdRound> schedule;
  int k = 0;
  while (n_mask != 0) {
    ++k;
    int w;
    if (forced && k <= static_cast<int>(forced->size())) {
      w = (*forced)[k - 1];
      if (w < 1 || w > eng.m || !((n_mask >> (w - 1)) & 1)) {
        throw Error("forced choice " + std::to_string(w) + " in round " +
                    std::to_string(k) + " is not an unsatisfied receiver");
      }
    } else {
      std::vector<int> cands = eng.candidates(n_mask);
      if (tb.kind == TieBreak::Kind::Seeded) {
        w = cands[splitmix64(tb.seed ^ (0x5bd1e995ULL * k)) % cands.size()];
      } else {
        w = cands.front();
      }
    }
    rows.push_back(eng.group_mask(w));
    uint64_t sat = eng.newly_satisfied(rows, n_mask);
    n_mask &= ~sat;
    schedule.push_back({w, from_mask(rows.back()), from_mask(sat)});
  }
  return finalize(inst, std::move(schedule), 1);
}

// Depth-first branch over every smallest-set candidate per round. Visits
// choice sequences in lexicographic order, so the first schedule found at the
// winning rate is the lexicographically smallest one. A subtree is cut as
// soon as it can no longer beat the best rate seen; each completed or cut
// sequence counts as one explored branch.
struct ExhaustiveSearch {
  Engine eng;
  uint64_t leaves = 0;
  int best_rate = INT_MAX;
  std::vector<int> best_choices;
  std::vector<int> cur;

  explicit ExhaustiveSearch(const Instance& inst) : eng(inst) {}

  void leaf() {
    if (++leaves > kExhaustiveLeafCap) {
      throw CapExceeded("exhaustive tie-break explored more than " +
                        std::to_string(kExhaustiveLeafCap) + " schedules");
    }
  }

  void dfs(uint64_t n_mask, std::vector<uint64_t>& rows) {
    if (n_mask == 0) {
      leaf();
      if (static_cast<int>(cur.size()) < best_rate) {
        best_rate = static_cast<int>(cur.size());
        best_choices = cur;
      }
      return;
    }
    if (static_cast<int>(rows.size()) >= best_rate - 1) {
      leaf();
      return;
    }
    for (int w : eng.candidates(n_mask)) {
      rows.push_back(eng.group_mask(w));
      cur.push_back(w);
      uint64_t sat = eng.newly_satisfied(rows, n_mask);
      dfs(n_mask & ~sat, rows);
      cur.pop_back();
      rows.pop_back();
    }
  }
};

UmcdResult run_exhaustive(const Instance& inst) {
  ExhaustiveSearch search(inst);
  std::vector<uint64_t> rows;
  search.dfs(search.eng.all_mask(), rows);
  UmcdResult res = run_sequence(inst, TieBreak::lowest_index(), &search.best_choices);
  res.branches_explored = search.leaves;
  return res;
}

}  // namespace

UmcdResult run_umcd(const Instance& inst, const TieBreak& tb) {
  if (tb.kind == TieBreak::Kind::ExhaustiveMin) return run_exhaustive(inst);
  return run_sequence(inst, tb, nullptr);
}

UmcdResult run_umcd_forced(const Instance& inst, const std::vector<int>& choices) {
  return run_sequence(inst, TieBreak::lowest_index(), &choices);
}

int umcd_rate(const Instance& inst, const TieBreak& tb) {
  return run_umcd(inst, tb).rate;
}

uint64_t umcd_q_min(int m, int rate, bool* degenerate) {
  if (m < 1 || rate < 0) throw Error("umcd_q_min: bad arguments");
  const int k = std::min(m / 2, rate);
  unsigned __int128 acc = 1;
  for (int j = 1; j <= k; ++j) {
    acc = acc * static_cast<unsigned>(m - k + j) / static_cast<unsigned>(j);
    if (acc > static_cast<unsigned __int128>(UINT64_MAX)) {
      throw Error("field-size bound overflows 64 bits");
    }
  }
  const uint64_t q = static_cast<uint64_t>(acc);
  if (degenerate) *degenerate = q < 2;
  return q;
}

std::string format_schedule(const UmcdResult& res) {
  std::ostringstream out;
  for (int k = 1; k <= res.rate; ++k) {
    const UmcdRound& r = res.schedule[k - 1];
    out << k << ": w=" << r.chosen << " G_" << k << "=" << format_set(r.group)
        << " satisfied=" << format_set(r.satisfied) << "\n";
  }
  return out.str();
}

}  // namespace ic
