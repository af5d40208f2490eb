#include "ic/verify.hpp"

#include <algorithm>
#include <string>

#include "ic/error.hpp"
#include "ic/mcd.hpp"

namespace ic {
namespace {

constexpr uint64_t kEnumerationCap = 10000000;

void check_dimensions(const Instance& inst, const FieldMatrix& h, int i,
                      int k) {
  if (h.cols() != inst.m()) {
    throw Error("matrix has " + std::to_string(h.cols()) +
                " columns but the instance has m = " +
                std::to_string(inst.m()));
  }
  if (i < 1 || i > inst.m()) {
    throw Error("receiver " + std::to_string(i) + " out of range");
  }
  if (k < 0 || k > h.rows()) {
    throw Error("prefix length " + std::to_string(k) + " out of range");
  }
}

// q^e, saturating just above `limit` so callers can compare against it.
uint64_t saturating_pow(uint64_t q, int e, uint64_t limit) {
  uint64_t p = 1;
  for (int t = 0; t < e; ++t) {
    if (p > limit / q) return limit + 1;
    p *= q;
  }
  return p;
}

}  // namespace

bool decodable_exhaustive(const Instance& inst, const FieldMatrix& h, int i,
                          int k) {
  check_dimensions(inst, h, i, k);
  const int m = inst.m();
  const uint64_t q = h.modulus();
  const uint64_t total = saturating_pow(q, m, kEnumerationCap);
  if (total > kEnumerationCap) {
    throw CapExceeded("exhaustive decode check: q^m exceeds the cap of " +
                      std::to_string(kEnumerationCap));
  }
  const IndexSet& ai = inst.A(i);
  // Every vector contributes one packed base-q record: the codeword prefix,
  // the side-information coordinates, then the wanted coordinate last.
  const int digits = k + static_cast<int>(ai.size()) + 1;
  if (saturating_pow(q, digits, UINT64_MAX / 2) > UINT64_MAX / 2) {
    throw CapExceeded("exhaustive decode check: record space too large");
  }
  std::vector<std::vector<uint64_t>> col(
      static_cast<size_t>(m), std::vector<uint64_t>(static_cast<size_t>(k)));
  for (int j = 0; j < m; ++j) {
    for (int t = 0; t < k; ++t) {
      col[static_cast<size_t>(j)][static_cast<size_t>(t)] =
          h.get(t + 1, j + 1);
    }
  }
  std::vector<uint64_t> x(static_cast<size_t>(m), 0);
  std::vector<uint64_t> y(static_cast<size_t>(k), 0);
  std::vector<uint64_t> items;
  items.reserve(total);
  while (true) {
    uint64_t key = 0;
    for (int t = 0; t < k; ++t) key = key * q + y[static_cast<size_t>(t)];
    for (int j : ai) key = key * q + x[static_cast<size_t>(j - 1)];
    items.push_back(key * q + x[static_cast<size_t>(i - 1)]);
    int pos = 0;
    while (pos < m) {
      for (int t = 0; t < k; ++t) {
        uint64_t& v = y[static_cast<size_t>(t)];
        v += col[static_cast<size_t>(pos)][static_cast<size_t>(t)];
        if (v >= q) v -= q;
      }
      if (++x[static_cast<size_t>(pos)] < q) break;
      x[static_cast<size_t>(pos)] = 0;
      ++pos;
    }
    if (pos == m) break;
  }
  std::sort(items.begin(), items.end());
  for (size_t t = 1; t < items.size(); ++t) {
    if (items[t - 1] / q == items[t] / q && items[t - 1] != items[t]) {
      return false;
    }
  }
  return true;
}

bool decodable_rank(const Instance& inst, const FieldMatrix& h, int i, int k) {
  check_dimensions(inst, h, i, k);
  const FieldMatrix prefix = h.row_prefix(k);
  const IndexSet bi = inst.B(i);
  return rank(prefix.columns(set_union(bi, {i}))) ==
         rank(prefix.columns(bi)) + 1;
}

DecodabilityReport decodability_table(const Instance& inst,
                                      const FieldMatrix& h,
                                      DecodeMethod method) {
  DecodabilityReport rep;
  rep.method = method;
  for (int k = 1; k <= h.rows(); ++k) {
    std::vector<bool> row(static_cast<size_t>(inst.m()));
    for (int i = 1; i <= inst.m(); ++i) {
      row[static_cast<size_t>(i - 1)] =
          method == DecodeMethod::Exhaustive
              ? decodable_exhaustive(inst, h, i, k)
              : decodable_rank(inst, h, i, k);
    }
    rep.verdict.push_back(std::move(row));
  }
  return rep;
}

PipelineReport verify_code_against_schedule(const Instance& inst,
                                            const UmcdResult& scheduled,
                                            const FieldMatrix& h) {
  PipelineReport rep;
  rep.rate = scheduled.rate;
  rep.q = h.modulus();
  const int m = inst.m();
  auto fail = [&rep](const char* check, std::string detail) {
    rep.ok = false;
    rep.failing_check = check;
    rep.detail = std::move(detail);
  };

  if (h.rows() != scheduled.rate || h.cols() != m ||
      scheduled.support.rows() != scheduled.rate ||
      scheduled.support.cols() != m) {
    fail("shape", "matrix is " + std::to_string(h.rows()) + "x" +
                      std::to_string(h.cols()) + ", schedule wants " +
                      std::to_string(scheduled.rate) + "x" +
                      std::to_string(m));
    return rep;
  }
  for (int k = 1; k <= scheduled.rate; ++k) {
    for (int i = 1; i <= m; ++i) {
      if (!scheduled.support.get(k, i) && h.get(k, i) != 0) {
        fail("support", "nonzero entry off support at (" + std::to_string(k) +
                            "," + std::to_string(i) + ")");
        return rep;
      }
    }
  }

  MaxrankReport mx = verify_maxrank(h, scheduled.support);
  if (!mx.ok) {
    fail("maxrank", "prefix " + std::to_string(mx.k) + " columns " +
                        format_set(mx.cols) + " reach rank " +
                        std::to_string(mx.rank_found) + " instead of " +
                        std::to_string(mx.matching));
    return rep;
  }

  std::vector<uint64_t> satisfied_by(static_cast<size_t>(scheduled.rate) + 1,
                                     0);
  for (int k = 1; k <= scheduled.rate; ++k) {
    satisfied_by[static_cast<size_t>(k)] =
        satisfied_by[static_cast<size_t>(k - 1)] |
        to_mask(scheduled.schedule[static_cast<size_t>(k - 1)].satisfied);
  }
  for (int k = 1; k <= scheduled.rate; ++k) {
    for (int i = 1; i <= m; ++i) {
      bool want = satisfied_by[static_cast<size_t>(k)] >> (i - 1) & 1;
      if (decodable_rank(inst, h, i, k) != want) {
        fail("schedule-rank",
             "receiver " + std::to_string(i) + " at prefix " +
                 std::to_string(k) + " should be " +
                 (want ? "decodable" : "undecodable"));
        return rep;
      }
    }
  }

  if (saturating_pow(rep.q, m, kEnumerationCap) <= kEnumerationCap) {
    rep.exhaustive_checked = true;
    for (int k = 1; k <= scheduled.rate; ++k) {
      for (int i = 1; i <= m; ++i) {
        bool want = satisfied_by[static_cast<size_t>(k)] >> (i - 1) & 1;
        if (decodable_exhaustive(inst, h, i, k) != want) {
          fail("schedule-exhaustive",
               "receiver " + std::to_string(i) + " at prefix " +
                   std::to_string(k) + " should be " +
                   (want ? "decodable" : "undecodable"));
          return rep;
        }
      }
    }
  }
  return rep;
}

PipelineReport full_pipeline_check(const Instance& inst, uint64_t q,
                                   bool allow_small_q) {
  UmcdResult scheduled = run_umcd(inst);
  if (q == 0) q = next_prime_at_least(std::max<uint64_t>(scheduled.q_min, 2));
  McdOptions opt;
  opt.allow_small_q = allow_small_q;
  FieldMatrix h = mcd(scheduled.support, q, opt);
  return verify_code_against_schedule(inst, scheduled, h);
}

}  // namespace ic
