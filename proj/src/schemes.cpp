#include "ic/schemes.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <string>

#include "ic/error.hpp"
#include "ic/lp.hpp"

namespace ic {
namespace {

std::vector<uint64_t> adjacency_masks(const Instance& inst) {
  std::vector<uint64_t> adj(static_cast<size_t>(inst.m()));
  for (int i = 1; i <= inst.m(); ++i) adj[i - 1] = to_mask(inst.A(i));
  return adj;
}

// Strict lexicographic order on the index sets behind two masks, with the
// usual prefix-is-smaller convention. O(1): the lowest differing element
// decides unless the other set ends right before it.
bool lex_less_mask(uint64_t a, uint64_t b) {
  if (a == b) return false;
  uint64_t d = a ^ b;
  uint64_t low = d & (~d + 1);
  uint64_t above = ~(low - 1) ^ low;  // bits strictly above the lowest diff
  if (a & low) return (b & above) != 0;
  return (a & above) == 0;
}

void check_size_cap(const char* scheme, int m, int cap) {
  if (m > cap) {
    throw CapExceeded(std::string(scheme) + ": m = " + std::to_string(m) +
                      " exceeds the cap of " + std::to_string(cap));
  }
}

// |T| - min_{i in T} |T intersect A_i| computed on masks.
int mds_cost_mask(const std::vector<uint64_t>& adj, uint64_t t) {
  int best = std::numeric_limits<int>::max();
  for (uint64_t rest = t; rest; rest &= rest - 1) {
    int i = std::countr_zero(rest);
    best = std::min(best, std::popcount(adj[static_cast<size_t>(i)] & t));
  }
  return std::popcount(t) - best;
}

std::vector<int> mds_cost_table(const std::vector<uint64_t>& adj) {
  const size_t n = size_t{1} << adj.size();
  std::vector<int> cost(n, 0);
  for (uint64_t t = 1; t < n; ++t) cost[t] = mds_cost_mask(adj, t);
  return cost;
}

// min over partitions of [m] of the summed block costs. Every partition is
// generated exactly once by always splitting off the block that contains the
// smallest remaining element; ties keep the lexicographically smallest block,
// which yields the lexicographically smallest optimal partition overall.
std::pair<int, Partition> partition_dp(int m, const std::vector<int>& cost) {
  const uint64_t full = (uint64_t{1} << m) - 1;
  std::vector<int> best(full + 1, 0);
  std::vector<uint64_t> choice(full + 1, 0);
  for (uint64_t s = 1; s <= full; ++s) {
    uint64_t lead = s & (~s + 1);
    int best_cost = std::numeric_limits<int>::max();
    uint64_t best_block = 0;
    for (uint64_t sub = s; sub; sub = (sub - 1) & s) {
      if (!(sub & lead)) continue;
      int c = cost[sub] + best[s ^ sub];
      if (c < best_cost ||
          (c == best_cost && lex_less_mask(sub, best_block))) {
        best_cost = c;
        best_block = sub;
      }
    }
    best[s] = best_cost;
    choice[s] = best_block;
  }
  Partition part;
  for (uint64_t s = full; s; s ^= choice[s]) {
    part.blocks.push_back(from_mask(choice[s]));
  }
  return {best[full], std::move(part)};
}

// Exact covering LP: minimize sum cost_j * w_j over the given member-set
// columns subject to per-receiver coverage >= 1 and w in [0, 1].
struct CoverColumn {
  uint64_t mask = 0;
  Rational cost;
};

std::pair<Rational, Cover> covering_lp(int m,
                                       const std::vector<CoverColumn>& cols) {
  const int n = static_cast<int>(cols.size());
  LpProblem lp(n);
  std::vector<Rational> obj(static_cast<size_t>(n));
  for (int j = 0; j < n; ++j) obj[static_cast<size_t>(j)] = cols[static_cast<size_t>(j)].cost;
  lp.set_objective(std::move(obj));
  for (int i = 0; i < m; ++i) {
    std::vector<Rational> row(static_cast<size_t>(n), Rational(0));
    for (int j = 0; j < n; ++j) {
      if (cols[static_cast<size_t>(j)].mask >> i & 1) row[static_cast<size_t>(j)] = Rational(1);
    }
    lp.add_constraint(std::move(row), Relation::GreaterEq, Rational(1));
  }
  for (int j = 1; j <= n; ++j) lp.set_upper_bound(j, Rational(1));
  LpSolution sol = lp_solve(lp);
  if (sol.status != LpStatus::Optimal) {
    throw Error("covering LP unexpectedly " +
                std::string(sol.status == LpStatus::Infeasible ? "infeasible"
                                                               : "unbounded"));
  }
  Cover cover;
  cover.total_rate = sol.objective;
  for (int j = 0; j < n; ++j) {
    const Rational& w = sol.x[static_cast<size_t>(j)];
    if (w.is_zero()) continue;
    cover.entries.push_back(
        {from_mask(cols[static_cast<size_t>(j)].mask), w, cols[static_cast<size_t>(j)].cost});
  }
  return {sol.objective, std::move(cover)};
}

std::vector<CoverColumn> all_subset_columns(int m,
                                            const std::vector<int>& cost) {
  const uint64_t full = (uint64_t{1} << m) - 1;
  std::vector<CoverColumn> cols;
  cols.reserve(full);
  for (uint64_t t = 1; t <= full; ++t) cols.push_back({t, Rational(cost[t])});
  return cols;
}

uint64_t dfs_paths(const std::vector<uint64_t>& adj, int v, int target,
                   uint64_t interior, uint64_t visited, uint64_t cap,
                   uint64_t count) {
  for (uint64_t rest = adj[static_cast<size_t>(v)]; rest; rest &= rest - 1) {
    int w = std::countr_zero(rest);
    if (w == target) {
      if (++count > cap) {
        throw CapExceeded("path count exceeds cap of " + std::to_string(cap));
      }
      continue;
    }
    uint64_t bit = uint64_t{1} << w;
    if ((interior & bit) && !(visited & bit)) {
      count = dfs_paths(adj, w, target, interior, visited | bit, cap, count);
    }
  }
  return count;
}

uint64_t count_paths_mask(const std::vector<uint64_t>& adj, int from0, int to0,
                          uint64_t interior, uint64_t cap) {
  interior &= ~(uint64_t{1} << from0);
  interior &= ~(uint64_t{1} << to0);
  return dfs_paths(adj, from0, to0, interior, 0, cap, 0);
}

bool valid_inner_mask(const std::vector<uint64_t>& adj, uint64_t members,
                      uint64_t inner, uint64_t path_cap) {
  const uint64_t interior = members & ~inner;
  for (uint64_t ri = inner; ri; ri &= ri - 1) {
    int i = std::countr_zero(ri);
    if (count_paths_mask(adj, i, i, interior, path_cap) != 0) return false;
    for (uint64_t rj = inner; rj; rj &= rj - 1) {
      int j = std::countr_zero(rj);
      if (j == i) continue;
      if (count_paths_mask(adj, i, j, interior, path_cap) != 1) return false;
    }
  }
  return true;
}

// Restrict arcs to the member set: a path inside M may only ever touch M.
std::vector<uint64_t> restrict_adj(const std::vector<uint64_t>& adj,
                                   uint64_t members) {
  std::vector<uint64_t> r(adj.size(), 0);
  for (uint64_t rest = members; rest; rest &= rest - 1) {
    int i = std::countr_zero(rest);
    r[static_cast<size_t>(i)] = adj[static_cast<size_t>(i)] & members;
  }
  return r;
}

uint64_t best_inner_mask(const std::vector<uint64_t>& adj, uint64_t members,
                         uint64_t path_cap) {
  const std::vector<uint64_t> local = restrict_adj(adj, members);
  int best_size = 0;
  uint64_t best = 0;  // the empty inner set is vacuously valid
  uint64_t sub = members;
  while (true) {
    int size = std::popcount(sub);
    if ((size > best_size || (size == best_size && lex_less_mask(sub, best))) &&
        valid_inner_mask(local, members, sub, path_cap)) {
      best_size = size;
      best = sub;
    }
    if (!sub) break;
    sub = (sub - 1) & members;
  }
  return best;
}

struct IccCostTable {
  std::vector<int> cost;       // |M| - |J*| + 1 per member mask
  std::vector<uint64_t> inner;  // J* per member mask
};

IccCostTable icc_cost_table(const std::vector<uint64_t>& adj,
                            uint64_t path_cap) {
  const size_t n = size_t{1} << adj.size();
  IccCostTable t;
  t.cost.assign(n, 0);
  t.inner.assign(n, 0);
  for (uint64_t mem = 1; mem < n; ++mem) {
    uint64_t j = best_inner_mask(adj, mem, path_cap);
    t.inner[mem] = j;
    t.cost[mem] = std::popcount(mem) - std::popcount(j) + 1;
  }
  return t;
}

int checked_member(const Instance& inst, int v, const char* what) {
  if (v < 1 || v > inst.m()) {
    throw Error(std::string(what) + " " + std::to_string(v) +
                " out of range for m = " + std::to_string(inst.m()));
  }
  return v - 1;
}

}  // namespace

int mds_rate(const Subinstance& sub) {
  const IndexSet& mem = sub.members();
  int best = std::numeric_limits<int>::max();
  for (int i : mem) {
    best = std::min(best, static_cast<int>(sub.local_side_info(i).size()));
  }
  return static_cast<int>(mem.size()) - best;
}

int mds_rate(const Instance& inst) {
  return inst.m() - inst.min_side_info_size();
}

std::pair<int, Partition> pcc_rate(const Instance& inst) {
  check_size_cap("pcc", inst.m(), 15);
  return partition_dp(inst.m(), mds_cost_table(adjacency_masks(inst)));
}

std::pair<Rational, Cover> fpcc_rate(const Instance& inst) {
  check_size_cap("fpcc", inst.m(), 12);
  const std::vector<int> cost = mds_cost_table(adjacency_masks(inst));
  return covering_lp(inst.m(), all_subset_columns(inst.m(), cost));
}

std::pair<Rational, Cover> fpcc_rate_minimal(const Instance& inst) {
  check_size_cap("fpcc", inst.m(), 12);
  const std::vector<int> cost = mds_cost_table(adjacency_masks(inst));
  // A block is minimal exactly when no partition of it beats its own rate,
  // i.e. when the best-partition DP cannot improve on the block cost.
  std::vector<int> best((size_t{1} << inst.m()), 0);
  const uint64_t full = (uint64_t{1} << inst.m()) - 1;
  for (uint64_t s = 1; s <= full; ++s) {
    uint64_t lead = s & (~s + 1);
    int b = std::numeric_limits<int>::max();
    for (uint64_t sub = s; sub; sub = (sub - 1) & s) {
      if (sub & lead) b = std::min(b, cost[sub] + best[s ^ sub]);
    }
    best[s] = b;
  }
  std::vector<CoverColumn> cols;
  for (uint64_t t = 1; t <= full; ++t) {
    if (best[t] == cost[t]) cols.push_back({t, Rational(cost[t])});
  }
  return covering_lp(inst.m(), cols);
}

Rational recursive_rate(const Instance& inst) {
  check_size_cap("recursive", inst.m(), 9);
  const std::vector<uint64_t> adj = adjacency_masks(inst);
  const uint64_t full = (uint64_t{1} << inst.m()) - 1;
  std::vector<Rational> beta(full + 1, Rational(0));
  // Every proper submask is numerically smaller, so ascending mask order is
  // a valid evaluation order for the recursion.
  for (uint64_t s = 1; s <= full; ++s) {
    if (std::popcount(s) == 1) {
      beta[s] = Rational(1);
      continue;
    }
    std::vector<uint64_t> subs;
    for (uint64_t sub = (s - 1) & s; sub; sub = (sub - 1) & s) {
      subs.push_back(sub);
    }
    const int n = static_cast<int>(subs.size());
    const int t_var = n;  // auxiliary variable: the max row sum
    LpProblem lp(n + 1);
    std::vector<Rational> obj(static_cast<size_t>(n) + 1, Rational(0));
    obj[static_cast<size_t>(t_var)] = Rational(1);
    lp.set_objective(std::move(obj));
    for (uint64_t ri = s; ri; ri &= ri - 1) {
      int i = std::countr_zero(ri);
      std::vector<Rational> pay(static_cast<size_t>(n) + 1, Rational(0));
      std::vector<Rational> covered(static_cast<size_t>(n) + 1, Rational(0));
      for (int j = 0; j < n; ++j) {
        uint64_t sub = subs[static_cast<size_t>(j)];
        if (sub & ~adj[static_cast<size_t>(i)]) pay[static_cast<size_t>(j)] = beta[sub];
        if (sub >> i & 1) covered[static_cast<size_t>(j)] = Rational(1);
      }
      pay[static_cast<size_t>(t_var)] = Rational(-1);
      lp.add_constraint(std::move(pay), Relation::LessEq, Rational(0));
      lp.add_constraint(std::move(covered), Relation::GreaterEq, Rational(1));
    }
    for (int j = 1; j <= n; ++j) lp.set_upper_bound(j, Rational(1));
    LpSolution sol = lp_solve(lp);
    if (sol.status != LpStatus::Optimal) {
      throw Error("recursive-scheme LP unexpectedly not optimal");
    }
    beta[s] = sol.objective;
  }
  return beta[full];
}

uint64_t count_simple_paths(const Instance& inst, int from, int to,
                            const IndexSet& allowed_interior, uint64_t cap) {
  int f = checked_member(inst, from, "path endpoint");
  int t = checked_member(inst, to, "path endpoint");
  return count_paths_mask(adjacency_masks(inst), f, t,
                          to_mask(allowed_interior), cap);
}

bool is_valid_inner_set(const Instance& inst, const IndexSet& members,
                        const IndexSet& inner, uint64_t path_cap) {
  if (!is_subset(inner, members)) {
    throw Error("inner set must lie inside the member set");
  }
  const std::vector<uint64_t> adj = adjacency_masks(inst);
  const uint64_t mem = to_mask(members);
  return valid_inner_mask(restrict_adj(adj, mem), mem, to_mask(inner),
                          path_cap);
}

IndexSet largest_inner_set(const Instance& inst, const IndexSet& members,
                           uint64_t path_cap) {
  for (int v : members) checked_member(inst, v, "member");
  return from_mask(
      best_inner_mask(adjacency_masks(inst), to_mask(members), path_cap));
}

IccResult icc_rate(const Instance& inst) {
  check_size_cap("icc", inst.m(), 8);
  const std::vector<uint64_t> adj = adjacency_masks(inst);
  const IccCostTable table = icc_cost_table(adj, 100000);
  auto [rate, cover] =
      covering_lp(inst.m(), all_subset_columns(inst.m(), table.cost));
  IccResult res;
  res.rate = rate;
  for (const CoverEntry& e : cover.entries) {
    uint64_t mem = to_mask(e.members);
    res.cover.push_back(
        {{e.members, from_mask(table.inner[mem]), table.cost[mem]}, e.weight});
  }
  return res;
}

IccScalarResult icc_rate_scalar(const Instance& inst) {
  check_size_cap("icc", inst.m(), 8);
  const int m = inst.m();
  const std::vector<uint64_t> adj = adjacency_masks(inst);
  const IccCostTable table = icc_cost_table(adj, 100000);
  const uint64_t full = (uint64_t{1} << m) - 1;
  // Cover DP on the still-uncovered set. Blocks may reach outside it (covers
  // can overlap), so candidates range over every set containing the smallest
  // uncovered element.
  std::vector<int> best(full + 1, 0);
  std::vector<uint64_t> choice(full + 1, 0);
  for (uint64_t s = 1; s <= full; ++s) {
    int lead = std::countr_zero(s);
    uint64_t others = full & ~(uint64_t{1} << lead);
    int best_cost = std::numeric_limits<int>::max();
    uint64_t best_block = 0;
    uint64_t sub = others;
    while (true) {
      uint64_t block = sub | (uint64_t{1} << lead);
      int c = table.cost[block] + best[s & ~block];
      if (c < best_cost ||
          (c == best_cost && lex_less_mask(block, best_block))) {
        best_cost = c;
        best_block = block;
      }
      if (!sub) break;
      sub = (sub - 1) & others;
    }
    best[s] = best_cost;
    choice[s] = best_block;
  }
  IccScalarResult res;
  res.rate = best[full];
  for (uint64_t s = full; s; s &= ~choice[s]) {
    uint64_t block = choice[s];
    res.blocks.push_back(
        {from_mask(block), from_mask(table.inner[block]), table.cost[block]});
  }
  return res;
}

namespace {

struct MinrankSearch {
  std::vector<uint64_t> free_mask;  // per row, the optional positions
  std::vector<uint64_t> fixed;      // per row, the mandatory diagonal bit
  std::vector<uint64_t> basis;      // current partial-row span, by leading bit
  int best = 0;

  // Reduce v against the basis; append and report true if independent.
  bool insert(uint64_t v) {
    for (uint64_t b : basis) v = std::min(v, v ^ b);
    if (!v) return false;
    basis.push_back(v);
    return true;
  }

  void descend(size_t row) {
    if (static_cast<int>(basis.size()) >= best) return;  // rank never drops
    if (row == free_mask.size()) {
      best = static_cast<int>(basis.size());
      return;
    }
    uint64_t opts = free_mask[row];
    uint64_t sub = opts;
    while (true) {
      bool grew = insert(fixed[row] | sub);
      descend(row + 1);
      if (grew) basis.pop_back();
      if (!sub) break;
      sub = (sub - 1) & opts;
    }
  }
};

}  // namespace

int minrank_gf2_bruteforce(const Instance& inst) {
  const int m = inst.m();
  long total = 0;
  for (int i = 1; i <= m; ++i) total += static_cast<long>(inst.A(i).size());
  if (total > 24) {
    throw CapExceeded("minrank brute force: " + std::to_string(total) +
                      " free entries exceed the cap of 24");
  }
  MinrankSearch search;
  search.free_mask = adjacency_masks(inst);
  search.fixed.resize(static_cast<size_t>(m));
  for (int i = 0; i < m; ++i) search.fixed[static_cast<size_t>(i)] = uint64_t{1} << i;
  search.best = m;  // the identity choice (all free entries zero) is valid
  search.descend(0);
  return search.best;
}

namespace {

std::vector<int> umcd_cost_table(const Instance& inst, const TieBreak& tb) {
  const uint64_t full = (uint64_t{1} << inst.m()) - 1;
  std::vector<int> cost(full + 1, 0);
  for (uint64_t t = 1; t <= full; ++t) {
    cost[t] = umcd_rate(Subinstance(inst, from_mask(t)).induced(), tb);
  }
  return cost;
}

}  // namespace

std::pair<int, Partition> pumcd_rate(const Instance& inst, const TieBreak& tb) {
  check_size_cap("pumcd", inst.m(), 15);
  return partition_dp(inst.m(), umcd_cost_table(inst, tb));
}

std::pair<Rational, Cover> fpumcd_rate(const Instance& inst,
                                       const TieBreak& tb) {
  check_size_cap("fpumcd", inst.m(), 12);
  return covering_lp(inst.m(),
                     all_subset_columns(inst.m(), umcd_cost_table(inst, tb)));
}

}  // namespace ic
