#include "ic/instance.hpp"

#include <algorithm>
#include <cassert>
#include <istream>
#include <map>
#include <sstream>

#include "ic/error.hpp"

namespace ic {

Instance::Instance(int m, std::vector<IndexSet> side_info) : m_(m), side_info_(std::move(side_info)) {
  if (m < 1) throw Error("instance: m must be >= 1, got " + std::to_string(m));
  if (static_cast<int>(side_info_.size()) != m)
    throw Error("instance: expected " + std::to_string(m) + " side information sets, got " +
                std::to_string(side_info_.size()));
  for (int i = 1; i <= m; ++i) {
    IndexSet& a = side_info_[i - 1];
    std::sort(a.begin(), a.end());
    for (size_t j = 0; j < a.size(); ++j) {
      if (a[j] < 1 || a[j] > m)
        throw Error("instance: receiver " + std::to_string(i) + " has side information index " +
                    std::to_string(a[j]) + " out of range for m=" + std::to_string(m));
      if (a[j] == i)
        throw Error("instance: receiver " + std::to_string(i) + " lists itself as side information");
      if (j > 0 && a[j] == a[j - 1])
        throw Error("instance: receiver " + std::to_string(i) + " has duplicate side information index " +
                    std::to_string(a[j]));
    }
  }
}

const IndexSet& Instance::A(int i) const {
  assert(i >= 1 && i <= m_);
  return side_info_[i - 1];
}

IndexSet Instance::B(int i) const {
  IndexSet excluded = set_union(A(i), {i});
  return set_difference(range_set(m_), excluded);
}

int Instance::min_side_info_size() const {
  size_t best = side_info_[0].size();
  for (const IndexSet& a : side_info_) best = std::min(best, a.size());
  return static_cast<int>(best);
}

std::string Instance::to_ic() const {
  std::ostringstream out;
  out << m_ << "\n";
  for (int i = 1; i <= m_; ++i) {
    const IndexSet& a = side_info_[i - 1];
    for (size_t j = 0; j < a.size(); ++j) {
      if (j) out << ' ';
      out << a[j];
    }
    out << "\n";
  }
  return out.str();
}

nlohmann::json Instance::to_json() const {
  nlohmann::json j;
  j["m"] = m_;
  j["side_info"] = side_info_;
  return j;
}

Instance Instance::from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("m") || !j.contains("side_info"))
    throw Error("instance json: want an object with fields \"m\" and \"side_info\"");
  return Instance(j.at("m").get<int>(), j.at("side_info").get<std::vector<IndexSet>>());
}

namespace {

// Reads the next significant line (skipping '#' comments), tracking the
// physical line number. Returns false on EOF.
bool next_data_line(std::istream& in, std::string& line, int& lineno) {
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line[0] == '#') continue;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return true;
  }
  return false;
}

[[noreturn]] void parse_fail(int lineno, const std::string& why) {
  throw Error(".ic parse: line " + std::to_string(lineno) + ": " + why);
}

}  // namespace

Instance parse_instance(std::istream& in) {
  std::string line;
  int lineno = 0;
  if (!next_data_line(in, line, lineno)) throw Error(".ic parse: empty input");
  int m = 0;
  {
    std::istringstream ls(line);
    if (!(ls >> m) || m < 1) parse_fail(lineno, "expected the message count m >= 1");
    std::string extra;
    if (ls >> extra) parse_fail(lineno, "unexpected token '" + extra + "' after m");
  }
  std::vector<IndexSet> side(m);
  for (int i = 1; i <= m; ++i) {
    if (!next_data_line(in, line, lineno))
      throw Error(".ic parse: missing side information line for receiver " + std::to_string(i));
    std::istringstream ls(line);
    std::string tok;
    while (ls >> tok) {
      int idx;
      size_t used = 0;
      try {
        idx = std::stoi(tok, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != tok.size()) parse_fail(lineno, "malformed index '" + tok + "'");
      if (idx < 1 || idx > m)
        parse_fail(lineno, "index " + std::to_string(idx) + " out of range for m=" + std::to_string(m));
      if (idx == i) parse_fail(lineno, "receiver " + std::to_string(i) + " lists itself");
      if (set_contains(side[i - 1], idx))
        parse_fail(lineno, "duplicate index " + std::to_string(idx));
      side[i - 1].push_back(idx);
      std::sort(side[i - 1].begin(), side[i - 1].end());
    }
  }
  // Only comments or blank lines may follow.
  while (next_data_line(in, line, lineno)) {
    if (!line.empty() && line.find_first_not_of(" \t") != std::string::npos)
      parse_fail(lineno, "unexpected content after the last side information line");
  }
  return Instance(m, std::move(side));
}

Instance parse_instance(const std::string& text) {
  std::istringstream in(text);
  return parse_instance(in);
}

namespace {

const std::map<std::string, std::vector<IndexSet>>& named_table() {
  static const std::map<std::string, std::vector<IndexSet>> table = {
      {"I1", {{}, {3, 4}, {2, 4}, {2, 3}}},
      {"I2", {{2, 5, 6}, {1, 3, 5}, {1, 2, 4}, {1, 2, 3}, {2, 4}, {3}}},
      {"I3", {{3, 5, 6}, {1, 4, 5, 6}, {2, 4, 6}, {1, 2, 3, 5}, {1, 2, 3, 4}, {1, 2, 4, 5}}},
      {"I4", {{2, 5}, {1, 4}, {2}, {5}, {1, 3}}},
      {"I5", {{2, 3, 5}, {1, 3, 5}, {2, 4, 5}, {2, 3, 5}, {1, 4}}},
      {"I8", {{2, 5}, {3, 4}, {2, 4}, {2, 3}, {1, 4}}},
      {"I9", {{2, 5}, {1, 3}, {2, 4}, {3, 5}, {1, 4}}},
      {"I10", {{4, 5}, {1, 6}, {1, 2, 4, 5, 6}, {1, 2, 3}, {2, 3}, {3, 4}}},
  };
  return table;
}

}  // namespace

Instance named_instance(const std::string& name) {
  if (name == "I6" || name == "I7")
    throw Error("named_instance: " + name + " is a parameterized family; use gen_class_" +
                (name == "I6" ? std::string("i6") : std::string("i7")) + "(l)");
  auto it = named_table().find(name);
  if (it == named_table().end()) throw Error("named_instance: unknown name '" + name + "' (want I1..I10)");
  return Instance(static_cast<int>(it->second.size()), it->second);
}

const std::vector<std::string>& named_instance_ids() {
  static const std::vector<std::string> ids = {"I1", "I2", "I3", "I4", "I5", "I8", "I9", "I10"};
  return ids;
}

Instance gen_class_i6(int l) {
  if (l < 1) throw Error("gen_class_i6: l must be >= 1");
  int m = 4 * l + 1;
  std::vector<IndexSet> side(m);
  for (int i = 1; i <= 2 * l; ++i) {
    // Odd receivers know every other pair's even message plus the hub's.
    IndexSet& odd = side[2 * i - 1 - 1];
    for (int j = 1; j <= 2 * l; ++j)
      if (j != i) odd.push_back(2 * j);
    odd.push_back(m);
    // Even receivers know exactly their pair's odd message.
    side[2 * i - 1] = {2 * i - 1};
  }
  for (int i = 1; i <= 2 * l; ++i) side[m - 1].push_back(2 * i - 1);  // hub knows the odds
  return Instance(m, std::move(side));
}

Instance gen_class_i7(int l) {
  if (l < 1) throw Error("gen_class_i7: l must be >= 1");
  int m = 5 * l + 3;
  // Three layers: L1 = [1, 2l+1], L2 = [2l+2, 4l+2], L3 = [4l+3, 5l+3].
  IndexSet l1, l2, l3, odd_l1, even_l1, odd_l2, even_l2;
  for (int i = 1; i <= 2 * l + 1; ++i) {
    l1.push_back(i);
    (i % 2 ? odd_l1 : even_l1).push_back(i);
  }
  for (int i = 2 * l + 2; i <= 4 * l + 2; ++i) {
    l2.push_back(i);
    (i % 2 ? odd_l2 : even_l2).push_back(i);
  }
  for (int i = 4 * l + 3; i <= m; ++i) l3.push_back(i);

  std::vector<IndexSet> side(m);
  for (int i : odd_l1)
    side[i - 1] = set_union(set_union(even_l1, set_difference(l2, {i + 2 * l + 1})), l3);
  for (int i : even_l1)
    side[i - 1] = set_union(set_union(odd_l2, set_difference(l1, {i})), l3);
  for (int i : even_l2)
    side[i - 1] = set_union(set_union(odd_l2, set_difference(l1, {i - (2 * l + 1)})), l3);
  for (int i : odd_l2)
    side[i - 1] = set_union(set_union(even_l1, set_difference(l2, {i})), l3);
  // Layer-3 receiver 4l+2+j pairs with the odd message 2j-1 and the even
  // message 2l+2j, forming two 2-cycles with their owners.
  for (int j = 1; j <= l + 1; ++j) side[4 * l + 2 + j - 1] = {2 * j - 1, 2 * l + 2 * j};
  return Instance(m, std::move(side));
}

int mais_bound(const Instance& inst, int exhaustive_limit) {
  int m = inst.m();
  if (m > exhaustive_limit)
    throw CapExceeded("mais_bound: exhaustive limit " + std::to_string(exhaustive_limit) +
                      " exceeded (m=" + std::to_string(m) + "); raise the limit explicitly");
  std::vector<uint64_t> adj(m + 1, 0);  // adj[i] = out-neighbors of i (arc i -> j iff j in A_i)
  for (int i = 1; i <= m; ++i) adj[i] = to_mask(inst.A(i));

  uint64_t full = (m == 64) ? ~uint64_t{0} : ((uint64_t{1} << m) - 1);
  std::vector<bool> cyclic(static_cast<size_t>(full) + 1, false);
  int best = 0;
  for (uint64_t s = 1; s <= full; ++s) {
    // Supersets of a cyclic set are cyclic; check one-element-removed subsets first.
    bool pruned = false;
    for (uint64_t bits = s; bits; bits &= bits - 1) {
      uint64_t sub = s & ~(bits & (~bits + 1));
      if (cyclic[sub]) {
        pruned = true;
        break;
      }
    }
    if (pruned) {
      cyclic[s] = true;
      continue;
    }
    // Peel sinks (vertices with no out-arc inside the set); a digraph is
    // acyclic iff peeling empties it.
    uint64_t remaining = s;
    bool progress = true;
    while (remaining && progress) {
      progress = false;
      for (uint64_t bits = remaining; bits; bits &= bits - 1) {
        int v = __builtin_ctzll(bits) + 1;
        if ((adj[v] & remaining) == 0) {
          remaining &= ~(uint64_t{1} << (v - 1));
          progress = true;
        }
      }
    }
    if (remaining) {
      cyclic[s] = true;
    } else {
      best = std::max(best, __builtin_popcountll(s));
    }
  }
  return best;
}

Subinstance::Subinstance(const Instance& parent, IndexSet members)
    : parent_(&parent), members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  if (members_.empty()) throw Error("subinstance: member set must be nonempty");
  for (size_t j = 0; j < members_.size(); ++j) {
    if (members_[j] < 1 || members_[j] > parent.m())
      throw Error("subinstance: member " + std::to_string(members_[j]) + " out of range");
    if (j > 0 && members_[j] == members_[j - 1])
      throw Error("subinstance: duplicate member " + std::to_string(members_[j]));
  }
}

IndexSet Subinstance::local_side_info(int i) const {
  if (!set_contains(members_, i))
    throw Error("subinstance: receiver " + std::to_string(i) + " is not a member");
  return set_intersect(parent_->A(i), members_);
}

Instance Subinstance::induced() const {
  std::vector<int> local_id(parent_->m() + 1, 0);
  for (size_t j = 0; j < members_.size(); ++j) local_id[members_[j]] = static_cast<int>(j) + 1;
  std::vector<IndexSet> side(members_.size());
  for (size_t j = 0; j < members_.size(); ++j) {
    for (int a : local_side_info(members_[j])) side[j].push_back(local_id[a]);
  }
  return Instance(static_cast<int>(members_.size()), std::move(side));
}

void Partition::validate(int m) const {
  uint64_t seen = 0;
  for (const IndexSet& block : blocks) {
    if (block.empty()) throw Error("partition: empty block");
    for (int x : block) {
      if (x < 1 || x > m) throw Error("partition: element " + std::to_string(x) + " out of range");
      uint64_t bit = uint64_t{1} << (x - 1);
      if (seen & bit) throw Error("partition: element " + std::to_string(x) + " appears twice");
      seen |= bit;
    }
  }
  uint64_t full = (m == 64) ? ~uint64_t{0} : ((uint64_t{1} << m) - 1);
  if (seen != full) throw Error("partition: blocks do not cover every message");
}

std::string Partition::format() const {
  std::vector<IndexSet> sorted = blocks;
  for (IndexSet& b : sorted) std::sort(b.begin(), b.end());
  std::sort(sorted.begin(), sorted.end());
  std::string out;
  for (size_t j = 0; j < sorted.size(); ++j) {
    if (j) out += '|';
    out += format_set(sorted[j]);
  }
  return out;
}

}  // namespace ic
