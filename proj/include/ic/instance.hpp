#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "ic/sets.hpp"

namespace ic {

// An index coding problem: m messages, one receiver per message, receiver i
// wants message i and already knows the messages in A_i. Receivers, messages,
// and every index in the public API are 1-based. Instances are immutable
// after construction and safe to share across threads.
class Instance {
 public:
  // side_info[i-1] = A_i; entries may arrive unsorted and are normalized.
  // Throws Error on i in A_i, out-of-range or duplicate indices, or m < 1.
  Instance(int m, std::vector<IndexSet> side_info);

  int m() const { return m_; }
  const IndexSet& A(int i) const;
  // Interfering set: messages receiver i neither wants nor knows.
  IndexSet B(int i) const;
  int min_side_info_size() const;

  std::string to_ic() const;
  nlohmann::json to_json() const;
  static Instance from_json(const nlohmann::json& j);

  bool operator==(const Instance& o) const = default;

 private:
  int m_;
  std::vector<IndexSet> side_info_;
};

// Parses the .ic text format: line 1 is m, lines 2..m+1 are the side
// information sets as space-separated 1-based indices (an empty line is an
// empty set). Lines starting with '#' are comments and do not count.
// Errors name the offending physical line.
Instance parse_instance(std::istream& in);
Instance parse_instance(const std::string& text);

// The bundled example instances I1..I10. I6 and I7 are parameterized
// families, not single instances; asking for them here is an error that
// points at the generators below.
Instance named_instance(const std::string& name);
const std::vector<std::string>& named_instance_ids();

// Family generators. Both take l >= 1 and resolve to m = 4l+1 (i6) or
// m = 5l+3 (i7) receivers with layered side information; i6(1) is the
// instance I4 up to receiver relabeling.
Instance gen_class_i6(int l);
Instance gen_class_i7(int l);

// Size of the largest vertex-induced acyclic subgraph of the side
// information digraph (arc i -> j iff j in A_i). Exhaustive subset search;
// subsets containing a known cyclic subset are pruned without a graph test.
// Throws CapExceeded when m exceeds the limit, never approximates.
int mais_bound(const Instance& inst, int exhaustive_limit = 16);

// A restriction of an instance to a member set M. Side information is
// induced on demand (A_i intersect M), never stored, so it cannot drift from
// the parent. The parent must outlive the subinstance.
class Subinstance {
 public:
  Subinstance(const Instance& parent, IndexSet members);

  const Instance& parent() const { return *parent_; }
  const IndexSet& members() const { return members_; }
  IndexSet local_side_info(int i) const;  // A_i intersect members; i must be a member

  // Standalone copy with members relabeled 1..|M| in ascending order.
  Instance induced() const;

 private:
  const Instance* parent_;
  IndexSet members_;
};

// Disjoint blocks covering [m] exactly.
struct Partition {
  std::vector<IndexSet> blocks;

  // Throws Error unless blocks are nonempty, pairwise disjoint, and union to [m].
  void validate(int m) const;
  std::string format() const;  // "{1,5}|{2,3,4}" with blocks by ascending minimum
};

}  // namespace ic
