#include "ic/sets.hpp"

#include <algorithm>
#include <cassert>
#include <iterator>

namespace ic {

IndexSet set_union(const IndexSet& a, const IndexSet& b) {
  IndexSet out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

IndexSet set_intersect(const IndexSet& a, const IndexSet& b) {
  IndexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

IndexSet set_difference(const IndexSet& a, const IndexSet& b) {
  IndexSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool set_contains(const IndexSet& a, int x) {
  return std::binary_search(a.begin(), a.end(), x);
}

bool is_subset(const IndexSet& a, const IndexSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

IndexSet range_set(int n) {
  IndexSet out;
  for (int i = 1; i <= n; ++i) out.push_back(i);
  return out;
}

uint64_t to_mask(const IndexSet& a) {
  uint64_t mask = 0;
  for (int x : a) {
    assert(x >= 1 && x <= 64);
    mask |= uint64_t{1} << (x - 1);
  }
  return mask;
}

IndexSet from_mask(uint64_t mask) {
  IndexSet out;
  while (mask) {
    int bit = __builtin_ctzll(mask);
    out.push_back(bit + 1);
    mask &= mask - 1;
  }
  return out;
}

std::string format_set(const IndexSet& a) {
  std::string out = "{";
  for (size_t j = 0; j < a.size(); ++j) {
    if (j) out += ',';
    out += std::to_string(a[j]);
  }
  out += '}';
  return out;
}

bool is_canonical_set(const IndexSet& a) {
  for (size_t j = 1; j < a.size(); ++j)
    if (a[j - 1] >= a[j]) return false;
  return true;
}

}  // namespace ic
