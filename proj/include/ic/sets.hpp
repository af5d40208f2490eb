#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ic {

// Index sets are sorted ascending vectors of 1-based ints throughout the
// public API (receivers, messages, matrix rows/columns alike). The helpers
// here keep that invariant in one place; everything takes and returns
// sorted vectors.
using IndexSet = std::vector<int>;

IndexSet set_union(const IndexSet& a, const IndexSet& b);
IndexSet set_intersect(const IndexSet& a, const IndexSet& b);
IndexSet set_difference(const IndexSet& a, const IndexSet& b);
bool set_contains(const IndexSet& a, int x);
bool is_subset(const IndexSet& a, const IndexSet& b);  // a subset of b

// {1, 2, ..., n}; empty for n <= 0.
IndexSet range_set(int n);

// Bitmask view: element x maps to bit x-1. Elements must lie in [1, 64].
uint64_t to_mask(const IndexSet& a);
IndexSet from_mask(uint64_t mask);

// "{1,4,6}"; "{}" when empty. Used by traces and the CLI.
std::string format_set(const IndexSet& a);

// Validates sortedness + uniqueness (parser entry points use this).
bool is_canonical_set(const IndexSet& a);

}  // namespace ic
