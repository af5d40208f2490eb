#pragma once

// Shared test utilities: seeded random generators for patterns and instances.
// Everything here is deterministic given the seed so failures replay.

#include <random>
#include <vector>

#include "ic/instance.hpp"
#include "ic/matching.hpp"

namespace ic::test {

inline BinaryMatrix random_pattern(std::mt19937_64& rng, int max_r, int max_m) {
  std::uniform_int_distribution<int> rdist(1, max_r), mdist(1, max_m);
  int r = rdist(rng), m = mdist(rng);
  BinaryMatrix g(r, m);
  std::uniform_int_distribution<int> coin(0, 1);
  for (int k = 1; k <= r; ++k)
    for (int i = 1; i <= m; ++i)
      if (coin(rng)) g.set(k, i);
  return g;
}

inline Instance random_instance(std::mt19937_64& rng, int max_m, int min_m = 1) {
  std::uniform_int_distribution<int> mdist(min_m, max_m);
  int m = mdist(rng);
  std::uniform_int_distribution<int> coin(0, 1);
  std::vector<IndexSet> side(m);
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= m; ++j)
      if (j != i && coin(rng)) side[i - 1].push_back(j);
  return Instance(m, std::move(side));
}

// Everyone knows everything but their own message.
inline Instance clique(int m) {
  std::vector<IndexSet> side(static_cast<size_t>(m));
  for (int i = 1; i <= m; ++i)
    side[i - 1] = set_difference(range_set(m), {i});
  return Instance(m, std::move(side));
}

inline Instance no_side_info(int m) {
  return Instance(m, std::vector<IndexSet>(static_cast<size_t>(m)));
}

}  // namespace ic::test
