#include "ic/matching.hpp"

#include <doctest.h>

#include <random>

#include "ic/error.hpp"
#include "ic/gf.hpp"

using namespace ic;

namespace {

// 6x6 pattern with a hand-checked maximum matching of size 5.
BinaryMatrix six_by_six() {
  return BinaryMatrix::from_support_rows(6, {
                                                {2, 4},
                                                {1, 2, 3, 4, 5, 6},
                                                {2},
                                                {2, 4},
                                                {1, 5},
                                                {3, 4, 5, 6},
                                            });
}

BinaryMatrix random_pattern(std::mt19937_64& rng, int max_r, int max_m) {
  std::uniform_int_distribution<int> rdist(1, max_r), mdist(1, max_m);
  int r = rdist(rng), m = mdist(rng);
  BinaryMatrix g(r, m);
  std::uniform_int_distribution<int> coin(0, 1);
  for (int k = 1; k <= r; ++k)
    for (int i = 1; i <= m; ++i)
      if (coin(rng)) g.set(k, i);
  return g;
}

}  // namespace

TEST_CASE("mcm on the 6x6 fixture is 5") {
  CHECK(mcm(six_by_six()) == 5);
  CHECK(mcm_bruteforce(six_by_six()) == 5);
}

TEST_CASE("mcm on identity and zero patterns") {
  BinaryMatrix id(4, 4);
  for (int k = 1; k <= 4; ++k) id.set(k, k);
  CHECK(mcm(id) == 4);
  CHECK(mcm_bruteforce(id) == 4);
  CHECK(mcm(BinaryMatrix(3, 5)) == 0);
  CHECK(mcm(BinaryMatrix(0, 0)) == 0);
}

TEST_CASE("mcm equals brute force on 500 random patterns") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 500; ++trial) {
    BinaryMatrix g = random_pattern(rng, 7, 7);
    CHECK(mcm(g) == mcm_bruteforce(g));
  }
}

TEST_CASE("mcm monotonicity and bounds") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 200; ++trial) {
    BinaryMatrix g = random_pattern(rng, 6, 6);
    int base = mcm(g);
    CHECK(base <= std::min(g.rows(), g.cols()));

    // Adding a support position never decreases mcm.
    std::uniform_int_distribution<int> rk(1, g.rows()), ci(1, g.cols());
    BinaryMatrix plus = g;
    plus.set(rk(rng), ci(rng));
    CHECK(mcm(plus) >= base);

    // Deleting a row or column drops mcm by at most 1.
    if (g.rows() > 1) {
      IndexSet rows = range_set(g.rows());
      rows.erase(rows.begin() + (rk(rng) - 1));
      int sub = mcm_submatrix(g, rows, range_set(g.cols()));
      CHECK(sub >= base - 1);
      CHECK(sub <= base);
    }
    if (g.cols() > 1) {
      IndexSet cols = range_set(g.cols());
      cols.erase(cols.begin() + (ci(rng) - 1));
      int sub = mcm_submatrix(g, range_set(g.rows()), cols);
      CHECK(sub >= base - 1);
      CHECK(sub <= base);
    }
  }
}

TEST_CASE("mcm is invariant under row and column permutation") {
  std::mt19937_64 rng(44);
  for (int trial = 0; trial < 100; ++trial) {
    BinaryMatrix g = random_pattern(rng, 6, 6);
    IndexSet rows = range_set(g.rows()), cols = range_set(g.cols());
    std::shuffle(rows.begin(), rows.end(), rng);
    std::shuffle(cols.begin(), cols.end(), rng);
    CHECK(mcm(g.submatrix(rows, cols)) == mcm(g));
  }
}

TEST_CASE("submatrix mcm on hand-matched patterns") {
  // 3x5 support; columns {1,3,4} admit a perfect 3-matching, hand-enumerated.
  BinaryMatrix g3 = BinaryMatrix::from_support_rows(5, {{2, 3}, {4, 5}, {1, 2, 5}});
  CHECK(mcm_submatrix(g3, {1, 2, 3}, {1, 3, 4}) == 3);
  CHECK(mcm_submatrix(g3, {1, 2, 3}, {}) == 0);

  // 2x5 support; the {1,3} pair matches fully, the {1} column alone gives 1.
  BinaryMatrix g2 = BinaryMatrix::from_support_rows(5, {{1, 4, 5}, {1, 2, 3, 5}});
  CHECK(mcm_submatrix(g2, {1, 2}, {1, 3}) == 2);
  CHECK(mcm_submatrix(g2, {1, 2}, {1}) == 1);
}

TEST_CASE("mcm_bruteforce rejects oversized patterns") {
  CHECK_THROWS_AS(mcm_bruteforce(BinaryMatrix(9, 3)), CapExceeded);
  CHECK_THROWS_AS(mcm_bruteforce(BinaryMatrix(3, 9)), CapExceeded);
}

TEST_CASE("random fills over a large prime reach rank equal to mcm") {
  // A uniformly random fill of the support should achieve the matching bound
  // except with probability O(m / p); with p = 65537 a failure in this suite
  // is effectively impossible.
  std::mt19937_64 rng(45);
  const uint64_t p = 65537;
  for (int pattern_trial = 0; pattern_trial < 20; ++pattern_trial) {
    BinaryMatrix g = random_pattern(rng, 6, 6);
    int target = mcm(g);
    std::uniform_int_distribution<uint64_t> val(1, p - 1);
    for (int fill = 0; fill < 100; ++fill) {
      FieldMatrix h(g.rows(), g.cols(), p);
      for (auto [k, i] : g.support()) h.set(k, i, val(rng));
      CHECK(rank(h) == target);
    }
  }
}

TEST_CASE("binary matrix support accessors agree") {
  BinaryMatrix g = six_by_six();
  CHECK(g.row_support(3) == IndexSet{2});
  CHECK(g.row_support(6) == IndexSet{3, 4, 5, 6});
  CHECK(g.row_mask(3) == 0b10);
  auto sup = g.support();
  CHECK(sup.size() == 17);
  CHECK(sup.front() == std::pair<int, int>{1, 2});
  CHECK(sup.back() == std::pair<int, int>{6, 6});
  CHECK(BinaryMatrix::from_support_rows(6, {g.row_support(1), g.row_support(2), g.row_support(3),
                                            g.row_support(4), g.row_support(5), g.row_support(6)}) == g);
}
