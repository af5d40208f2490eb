#include "ic/gf.hpp"

#include <doctest.h>

#include <random>
#include <sstream>

#include "ic/error.hpp"

using namespace ic;

TEST_CASE("field axioms hold for random triples") {
  std::mt19937_64 rng(20260823);
  for (uint64_t p : {2ull, 3ull, 5ull, 11ull, 13ull}) {
    std::uniform_int_distribution<uint64_t> dist(0, p - 1);
    for (int trial = 0; trial < 200; ++trial) {
      FpElem a(dist(rng), p), b(dist(rng), p), c(dist(rng), p);
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a + b == b + a);
      CHECK(a * b == b * a);
      CHECK(a + (-a) == FpElem(0, p));
      CHECK(a - b == a + (-b));
      if (!b.is_zero()) {
        CHECK(b * b.inv() == FpElem(1, p));
        CHECK((a / b) * b == a);
      }
    }
  }
}

TEST_CASE("rref on identity is identity") {
  FieldMatrix id = FieldMatrix::from_rows(5, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  RrefResult rr = rref(id);
  CHECK(rr.mat == id);
  CHECK(rr.pivots == IndexSet{1, 2, 3});
}

TEST_CASE("rref on zero matrix has no pivots") {
  FieldMatrix z(3, 4, 7);
  RrefResult rr = rref(z);
  CHECK(rr.mat == z);
  CHECK(rr.pivots.empty());
}

TEST_CASE("rank of a hand-checked 2x6 column pair") {
  // Two-row matrix over GF(5); columns 1 and 4 are visibly independent.
  FieldMatrix h2 = FieldMatrix::from_rows(5, {{1, 0, 1, 1, 0, 0}, {0, 1, 0, 1, 1, 1}});
  CHECK(rank(h2.columns({1, 4})) == 2);
  CHECK(rank(h2) == 2);
}

TEST_CASE("rank of a known 3x5 encoding matrix is 3") {
  FieldMatrix h = FieldMatrix::from_rows(11, {{0, 1, 0, 0, 0}, {0, 1, 3, 1, 2}, {5, 0, 4, 3, 2}});
  CHECK(rank(h) == 3);
}

TEST_CASE("single nonzero column has rank 1") {
  FieldMatrix c(3, 1, 3);
  c.set(2, 1, 2);
  CHECK(rank(c) == 1);
}

TEST_CASE("rank 2 survives column restriction in a 2x5 code") {
  FieldMatrix h = FieldMatrix::from_rows(3, {{1, 0, 0, 1, 1}, {1, 1, 1, 0, 2}});
  CHECK(rank(h.columns({1, 5})) == 2);
}

TEST_CASE("rref is idempotent and rank matches transpose on random matrices") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    uint64_t p = (trial % 2) ? 5 : 13;
    std::uniform_int_distribution<int> dim(1, 6);
    int r = dim(rng), m = dim(rng);
    FieldMatrix a(r, m, p);
    std::uniform_int_distribution<uint64_t> val(0, p - 1);
    for (int k = 1; k <= r; ++k)
      for (int i = 1; i <= m; ++i) a.set(k, i, val(rng));
    RrefResult once = rref(a);
    RrefResult twice = rref(once.mat);
    CHECK(once.mat == twice.mat);
    CHECK(once.pivots == twice.pivots);
    CHECK(rank(a) == rank(a.transpose()));
    // Row/column permutations preserve rank.
    FieldMatrix perm = a.submatrix(IndexSet{}, IndexSet{});
    IndexSet rows_rev, cols_rev;
    for (int k = r; k >= 1; --k) rows_rev.push_back(k);
    for (int i = m; i >= 1; --i) cols_rev.push_back(i);
    CHECK(rank(a.submatrix(rows_rev, cols_rev)) == rank(a));
  }
}

TEST_CASE("solve_dependency finds the unique combination") {
  FieldMatrix h2 = FieldMatrix::from_rows(5, {{1, 0, 1, 1, 0, 0}, {0, 1, 0, 1, 1, 1}});

  SUBCASE("single-column dependency, equal columns") {
    auto f = solve_dependency(h2.columns({2}), h2.columns({6}));
    REQUIRE(f.has_value());
    REQUIRE(f->size() == 1);
    CHECK((*f)[0] == FpElem(1, 5));
  }

  SUBCASE("two-column dependency") {
    auto f = solve_dependency(h2.columns({1, 4}), h2.columns({6}));
    REQUIRE(f.has_value());
    REQUIRE(f->size() == 2);
    CHECK((*f)[0] == FpElem(4, 5));  // -1 mod 5
    CHECK((*f)[1] == FpElem(1, 5));
  }

  SUBCASE("independent target") {
    FieldMatrix a = FieldMatrix::from_rows(5, {{1}, {0}});
    FieldMatrix b = FieldMatrix::from_rows(5, {{0}, {1}});
    CHECK(!solve_dependency(a, b).has_value());
  }

  SUBCASE("dependent basis columns violate the contract") {
    FieldMatrix dep = FieldMatrix::from_rows(5, {{1, 2}, {2, 4}});
    FieldMatrix t = FieldMatrix::from_rows(5, {{3}, {6}});
    CHECK_THROWS_AS(solve_dependency(dep, t), Error);
  }
}

TEST_CASE("next_prime_at_least") {
  CHECK(next_prime_at_least(10) == 11);
  CHECK(next_prime_at_least(2) == 2);
  CHECK(next_prime_at_least(3) == 3);
  CHECK(next_prime_at_least(4) == 5);
  CHECK(next_prime_at_least(20) == 23);
  CHECK(next_prime_at_least(56) == 59);
  CHECK(next_prime_at_least(1000000) == 1000003);
}

TEST_CASE("is_prime on edge cases") {
  CHECK(!is_prime(0));
  CHECK(!is_prime(1));
  CHECK(is_prime(2));
  CHECK(is_prime(65537));
  CHECK(!is_prime(65536));
  CHECK(is_prime(2147483647));  // 2^31 - 1
}

TEST_CASE("matrix text format round-trips") {
  FieldMatrix h = FieldMatrix::from_rows(11, {{0, 1, 0, 0, 0}, {0, 1, 3, 1, 2}, {5, 0, 4, 3, 2}});
  std::string text = h.to_text();
  CHECK(text == "q=11 r=3 m=5\n0 1 0 0 0\n0 1 3 1 2\n5 0 4 3 2\n");
  CHECK(FieldMatrix::parse_text(text) == h);
}

TEST_CASE("matrix parse rejects malformed input") {
  CHECK_THROWS_AS(FieldMatrix::parse_text("q=4 r=1 m=1\n0\n"), Error);       // q not prime
  CHECK_THROWS_AS(FieldMatrix::parse_text("bogus\n"), Error);                // bad header
  CHECK_THROWS_AS(FieldMatrix::parse_text("q=5 r=2 m=2\n1 2\n"), Error);     // missing row
  CHECK_THROWS_AS(FieldMatrix::parse_text("q=5 r=1 m=2\n1\n"), Error);       // short row
  CHECK_THROWS_AS(FieldMatrix::parse_text("q=5 r=1 m=2\n1 2 3\n"), Error);   // long row
  CHECK_THROWS_AS(FieldMatrix::parse_text("q=5 r=1 m=2\n1 7\n"), Error);     // entry >= q
}

TEST_CASE("submatrix selections preserve the modulus") {
  FieldMatrix h = FieldMatrix::from_rows(7, {{1, 2, 3}, {4, 5, 6}});
  FieldMatrix sub = h.submatrix({2}, {1, 3});
  CHECK(sub.modulus() == 7);
  CHECK(sub.rows() == 1);
  CHECK(sub.cols() == 2);
  CHECK(sub.get(1, 1) == 4);
  CHECK(sub.get(1, 2) == 6);
  CHECK(h.row_prefix(1) == h.submatrix({1}, {1, 2, 3}));
  CHECK(h.row_prefix(0).rows() == 0);
}
