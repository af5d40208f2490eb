#include "ic/schemes.hpp"

#include <doctest.h>

#include <random>
#include <vector>

#include "helpers.hpp"
#include "ic/error.hpp"
#include "ic/instance.hpp"
#include "ic/lp.hpp"
#include "ic/rational.hpp"
#include "ic/umcd.hpp"

using namespace ic;

namespace {

using test::clique;
using test::no_side_info;

void validate_cover(int m, const Cover& cover) {
  Rational total(0);
  std::vector<Rational> coverage(static_cast<size_t>(m) + 1, Rational(0));
  for (const CoverEntry& e : cover.entries) {
    REQUIRE(!e.members.empty());
    CHECK(e.weight > Rational(0));
    CHECK(e.weight <= Rational(1));
    for (int i : e.members) coverage[static_cast<size_t>(i)] += e.weight;
    total += e.weight * e.local_rate;
  }
  CHECK(total == cover.total_rate);
  for (int i = 1; i <= m; ++i) CHECK(coverage[static_cast<size_t>(i)] >= Rational(1));
}

void validate_icc_cover(const Instance& inst, const IccResult& res) {
  Rational total(0);
  std::vector<Rational> coverage(static_cast<size_t>(inst.m()) + 1, Rational(0));
  for (const IccCoverEntry& e : res.cover) {
    const IccStructure& s = e.structure;
    CHECK(is_valid_inner_set(inst, s.members, s.inner));
    CHECK(s.rate == static_cast<int>(s.members.size()) -
                        static_cast<int>(s.inner.size()) + 1);
    CHECK(e.weight > Rational(0));
    CHECK(e.weight <= Rational(1));
    for (int i : s.members) coverage[static_cast<size_t>(i)] += e.weight;
    total += e.weight * Rational(s.rate);
  }
  CHECK(total == res.rate);
  for (int i = 1; i <= inst.m(); ++i) {
    CHECK(coverage[static_cast<size_t>(i)] >= Rational(1));
  }
}

// The covering LPs stay optimal when coverage is pinned to exactly one; an
// independent cross-check built straight on the LP layer.
Rational mds_cover_equality_optimum(const Instance& inst) {
  const int m = inst.m();
  const int n = (1 << m) - 1;
  LpProblem lp(n);
  std::vector<Rational> obj(static_cast<size_t>(n));
  for (int j = 0; j < n; ++j) {
    uint64_t mask = static_cast<uint64_t>(j) + 1;
    obj[static_cast<size_t>(j)] =
        Rational(mds_rate(Subinstance(inst, from_mask(mask))));
  }
  lp.set_objective(std::move(obj));
  for (int i = 0; i < m; ++i) {
    std::vector<Rational> row(static_cast<size_t>(n), Rational(0));
    for (int j = 0; j < n; ++j) {
      if ((static_cast<uint64_t>(j) + 1) >> i & 1) {
        row[static_cast<size_t>(j)] = Rational(1);
      }
    }
    lp.add_constraint(std::move(row), Relation::Equal, Rational(1));
  }
  for (int j = 1; j <= n; ++j) lp.set_upper_bound(j, Rational(1));
  LpSolution sol = lp_solve(lp);
  REQUIRE(sol.status == LpStatus::Optimal);
  return sol.objective;
}

}  // namespace

TEST_CASE("schemes: mds rate on member sets") {
  Instance i1 = named_instance("I1");
  CHECK(mds_rate(i1) == 4);
  CHECK(mds_rate(Subinstance(i1, range_set(i1.m()))) == mds_rate(i1));
  CHECK(mds_rate(named_instance("I2")) == 5);

  Instance i8 = named_instance("I8");
  CHECK(mds_rate(Subinstance(i8, {2, 3, 4})) == 1);
  CHECK(mds_rate(Subinstance(i8, {1, 5})) == 1);
  CHECK(mds_rate(Subinstance(i8, {3})) == 1);
}

TEST_CASE("schemes: best partition into MDS blocks") {
  auto [r2, p2] = pcc_rate(named_instance("I2"));
  CHECK(r2 == 4);
  p2.validate(6);

  auto [r8, p8] = pcc_rate(named_instance("I8"));
  CHECK(r8 == 2);
  CHECK(p8.format() == "{1,5}|{2,3,4}");

  auto [rd, pd] = pcc_rate(no_side_info(4));
  CHECK(rd == 4);
  CHECK(pd.format() == "{1}|{2}|{3}|{4}");

  auto [rc, pc] = pcc_rate(clique(4));
  CHECK(rc == 1);
  CHECK(pc.format() == "{1,2,3,4}");

  CHECK_THROWS_AS(pcc_rate(no_side_info(16)), CapExceeded);
}

TEST_CASE("schemes: fractional clique-block cover") {
  auto [r2, c2] = fpcc_rate(named_instance("I2"));
  CHECK(r2 == Rational(7, 2));
  validate_cover(6, c2);

  CHECK(fpcc_rate(gen_class_i6(1)).first == Rational(7, 2));
  CHECK(fpcc_rate(gen_class_i6(2)).first == Rational(13, 2));
  CHECK(fpcc_rate(clique(4)).first == Rational(1));

  auto [r9, c9] = fpcc_rate(named_instance("I9"));
  CHECK(r9 == Rational(5, 2));
  validate_cover(5, c9);

  CHECK_THROWS_AS(fpcc_rate(no_side_info(13)), CapExceeded);
}

TEST_CASE("schemes: minimal-block restriction reproduces the optimum") {
  for (const char* name : {"I2", "I8", "I9"}) {
    Instance inst = named_instance(name);
    auto [full, cf] = fpcc_rate(inst);
    auto [restricted, cr] = fpcc_rate_minimal(inst);
    CHECK(full == restricted);
    validate_cover(inst.m(), cr);
  }
  CHECK(fpcc_rate_minimal(gen_class_i6(1)).first == Rational(7, 2));
}

TEST_CASE("schemes: equality-coverage variant matches the inequality LP") {
  for (const char* name : {"I2", "I9", "I4"}) {
    Instance inst = named_instance(name);
    CHECK(mds_cover_equality_optimum(inst) == fpcc_rate(inst).first);
  }
}

TEST_CASE("schemes: recursive scheme pinned rates") {
  CHECK(recursive_rate(named_instance("I4")) == Rational(7, 2));
  CHECK(recursive_rate(named_instance("I2")) == Rational(7, 2));
  CHECK(recursive_rate(named_instance("I5")) == Rational(2));
  CHECK(recursive_rate(named_instance("I10")) == Rational(7, 2));
  CHECK(recursive_rate(gen_class_i6(1)) == Rational(7, 2));
  CHECK(recursive_rate(no_side_info(1)) == Rational(1));
  CHECK(recursive_rate(clique(4)) == Rational(1));
  CHECK_THROWS_AS(recursive_rate(no_side_info(10)), CapExceeded);
}

TEST_CASE("schemes: recursive scheme on the second family member") {
  CHECK(recursive_rate(gen_class_i6(2)) == Rational(13, 2));
}

TEST_CASE("schemes: simple path counting") {
  Instance i9 = named_instance("I9");  // receivers form a bidirected 5-cycle
  CHECK(count_simple_paths(i9, 1, 3, {2}) == 1);
  CHECK(count_simple_paths(i9, 1, 3, {2, 4, 5}) == 2);
  CHECK(count_simple_paths(i9, 1, 3, {}) == 0);
  // Cycles through 1: the two 2-cycles and the two 5-cycle orientations.
  CHECK(count_simple_paths(i9, 1, 1, {2, 3, 4, 5}) == 4);
  CHECK_THROWS_AS(count_simple_paths(i9, 1, 1, {2, 3, 4, 5}, 3), CapExceeded);
  CHECK_THROWS_AS(count_simple_paths(i9, 0, 1, {}), Error);
  CHECK_THROWS_AS(count_simple_paths(i9, 1, 6, {}), Error);
}

TEST_CASE("schemes: inner-set validity") {
  Instance i9 = named_instance("I9");
  CHECK(is_valid_inner_set(i9, {1, 2}, {1, 2}));
  CHECK(is_valid_inner_set(i9, {1, 2}, {}));
  CHECK_FALSE(is_valid_inner_set(i9, range_set(5), {1, 2}));
  CHECK_FALSE(is_valid_inner_set(i9, range_set(5), {1}));
  CHECK_FALSE(is_valid_inner_set(i9, {1, 2, 3}, {1, 3}));
  CHECK_THROWS_AS(is_valid_inner_set(i9, {1, 2}, {3}), Error);

  Instance c3 = clique(3);
  CHECK(is_valid_inner_set(c3, {1, 2, 3}, {1, 2, 3}));

  CHECK(largest_inner_set(i9, {1, 2}) == IndexSet{1, 2});
  CHECK(largest_inner_set(i9, range_set(5)).empty());
  CHECK(largest_inner_set(i9, {1, 2, 3}).empty());
  CHECK(largest_inner_set(c3, {1, 2, 3}) == IndexSet{1, 2, 3});
}

TEST_CASE("schemes: interlinked-cycle cover pinned rates") {
  Instance i2 = named_instance("I2");
  IccResult f2 = icc_rate(i2);
  CHECK(f2.rate == Rational(7, 2));
  validate_icc_cover(i2, f2);
  CHECK(icc_rate_scalar(i2).rate == 4);

  CHECK(icc_rate(named_instance("I5")).rate == Rational(5, 2));
  CHECK(icc_rate(named_instance("I4")).rate == Rational(3));
  CHECK(icc_rate(named_instance("I10")).rate == Rational(7, 2));

  Instance i9 = named_instance("I9");
  IccResult f9 = icc_rate(i9);
  CHECK(f9.rate == Rational(5, 2));
  validate_icc_cover(i9, f9);

  Instance c3 = clique(3);
  CHECK(icc_rate(c3).rate == Rational(1));
  IccScalarResult s3 = icc_rate_scalar(c3);
  CHECK(s3.rate == 1);
  REQUIRE(s3.blocks.size() == 1);
  CHECK(s3.blocks[0].members == range_set(3));
  CHECK(s3.blocks[0].inner == range_set(3));

  CHECK_THROWS_AS(icc_rate(no_side_info(9)), CapExceeded);
  CHECK_THROWS_AS(icc_rate_scalar(no_side_info(9)), CapExceeded);
}

TEST_CASE("schemes: interlinked-cycle cover meets the fractional clique cover "
          "on the second family") {
  Instance i7 = gen_class_i7(1);
  Rational icc = icc_rate(i7).rate;
  CHECK(icc == fpcc_rate(i7).first);
  CHECK(icc >= Rational(3));
}

TEST_CASE("schemes: binary minrank brute force") {
  CHECK(minrank_gf2_bruteforce(named_instance("I3")) == 3);
  CHECK(minrank_gf2_bruteforce(clique(4)) == 1);
  CHECK(minrank_gf2_bruteforce(clique(5)) == 1);
  CHECK(minrank_gf2_bruteforce(no_side_info(3)) == 3);
  CHECK(minrank_gf2_bruteforce(named_instance("I9")) == 3);
  CHECK_THROWS_AS(minrank_gf2_bruteforce(clique(6)), CapExceeded);
}

TEST_CASE("schemes: partitioned update-based scheme") {
  auto [r8, p8] = pumcd_rate(named_instance("I8"));
  CHECK(r8 == 2);
  CHECK(p8.format() == "{1,5}|{2,3,4}");

  auto [r8x, p8x] = pumcd_rate(named_instance("I8"), TieBreak::exhaustive_min());
  CHECK(r8x == 2);
  CHECK(p8x.format() == "{1,5}|{2,3,4}");

  CHECK(pumcd_rate(named_instance("I2")).first == 3);
  CHECK(pumcd_rate(no_side_info(1)).first == 1);
  CHECK_THROWS_AS(pumcd_rate(no_side_info(16)), CapExceeded);
}

TEST_CASE("schemes: fractional update-based cover") {
  auto [r9, c9] = fpumcd_rate(named_instance("I9"));
  CHECK(r9 == Rational(5, 2));
  validate_cover(5, c9);

  CHECK(fpumcd_rate(named_instance("I10")).first == Rational(10, 3));
  CHECK(fpumcd_rate(clique(4)).first == Rational(1));

  // Rates that meet the acyclic-set lower bound exactly.
  for (const char* name : {"I2", "I4", "I5"}) {
    Instance inst = named_instance(name);
    CHECK(fpumcd_rate(inst).first == Rational(mais_bound(inst)));
  }

  CHECK_THROWS_AS(fpumcd_rate(no_side_info(13)), CapExceeded);
}

TEST_CASE("schemes: ordering relations on the named corpus") {
  for (const char* name :
       {"I1", "I2", "I3", "I4", "I5", "I8", "I9", "I10"}) {
    CAPTURE(name);
    Instance inst = named_instance(name);
    int mds = mds_rate(inst);
    int pcc = pcc_rate(inst).first;
    Rational fpcc = fpcc_rate(inst).first;
    Rational rec = recursive_rate(inst);
    Rational icc = icc_rate(inst).rate;
    int icc_scalar = icc_rate_scalar(inst).rate;
    int pumcd = pumcd_rate(inst).first;
    Rational fpumcd = fpumcd_rate(inst).first;
    int umcd = umcd_rate(inst);
    Rational mais = Rational(mais_bound(inst));

    CHECK(rec <= fpcc);
    CHECK(fpcc <= Rational(pcc));
    CHECK(pcc <= mds);
    CHECK(fpumcd <= fpcc);
    CHECK(pumcd <= pcc);
    CHECK(fpumcd <= Rational(pumcd));
    CHECK(pumcd <= umcd);
    CHECK(icc <= Rational(icc_scalar));
    for (const Rational& rate :
         {Rational(mds), Rational(pcc), fpcc, rec, icc, Rational(icc_scalar),
          Rational(pumcd), fpumcd, Rational(umcd)}) {
      CHECK(mais <= rate);
    }
  }
}

TEST_CASE("schemes: ordering relations on random instances") {
  std::mt19937_64 rng(20250823);
  for (int trial = 0; trial < 100; ++trial) {
    CAPTURE(trial);
    Instance inst = test::random_instance(rng, 6);
    const int m = inst.m();
    int mds = mds_rate(inst);
    auto [pcc, pccp] = pcc_rate(inst);
    pccp.validate(m);
    auto [fpcc, fpccc] = fpcc_rate(inst);
    validate_cover(m, fpccc);
    Rational rec = recursive_rate(inst);
    IccResult icc = icc_rate(inst);
    validate_icc_cover(inst, icc);
    int icc_scalar = icc_rate_scalar(inst).rate;
    auto [pumcd, pumcdp] = pumcd_rate(inst);
    pumcdp.validate(m);
    auto [fpumcd, fpumcdc] = fpumcd_rate(inst);
    validate_cover(m, fpumcdc);
    int umcd = umcd_rate(inst);
    Rational mais = Rational(mais_bound(inst));

    CHECK(rec <= fpcc);
    CHECK(fpcc <= Rational(pcc));
    CHECK(pcc <= mds);
    CHECK(fpumcd <= fpcc);
    CHECK(pumcd <= pcc);
    CHECK(fpumcd <= Rational(pumcd));
    CHECK(pumcd <= umcd);
    CHECK(icc.rate <= Rational(icc_scalar));
    CHECK(fpcc_rate_minimal(inst).first == fpcc);
    for (const Rational& rate :
         {Rational(mds), Rational(pcc), fpcc, rec, icc.rate,
          Rational(icc_scalar), Rational(pumcd), fpumcd, Rational(umcd)}) {
      CHECK(mais <= rate);
    }

    long free_entries = 0;
    for (int i = 1; i <= m; ++i) {
      free_entries += static_cast<long>(inst.A(i).size());
    }
    if (free_entries <= 24) {
      int mr = minrank_gf2_bruteforce(inst);
      CHECK(mais <= Rational(mr));
      CHECK(mr <= m);
    }
    if (trial < 15) {
      CHECK(mds_cover_equality_optimum(inst) == fpcc);
    }
  }
}
