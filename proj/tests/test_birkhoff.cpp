#include <gtest/gtest.h>

#include <random>

#include "diffchain/birkhoff.hpp"
#include "diffchain/oracle.hpp"

using namespace diffchain;

namespace {

// Numbered points 0..n-1 are pairwise incomparable; x = n lies below y = n+1.
FinPoset truncation(std::size_t n) { return FinPoset::from_covers(n + 2, {{n, n + 1}}); }

} // namespace

TEST(Upsets, ChainOfThree) {
  auto l = upsets_of(FinPoset::chain(3));
  std::vector<ElemSet> expect{ElemSet{}, ElemSet::of({2}), ElemSet::of({1, 2}), ElemSet::of({0, 1, 2})};
  EXPECT_EQ(l.elements, expect);
}

TEST(Upsets, Counts) {
  EXPECT_EQ(upsets_of(FinPoset::antichain(2)).elements.size(), 4u);
  EXPECT_EQ(upsets_of(FinPoset::chain(2)).elements.size(), 3u);
  EXPECT_EQ(upsets_of(FinPoset::antichain(0)).elements.size(), 1u);
}

TEST(Upsets, MatchPowersetFilter) {
  for (std::size_t n = 0; n <= 5; ++n)
    for (const auto& p : oracle::posets_up_to_iso(n)) {
      auto got = upsets_of(p).elements;
      auto want = oracle::brute_upsets(p);
      std::sort(want.begin(), want.end(), UpsetLattice::order);
      ASSERT_EQ(got, want);
    }
}

TEST(Upsets, MaterializeCap) {
  EXPECT_THROW(upsets_of(FinPoset::antichain(21)), CapacityError);
  EXPECT_THROW(upsets_of(FinPoset::antichain(10), 20, 100), CapacityError);
  EXPECT_EQ(upsets_of(FinPoset::chain(30), 30).elements.size(), 31u);
}

TEST(JoinIrreducibles, RoundTripSmall) {
  EXPECT_TRUE(isomorphic(join_irreducibles(upsets_of(FinPoset::chain(3))), FinPoset::chain(3)));
  EXPECT_TRUE(isomorphic(join_irreducibles(upsets_of(FinPoset::antichain(2))), FinPoset::antichain(2)));
  EXPECT_FALSE(isomorphic(FinPoset::chain(2), FinPoset::antichain(2)));
}

TEST(JoinIrreducibles, RoundTripRandomFive) {
  std::mt19937_64 rng(7);
  const auto all = oracle::naturally_labeled_posets(5);
  for (int i = 0; i < 20; ++i) {
    const auto& p = all[rng() % all.size()];
    auto q = join_irreducibles(upsets_of(p));
    EXPECT_EQ(oracle::canonical_code(p), oracle::canonical_code(q));
  }
}

TEST(Ceiling, Examples) {
  auto c = FinPoset::chain(3);
  EXPECT_EQ(ceiling(c, ElemSet::of({1, 2})), ElemSet::of({1, 2}));
  EXPECT_EQ(ceiling(c, ElemSet::of({0})), ElemSet::of({0, 1, 2}));
  const std::size_t n = 6;
  EXPECT_EQ(ceiling(truncation(n), ElemSet::of({n})), ElemSet::of({n, n + 1}));
}

TEST(CoHeyting, Examples) {
  auto c = FinPoset::chain(3);
  for (ElemSet a : upsets_of(c).elements) {
    EXPECT_EQ(coheyting_minus(c, a, a), ElemSet{});
    EXPECT_EQ(coheyting_minus(c, a, ElemSet{}), a);
  }
  EXPECT_EQ(coheyting_minus(c, ElemSet::of({0, 1, 2}), ElemSet::of({2})), ElemSet::of({0, 1, 2}));
  EXPECT_THROW(coheyting_minus(c, ElemSet::of({0}), ElemSet{}), NotUpsetError);
}

TEST(CoHeyting, AdjunctionOnChainOfThree) {
  auto c = FinPoset::chain(3);
  const auto ups = upsets_of(c).elements;
  for (ElemSet a : ups)
    for (ElemSet b : ups)
      for (ElemSet x : ups)
        EXPECT_EQ(coheyting_minus(c, a, b).subset_of(x), a.subset_of(b | x));
}

TEST(Heyting, IsTheOrderDual) {
  // c <= a -> b  iff  a ^ c <= b
  for (const auto& p : oracle::posets_up_to_iso(4)) {
    const auto ups = upsets_of(p).elements;
    for (ElemSet a : ups)
      for (ElemSet b : ups) {
        ElemSet imp = heyting_implies(p, a, b);
        ASSERT_TRUE(is_upset(p, imp));
        for (ElemSet c : ups)
          ASSERT_EQ(c.subset_of(imp), (a & c).subset_of(b));
      }
  }
}

TEST(PowersetAlgebra, Complement) {
  PowersetAlgebra b{FinPoset::chain(3)};
  EXPECT_EQ(b.complement(ElemSet::of({2})), ElemSet::of({0, 1}));
  EXPECT_TRUE(b.in_lattice(ElemSet::of({1, 2})));
  EXPECT_FALSE(b.in_lattice(ElemSet::of({0, 1})));
}

TEST(Isomorphism, FindsMapping) {
  auto p = FinPoset::from_covers(3, {{2, 0}, {0, 1}});
  auto m = find_isomorphism(p, FinPoset::chain(3));
  ASSERT_TRUE(m);
  EXPECT_EQ(*m, (std::vector<std::size_t>{1, 2, 0}));
}
