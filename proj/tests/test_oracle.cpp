#include <gtest/gtest.h>

#include <random>

#include "diffchain/diff_chain.hpp"
#include "diffchain/oracle.hpp"
#include "fixtures.hpp"

using namespace diffchain;
using namespace fixtures;

TEST(LangEq, Examples) {
  EXPECT_TRUE(oracle::lang_eq_upto(ab_star(), ab_star(), 6).equal);
  auto r = oracle::lang_eq_upto(a_plus(), b_plus(), 1);
  EXPECT_FALSE(r.equal);
  EXPECT_EQ(r.counterexample, word("a"));
}

TEST(LangEq, IgnoresEmptyWord) { EXPECT_TRUE(oracle::lang_eq_upto(a_star(), a_plus(), 5).equal); }

TEST(BruteClosure, Examples) {
  EXPECT_TRUE(oracle::brute_pi1_closure_member(a_plus(), 1, word("aa")));
  EXPECT_FALSE(oracle::brute_pi1_closure_member(contains_a(), 1, word("b")));
  EXPECT_TRUE(oracle::brute_pi1_closure_member(contains_a(), 1, word("bb")));
  EXPECT_FALSE(oracle::brute_pi1_closure_member(a_plus_or_b_plus(), 2, word("ab")));
  EXPECT_TRUE(oracle::brute_pi1_closure_member(a_plus_or_b_plus(), 1, word("ab")));
  EXPECT_THROW(oracle::brute_pi1_closure_member(a_plus(), 1, Word{}), Error);
}

TEST(BruteClosure, Extensive) {
  std::mt19937_64 rng(2);
  for (int i = 0; i < 10; ++i) {
    auto d = oracle::random_dfa(rng, ab(), 4);
    oracle::WordUniverse{ab(), 5}.for_each([&](const Word& w) {
      if (!d.accepts(w))
        return;
      for (std::size_t k = 1; k <= 2; ++k)
        ASSERT_TRUE(oracle::brute_pi1_closure_member(d, k, w));
    });
  }
}

TEST(Attainable, RespectsLength) {
  // Nothing of length 3 in {ab}
  EXPECT_FALSE(oracle::attainable(single_ab(), word("aba"), {false, false, false}));
  EXPECT_TRUE(oracle::attainable(single_ab(), word("bb"), {false, true}));
  EXPECT_FALSE(oracle::attainable(single_ab(), word("bb"), {true, false}));
}

TEST(BruteDegree, MatchesSweep) {
  auto c = FinPoset::chain(3);
  auto v = ElemSet::of({0, 2});
  for (std::size_t x = 0; x < 3; ++x)
    EXPECT_EQ(oracle::brute_degree(c, v, x), degree(c, v, x));
}

TEST(BruteChains, UpsetTarget) {
  auto c = FinPoset::chain(3);
  auto v = ElemSet::of({1, 2});
  auto chains = oracle::brute_all_chains(c, v, 4);
  EXPECT_FALSE(chains.empty());
  for (const auto& g : chains) {
    EXPECT_TRUE(v.subset_of(g.at(1)));
    EXPECT_TRUE((g.at(1) - g.at(2)).subset_of(v));
  }
}

TEST(BruteChains, AntichainSingleton) {
  auto a = FinPoset::antichain(2);
  auto v = ElemSet::of({0});
  auto chains = oracle::brute_all_chains(a, v, 3);
  bool saw_single = false, saw_padded = false;
  for (const auto& g : chains) {
    EXPECT_TRUE(v.subset_of(g.at(1)));
    saw_single = saw_single || g.sets == std::vector<ElemSet>{v};
    saw_padded = saw_padded || g.sets == std::vector<ElemSet>{v, ElemSet{}};
  }
  EXPECT_TRUE(saw_single);
  EXPECT_TRUE(saw_padded);
}

TEST(Enumeration, KnownCounts) {
  // Unlabeled posets on n points: 1, 1, 2, 5, 16, 63, 318.
  const std::size_t expect[] = {1, 1, 2, 5, 16, 63};
  for (std::size_t n = 0; n <= 5; ++n)
    EXPECT_EQ(oracle::posets_up_to_iso(n).size(), expect[n]);
}

TEST(Enumeration, SixElementsCap) {
  EXPECT_THROW(oracle::naturally_labeled_posets(7), CapacityError);
  EXPECT_THROW(oracle::brute_all_chains(FinPoset::antichain(7), ElemSet{}, 2), CapacityError);
}
