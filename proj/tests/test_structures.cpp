#include <gtest/gtest.h>

#include <bit>

#include "diffchain/structures.hpp"
#include "fixtures.hpp"

using namespace diffchain;
using namespace fixtures;

namespace {

// Count of marks per variable is exactly one.
bool is_structure(const Alphabet& pa, const Word& w) {
  std::vector<int> count(pa.vars().size(), 0);
  for (Letter l : w)
    for (std::size_t j = 0; j < count.size(); ++j)
      if ((pa.mask_of(l) >> j) & 1U)
        ++count[j];
  return std::all_of(count.begin(), count.end(), [](int c) { return c == 1; });
}

// Words over A x 2^x in which every marked letter has base a.
Dfa marked_carry_a(const Alphabet& pa) {
  std::vector<State> delta(2 * pa.size(), 1);
  for (Letter l = 0; l < pa.size(); ++l)
    delta[l] = (pa.mask_of(l) != 0 && pa.base_of(l) != 0) ? 1 : 0;
  return Dfa(pa, 2, 0, std::move(delta), {true, false});
}

} // namespace

TEST(Structures, OneVariableOneLetter) {
  auto a = Alphabet::plain({"a"});
  auto d = structures_dfa(a, VarList::numbered(1));
  EXPECT_EQ(d.states(), 3u);
  // (a,{}) = 0, (a,{x1}) = 1
  EXPECT_TRUE(matches(d, [](const Word& w) { return std::count(w.begin(), w.end(), 1) == 1; }, 7));
}

TEST(Structures, MatchPartitionCondition) {
  for (std::size_t k = 1; k <= 2; ++k) {
    auto d = structures_dfa(ab(), VarList::numbered(k));
    EXPECT_EQ(d.states(), (std::size_t{1} << k) + 1);
    EXPECT_TRUE(matches(d, [&](const Word& w) { return is_structure(d.alphabet(), w); }, 4));
  }
}

TEST(Structures, SharedPosition) {
  auto d = structures_dfa(ab(), VarList::numbered(2));
  const auto& pa = d.alphabet();
  EXPECT_TRUE(d.accepts({pa.letter(1, 0), pa.letter(0, 3)}));
  EXPECT_FALSE(d.accepts({pa.letter(0, 1), pa.letter(0, 3)}));
  EXPECT_FALSE(d.accepts({pa.letter(0, 1)}));
}

TEST(Tensor, Examples) {
  auto x = VarList::numbered(1);
  EXPECT_TRUE(equivalent(tensor(Dfa::all_words(ab()), x), structures_dfa(ab(), x)));
  EXPECT_TRUE(is_empty(tensor(Dfa::empty_language(ab()), x)));
  auto t = tensor(a_plus(), x);
  const auto& pa = t.alphabet();
  EXPECT_TRUE(t.accepts({pa.letter(0, 1)}));
  EXPECT_FALSE(t.accepts({pa.letter(1, 1)}));
  EXPECT_TRUE(t.accepts(structure_word(pa, word("aaa"), {2})));
  EXPECT_FALSE(t.accepts(structure_word(pa, word("aba"), {2})));
}

TEST(Theta, LetterMap) {
  auto x = VarList::numbered(1);
  auto th = theta(x, ab());
  const auto& src = th.source();
  const auto& dst = th.target();
  EXPECT_TRUE(dst.has_eps());
  EXPECT_EQ(th(src.letter(0, 0)), dst.letter(dst.eps_base(), 0));
  EXPECT_EQ(th(src.letter(1, 0)), dst.letter(dst.eps_base(), 0));
  EXPECT_EQ(th(src.letter(0, 1)), dst.letter(0, 1));
  EXPECT_EQ(dst.letter_name(th(src.letter(1, 0))), "(eps,{})");
}

TEST(Theta, IdentifiesAgreeingStructures) {
  auto x = VarList::numbered(1);
  auto th = theta(x, ab());
  const auto& pa = th.source();
  EXPECT_EQ(th.apply(structure_word(pa, word("ab"), {1})), th.apply(structure_word(pa, word("aa"), {1})));
  EXPECT_NE(th.apply(structure_word(pa, word("ab"), {2})), th.apply(structure_word(pa, word("aa"), {2})));
  EXPECT_NE(th.apply(structure_word(pa, word("ab"), {1})), th.apply(structure_word(pa, word("abb"), {1})));
}

TEST(Adjoints, ForallMarkedCarriesA) {
  auto pa = Alphabet::product(ab(), VarList::numbered(1));
  EXPECT_TRUE(equivalent(forall_adjoint(marked_carry_a(pa)), a_plus()));
  // Some position carries a.
  EXPECT_TRUE(equivalent(exists_adjoint(marked_carry_a(pa)), contains_a()));
}

TEST(Adjoints, TrivialCases) {
  auto x = VarList::numbered(1);
  auto all = structures_dfa(ab(), x);
  auto pa = all.alphabet();
  EXPECT_TRUE(equivalent(forall_adjoint(all), all_plus()));
  EXPECT_TRUE(equivalent(forall_adjoint(Dfa::all_words(pa)), all_plus()));
  EXPECT_TRUE(is_empty(forall_adjoint(Dfa::empty_language(pa))));
  EXPECT_TRUE(is_empty(exists_adjoint(Dfa::empty_language(pa))));
}

TEST(Adjoints, ExistsOfTensorIsNonemptyPart) {
  for (const auto& l : {a_plus(), ab_star(), single_ab(), contains_b()})
    for (std::size_t k = 1; k <= 2; ++k) {
      EXPECT_TRUE(equivalent(exists_adjoint(tensor(l, VarList::numbered(k))), nonempty_part(l)));
      EXPECT_TRUE(equivalent(forall_adjoint(tensor(l, VarList::numbered(k))), nonempty_part(l)));
    }
}

TEST(Adjoints, RequireStructureAlphabet) {
  EXPECT_THROW(forall_adjoint(a_plus()), AlphabetMismatch);
  EXPECT_THROW(tensor(structures_dfa(ab(), VarList::numbered(1)), VarList::numbered(1)), AlphabetMismatch);
}

TEST(QuantifierFree, Examples) {
  auto pa = Alphabet::product(ab(), VarList::numbered(1));
  EXPECT_TRUE(is_quantifier_free(marked_carry_a(pa)));
  EXPECT_FALSE(is_quantifier_free(tensor(a_plus(), VarList::numbered(1))));
}

TEST(StructureWord, Encoding) {
  auto pa = Alphabet::product(ab(), VarList::numbered(2));
  auto w = structure_word(pa, word("ab"), {2, 2});
  EXPECT_EQ(w, (Word{pa.letter(0, 0), pa.letter(1, 3)}));
  EXPECT_THROW(structure_word(pa, word("ab"), {3, 1}), RangeError);
  EXPECT_THROW(structure_word(pa, word("ab"), {1}), Error);
}

TEST(VarCap, Enforced) {
  EXPECT_THROW(require_var_cap(4), CapacityError);
  EXPECT_THROW(require_var_cap(0), Error);
  EXPECT_NO_THROW(require_var_cap(4, 4));
}
