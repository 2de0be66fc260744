#pragma once

// Brute-force reference implementations. Nothing in here calls into the
// degree sweep, the canonical chain, the automaton Boolean operations or
// the closure pipeline: only the plain data types and Dfa::run are shared.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "diffchain/alphabet.hpp"
#include "diffchain/dfa.hpp"
#include "diffchain/diff_chain.hpp"
#include "diffchain/errors.hpp"
#include "diffchain/hom.hpp"
#include "diffchain/poset.hpp"

namespace diffchain::oracle {

inline constexpr std::size_t kExhaustiveCap = 6;

/// All words over an alphabet up to a length bound.
struct WordUniverse {
  Alphabet alphabet;
  std::size_t max_len = 1;

  /// Nonempty words only, shortest first.
  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t n = 1; n <= max_len; ++n)
      for_each_word(alphabet.size(), n, f);
  }
};

struct EqResult {
  bool equal = true;
  std::optional<Word> counterexample;
};

/// Compares membership on every nonempty word of length <= n.
inline EqResult lang_eq_upto(const Dfa& a, const Dfa& b, std::size_t n) {
  if (!(a.alphabet() == b.alphabet()))
    throw AlphabetMismatch("operands are over different alphabets");
  EqResult r;
  WordUniverse{a.alphabet(), n}.for_each([&](const Word& w) {
    if (r.equal && a.accepts(w) != b.accepts(w)) {
      r.equal = false;
      r.counterexample = w;
    }
  });
  return r;
}

/// Is there a word of length n in L(d) carrying letter w[p] at every
/// forced position p? Exact: tracks the set of states reachable at each
/// depth under the constraints.
inline bool attainable(const Dfa& d, const Word& w, const std::vector<bool>& forced) {
  std::vector<bool> cur(d.states(), false);
  cur[d.start()] = true;
  for (std::size_t p = 0; p < w.size(); ++p) {
    std::vector<bool> nxt(d.states(), false);
    for (State s = 0; s < d.states(); ++s) {
      if (!cur[s])
        continue;
      if (forced[p]) {
        nxt[d.next(s, w[p])] = true;
      } else {
        for (Letter l = 0; l < d.alphabet().size(); ++l)
          nxt[d.next(s, l)] = true;
      }
    }
    cur = std::move(nxt);
  }
  for (State s = 0; s < d.states(); ++s)
    if (cur[s] && d.accepting(s))
      return true;
  return false;
}

/// w is in [L]_k iff for every k-tuple of positions i there is v in L with
/// |v| = |w| and v(i) = w(i).
inline bool brute_pi1_closure_member(const Dfa& lang, std::size_t k, const Word& w) {
  if (w.empty())
    throw Error("closure membership is defined on nonempty words");
  const std::size_t n = w.size();
  std::vector<std::size_t> tuple(k, 0);
  while (true) {
    std::vector<bool> forced(n, false);
    for (auto i : tuple)
      forced[i] = true;
    if (!attainable(lang, w, forced))
      return false;
    std::size_t j = k;
    while (j > 0 && tuple[j - 1] + 1 == n) {
      tuple[j - 1] = 0;
      --j;
    }
    if (j == 0)
      return true;
    ++tuple[j - 1];
  }
}

/// Degree by literal enumeration of every chain of elements below x.
inline std::size_t brute_degree(const FinPoset& p, ElemSet v, std::size_t x) {
  if (p.size() > 16)
    throw CapacityError("brute_degree enumerates subsets; poset too large");
  std::vector<std::size_t> below;
  for (std::size_t y = 0; y < p.size(); ++y)
    if (y != x && p.leq(y, x))
      below.push_back(y);
  std::size_t best = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << below.size()); ++mask) {
    std::vector<std::size_t> seq;
    for (std::size_t i = 0; i < below.size(); ++i)
      if ((mask >> i) & 1U)
        seq.push_back(below[i]);
    seq.push_back(x);
    // Order the candidate sequence; it must be a strict chain.
    std::sort(seq.begin(), seq.end(), [&](std::size_t a, std::size_t b) { return p.down(a).size() < p.down(b).size(); });
    bool ok = true;
    for (std::size_t i = 0; i + 1 < seq.size() && ok; ++i)
      ok = p.leq(seq[i], seq[i + 1]) && seq[i] != seq[i + 1];
    for (std::size_t i = 0; i < seq.size() && ok; ++i)
      ok = v.contains(seq[i]) == (i % 2 == 0);
    if (ok)
      best = std::max(best, seq.size());
  }
  return best;
}

/// Every subset closed upward, by filtering the powerset.
inline std::vector<ElemSet> brute_upsets(const FinPoset& p) {
  if (p.size() > 20)
    throw CapacityError("brute_upsets enumerates the powerset; poset too large");
  std::vector<ElemSet> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << p.size()); ++mask) {
    ElemSet s(mask);
    bool ok = true;
    for (std::size_t x = 0; x < p.size() && ok; ++x)
      for (std::size_t y = 0; y < p.size() && ok; ++y)
        if (s.contains(x) && p.leq(x, y) && !s.contains(y))
          ok = false;
    if (ok)
      out.push_back(s);
  }
  return out;
}

inline ElemSet fold_nested(const std::vector<ElemSet>& sets) {
  ElemSet acc;
  for (auto it = sets.rbegin(); it != sets.rend(); ++it)
    acc = *it - acc;
  return acc;
}

/// Every decreasing chain of upsets of length 1..max_len whose nested
/// difference is V.
inline std::vector<DiffChain> brute_all_chains(const FinPoset& p, ElemSet v, std::size_t max_len) {
  if (p.size() > kExhaustiveCap)
    throw CapacityError("exhaustive chain enumeration is limited to " + std::to_string(kExhaustiveCap) +
                        " elements");
  const auto ups = brute_upsets(p);
  std::vector<DiffChain> out;
  std::vector<ElemSet> cur;
  std::function<void()> rec = [&]() {
    if (!cur.empty() && fold_nested(cur) == v)
      out.push_back(DiffChain{cur});
    if (cur.size() == max_len)
      return;
    for (ElemSet u : ups) {
      if (!cur.empty() && !u.subset_of(cur.back()))
        continue;
      cur.push_back(u);
      rec();
      cur.pop_back();
    }
  };
  rec();
  return out;
}

/// Posets on 0..n-1 whose order refines the natural order of indices.
/// Every poset is isomorphic to at least one of these.
inline std::vector<FinPoset> naturally_labeled_posets(std::size_t n) {
  if (n > kExhaustiveCap)
    throw CapacityError("poset enumeration is limited to " + std::to_string(kExhaustiveCap) + " elements");
  std::vector<std::pair<std::size_t, std::size_t>> slots;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      slots.emplace_back(i, j);
  std::vector<FinPoset> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
    std::vector<ElemSet> up(n);
    for (std::size_t i = 0; i < n; ++i)
      up[i].insert(i);
    for (std::size_t s = 0; s < slots.size(); ++s)
      if ((mask >> s) & 1U)
        up[slots[s].first].insert(slots[s].second);
    bool transitive = true;
    for (std::size_t i = 0; i < n && transitive; ++i)
      for (auto j : up[i].members())
        if (!up[j].subset_of(up[i])) {
          transitive = false;
          break;
        }
    if (transitive)
      out.push_back(FinPoset::from_relation(std::move(up)));
  }
  return out;
}

/// Relation bits under the best relabelling: equal iff isomorphic.
inline std::vector<std::uint64_t> canonical_code(const FinPoset& p) {
  std::vector<std::size_t> perm(p.size());
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::vector<std::uint64_t> best;
  do {
    std::vector<std::uint64_t> code(p.size(), 0);
    for (std::size_t i = 0; i < p.size(); ++i)
      for (std::size_t j = 0; j < p.size(); ++j)
        if (p.leq(perm[i], perm[j]))
          code[i] |= std::uint64_t{1} << j;
    if (best.empty() || code < best)
      best = std::move(code);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

/// One representative per isomorphism class of n-element posets.
inline std::vector<FinPoset> posets_up_to_iso(std::size_t n) {
  std::set<std::vector<std::uint64_t>> seen;
  std::vector<FinPoset> out;
  for (auto& p : naturally_labeled_posets(n))
    if (seen.insert(canonical_code(p)).second)
      out.push_back(std::move(p));
  return out;
}

/// Uniform random complete DFA with 1..max_states states.
inline Dfa random_dfa(std::mt19937_64& rng, const Alphabet& a, std::size_t max_states) {
  const std::size_t n = 1 + static_cast<std::size_t>(rng() % max_states);
  std::vector<State> delta(n * a.size());
  for (auto& t : delta)
    t = static_cast<State>(rng() % n);
  std::vector<bool> acc(n);
  for (std::size_t s = 0; s < n; ++s)
    acc[s] = (rng() & 1U) != 0;
  return Dfa(a, n, 0, std::move(delta), std::move(acc));
}

inline LpHom random_lp_hom(std::mt19937_64& rng, const Alphabet& source, const Alphabet& target) {
  std::vector<Letter> m(source.size());
  for (auto& l : m)
    l = static_cast<Letter>(rng() % target.size());
  return LpHom(source, target, std::move(m));
}

} // namespace diffchain::oracle
