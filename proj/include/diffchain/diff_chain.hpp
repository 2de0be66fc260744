#pragma once

// Hausdorff degrees and canonical difference chains over finite posets.
//
// For V a subset of a finite poset X, the degree of x is the length of the
// longest strictly increasing sequence ending at x whose members alternate
// in V, out of V, in V, ... The sets K_n = {x | deg(x) >= n} form a
// decreasing chain of upsets with V = K_1 - (K_2 - (... - K_2m)), and every
// other chain of upsets writing V dominates it termwise.

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "diffchain/birkhoff.hpp"
#include "diffchain/errors.hpp"
#include "diffchain/poset.hpp"

namespace diffchain {

/// A decreasing sequence G_1 >= G_2 >= ... of upsets. Odd positions count
/// positively: the value is G_1 - (G_2 - (... - G_r)).
struct DiffChain {
  std::vector<ElemSet> sets;

  std::size_t length() const { return sets.size(); }
  /// Number of (odd, even) pairs once padded to even length.
  std::size_t pairs() const { return (sets.size() + 1) / 2; }
  /// G_i with 1-based index; positions past the end read as empty.
  ElemSet at(std::size_t i) const { return i >= 1 && i <= sets.size() ? sets[i - 1] : ElemSet{}; }

  friend bool operator==(const DiffChain&, const DiffChain&) = default;
};

/// deg_V(x) for every x, by one sweep along a linear extension.
inline std::vector<std::size_t> degrees(const FinPoset& p, ElemSet v) {
  require_over(p, v);
  std::vector<std::size_t> deg(p.size(), 0);
  for (std::size_t x : p.linear_extension()) {
    const bool in_v = v.contains(x);
    std::size_t best = in_v ? 1 : 0;
    for (std::size_t y : p.down(x).members()) {
      if (y == x || v.contains(y) == in_v || deg[y] == 0)
        continue;
      best = std::max(best, deg[y] + 1);
    }
    deg[x] = best;
  }
  return deg;
}

inline std::size_t degree(const FinPoset& p, ElemSet v, std::size_t x) {
  if (x >= p.size())
    throw RangeError("element " + std::to_string(x) + " out of range");
  return degrees(p, v)[x];
}

inline std::size_t max_degree(const std::vector<std::size_t>& deg) {
  return deg.empty() ? 0 : *std::max_element(deg.begin(), deg.end());
}

/// K_1 = up(V), K_2i = up(K_2i-1 - V), K_2i+1 = up(K_2i & V), stored up to
/// K_2m and padded with an empty set when needed; V empty gives no sets.
inline DiffChain canonical_chain(const FinPoset& p, ElemSet v) {
  require_over(p, v);
  DiffChain chain;
  ElemSet k = upset_closure(p, v);
  while (!k.empty()) {
    chain.sets.push_back(k);
    const bool odd = chain.sets.size() % 2 == 1;
    k = upset_closure(p, odd ? k - v : k & v);
  }
  if (chain.sets.size() % 2 == 1)
    chain.sets.push_back(ElemSet{});
  return chain;
}

/// m such that the canonical chain has 2m sets: ceil(max degree / 2).
inline std::size_t chain_height(const std::vector<std::size_t>& deg) { return (max_degree(deg) + 1) / 2; }

inline void check_chain(const FinPoset& p, const DiffChain& chain) {
  for (std::size_t i = 0; i < chain.sets.size(); ++i) {
    require_over(p, chain.sets[i]);
    if (!is_upset(p, chain.sets[i]))
      throw NotUpsetError("chain member " + std::to_string(i + 1) + " " + chain.sets[i].to_string() +
                          " is not an upset");
    if (i > 0 && !chain.sets[i].subset_of(chain.sets[i - 1]))
      throw NotDecreasingError("chain member " + std::to_string(i + 1) + " is not contained in member " +
                               std::to_string(i));
  }
}

/// Value of a decreasing chain. Computes both the nested difference and the
/// disjoint union of (G_2i-1 - G_2i) and insists they agree.
inline ElemSet evaluate(const FinPoset& p, const DiffChain& chain) {
  check_chain(p, chain);
  ElemSet nested;
  for (auto it = chain.sets.rbegin(); it != chain.sets.rend(); ++it)
    nested = *it - nested;
  ElemSet joined;
  for (std::size_t i = 1; i <= chain.pairs(); ++i) {
    ElemSet piece = chain.at(2 * i - 1) - chain.at(2 * i);
    if (piece.intersects(joined))
      throw Error("difference pieces of a decreasing chain overlap");
    joined |= piece;
  }
  if (nested != joined)
    throw Error("nested and disjoint evaluations disagree: " + nested.to_string() + " vs " + joined.to_string());
  return nested;
}

struct MinimalityReport {
  bool ok = true;
  std::size_t p = 0; ///< pairs in the (padded) competitor
  std::size_t m = 0; ///< pairs in the canonical chain
  std::vector<std::string> violations;
};

/// Checks a competing chain for V against the canonical one: p >= m,
/// K_i within G_i for i <= 2p, and the partial unions of competitor pieces
/// inside those of the canonical pieces. Any violation is recorded.
inline MinimalityReport verify_minimality(const FinPoset& p, ElemSet v, const DiffChain& competitor) {
  if (evaluate(p, competitor) != v)
    throw NotAChainForV("competitor does not evaluate to " + v.to_string());
  const DiffChain canon = canonical_chain(p, v);
  MinimalityReport rep;
  rep.p = competitor.pairs();
  rep.m = canon.pairs();
  if (rep.p < rep.m) {
    rep.ok = false;
    rep.violations.push_back("p=" + std::to_string(rep.p) + " < m=" + std::to_string(rep.m));
  }
  for (std::size_t i = 1; i <= 2 * rep.p; ++i) {
    if (!canon.at(i).subset_of(competitor.at(i))) {
      rep.ok = false;
      rep.violations.push_back("K_" + std::to_string(i) + "=" + canon.at(i).to_string() + " not in G_" +
                               std::to_string(i) + "=" + competitor.at(i).to_string());
    }
  }
  ElemSet g_union, k_union;
  for (std::size_t n = 1; n <= rep.p; ++n) {
    g_union |= competitor.at(2 * n - 1) - competitor.at(2 * n);
    k_union |= canon.at(2 * n - 1) - canon.at(2 * n);
    if (!g_union.subset_of(k_union)) {
      rep.ok = false;
      rep.violations.push_back("partial union " + std::to_string(n) + ": " + g_union.to_string() +
                               " not in " + k_union.to_string());
    }
  }
  return rep;
}

/// a_1 = ceil(b), a_2i = ceil(a_2i-1 - b), a_2i+1 = ceil(a_2i & b), run
/// until a_2m+1 = 0. Written with the lattice operations only.
inline DiffChain coheyting_chain(const FinPoset& p, ElemSet b) {
  DiffChain chain;
  ElemSet a = ceiling(p, b);
  for (std::size_t i = 1; !a.empty(); ++i) {
    chain.sets.push_back(a);
    a = ceiling(p, i % 2 == 1 ? a - b : a & b);
  }
  if (chain.sets.size() % 2 == 1)
    chain.sets.push_back(ElemSet{});
  return chain;
}

/// Least member of a bounded sublattice D' of upsets containing b.
inline ElemSet closure_in_sublattice(const FinPoset& p, const std::vector<ElemSet>& family, ElemSet b) {
  require_over(p, b);
  auto has = [&](ElemSet s) { return std::find(family.begin(), family.end(), s) != family.end(); };
  for (ElemSet s : family) {
    require_over(p, s);
    if (!is_upset(p, s))
      throw NotUpsetError("family member " + s.to_string() + " is not an upset");
  }
  if (!has(ElemSet{}) || !has(p.carrier()))
    throw NotSublatticeError("family must contain the empty set and the carrier");
  for (ElemSet s : family)
    for (ElemSet t : family)
      if (!has(s | t) || !has(s & t))
        throw NotSublatticeError("family is not closed under union and intersection at " + s.to_string() +
                                 ", " + t.to_string());
  ElemSet out = p.carrier();
  for (ElemSet s : family)
    if (b.subset_of(s))
      out &= s;
  return out;
}

} // namespace diffchain
