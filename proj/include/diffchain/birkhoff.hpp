#pragma once

// Finite distributive lattices as upset lattices of finite posets.
//
// The lattice D of a poset X is the family of its upsets under union and
// intersection; its Booleanization is the full powerset of X. Nothing here
// stores D unless asked to: elements are plain ElemSets and membership in D
// is the is_upset test.

#include <algorithm>
#include <functional>
#include <optional>
#include <vector>

#include "diffchain/errors.hpp"
#include "diffchain/poset.hpp"

namespace diffchain {

inline constexpr std::size_t kDefaultMaterializeCap = 20;
inline constexpr std::size_t kDefaultUpsetCap = std::size_t{1} << 20;

/// The materialized upset lattice of a poset.
struct UpsetLattice {
  FinPoset poset;
  std::vector<ElemSet> elements; // each upset once, sorted by (size, bits)

  bool contains(ElemSet s) const { return std::binary_search(elements.begin(), elements.end(), s, order); }

  static bool order(ElemSet a, ElemSet b) {
    return a.size() != b.size() ? a.size() < b.size() : a.bits() < b.bits();
  }
};

/// The Booleanization of an upset lattice: every subset of the carrier.
struct PowersetAlgebra {
  FinPoset poset;

  ElemSet top() const { return poset.carrier(); }
  ElemSet complement(ElemSet s) const { return top() - s; }
  bool in_lattice(ElemSet s) const { return is_upset(poset, s); }
};

/// Enumerates every upset of `p`. Elements are decided from the top of a
/// linear extension down; x may join only once its whole strict upset has.
inline UpsetLattice upsets_of(const FinPoset& p, std::size_t materialize_cap = kDefaultMaterializeCap,
                              std::size_t upset_cap = kDefaultUpsetCap) {
  if (p.size() > materialize_cap)
    throw CapacityError("refusing to materialize upsets of a " + std::to_string(p.size()) +
                        "-element poset (cap " + std::to_string(materialize_cap) + ")");
  UpsetLattice out{p, {}};
  const auto& ext = p.linear_extension();
  std::function<void(std::size_t, ElemSet)> rec = [&](std::size_t depth, ElemSet cur) {
    if (depth == ext.size()) {
      if (out.elements.size() >= upset_cap)
        throw CapacityError("upset count exceeds cap " + std::to_string(upset_cap));
      out.elements.push_back(cur);
      return;
    }
    const std::size_t x = ext[ext.size() - 1 - depth];
    rec(depth + 1, cur);
    ElemSet strict_up = p.up(x) - ElemSet::of({x});
    if (strict_up.subset_of(cur)) {
      cur.insert(x);
      rec(depth + 1, cur);
    }
  };
  rec(0, ElemSet{});
  std::sort(out.elements.begin(), out.elements.end(), UpsetLattice::order);
  return out;
}

/// The poset of join-irreducible upsets, ordered by reverse inclusion.
/// Indices follow the lattice's element order.
inline FinPoset join_irreducibles(const UpsetLattice& lattice) {
  std::vector<ElemSet> irreducible;
  for (ElemSet u : lattice.elements) {
    if (u.empty())
      continue;
    ElemSet below;
    for (ElemSet v : lattice.elements)
      if (v != u && v.subset_of(u))
        below |= v;
    if (below != u)
      irreducible.push_back(u);
  }
  std::vector<ElemSet> leq(irreducible.size());
  for (std::size_t i = 0; i < irreducible.size(); ++i)
    for (std::size_t j = 0; j < irreducible.size(); ++j)
      if (irreducible[j].subset_of(irreducible[i]))
        leq[i].insert(j);
  return FinPoset::from_relation(std::move(leq));
}

/// Least lattice element above an arbitrary Boolean element.
inline ElemSet ceiling(const FinPoset& p, ElemSet b) {
  require_over(p, b);
  return upset_closure(p, b);
}

/// Co-Heyting difference a/b: the least upset c with a <= b v c.
inline ElemSet coheyting_minus(const FinPoset& p, ElemSet a, ElemSet b) {
  require_over(p, a);
  require_over(p, b);
  if (!is_upset(p, a))
    throw NotUpsetError("left operand " + a.to_string() + " is not an upset");
  if (!is_upset(p, b))
    throw NotUpsetError("right operand " + b.to_string() + " is not an upset");
  return upset_closure(p, a - b);
}

/// Heyting implication a -> b on upsets: the largest upset c with a ^ c <= b.
/// Order dual of coheyting_minus; used only to check the duality in tests.
inline ElemSet heyting_implies(const FinPoset& p, ElemSet a, ElemSet b) {
  ElemSet out;
  for (std::size_t x = 0; x < p.size(); ++x)
    if ((p.up(x) & a).subset_of(b))
      out.insert(x);
  return out;
}

namespace detail {

inline bool extend_iso(const FinPoset& a, const FinPoset& b, std::vector<std::size_t>& map,
                       std::vector<bool>& used, std::size_t next,
                       const std::vector<std::pair<std::size_t, std::size_t>>& sig_a,
                       const std::vector<std::pair<std::size_t, std::size_t>>& sig_b) {
  if (next == a.size())
    return true;
  for (std::size_t cand = 0; cand < b.size(); ++cand) {
    if (used[cand] || sig_a[next] != sig_b[cand])
      continue;
    bool ok = true;
    for (std::size_t prev = 0; prev < next && ok; ++prev)
      ok = a.leq(prev, next) == b.leq(map[prev], cand) && a.leq(next, prev) == b.leq(cand, map[prev]);
    if (!ok)
      continue;
    map[next] = cand;
    used[cand] = true;
    if (extend_iso(a, b, map, used, next + 1, sig_a, sig_b))
      return true;
    used[cand] = false;
  }
  return false;
}

} // namespace detail

/// Returns an order isomorphism a -> b if one exists. Candidates are pruned
/// by (downset size, upset size) before backtracking.
inline std::optional<std::vector<std::size_t>> find_isomorphism(const FinPoset& a, const FinPoset& b) {
  if (a.size() != b.size())
    return std::nullopt;
  auto signature = [](const FinPoset& p) {
    std::vector<std::pair<std::size_t, std::size_t>> sig(p.size());
    for (std::size_t i = 0; i < p.size(); ++i)
      sig[i] = {p.down(i).size(), p.up(i).size()};
    return sig;
  };
  auto sig_a = signature(a);
  auto sig_b = signature(b);
  auto sorted_a = sig_a, sorted_b = sig_b;
  std::sort(sorted_a.begin(), sorted_a.end());
  std::sort(sorted_b.begin(), sorted_b.end());
  if (sorted_a != sorted_b)
    return std::nullopt;
  std::vector<std::size_t> map(a.size());
  std::vector<bool> used(b.size(), false);
  if (!detail::extend_iso(a, b, map, used, 0, sig_a, sig_b))
    return std::nullopt;
  return map;
}

inline bool isomorphic(const FinPoset& a, const FinPoset& b) { return find_isomorphism(a, b).has_value(); }

} // namespace diffchain
