#pragma once

// Finite posets and subsets of their carriers.
//
// Elements are dense indices 0..n-1. A FinPoset stores the full order
// relation as one bit row per element, so the poset is limited to 64
// elements; every operation in this library works at that scale.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "diffchain/errors.hpp"

namespace diffchain {

inline constexpr std::size_t kMaxPosetSize = 64;

/// A subset of a poset carrier, stored as a 64-bit mask.
class ElemSet {
public:
  constexpr ElemSet() = default;
  constexpr explicit ElemSet(std::uint64_t bits) : bits_(bits) {}

  static ElemSet of(std::initializer_list<std::size_t> xs) {
    ElemSet s;
    for (auto x : xs)
      s.insert(x);
    return s;
  }

  static ElemSet of(const std::vector<std::size_t>& xs) {
    ElemSet s;
    for (auto x : xs)
      s.insert(x);
    return s;
  }

  static constexpr ElemSet full(std::size_t n) {
    return ElemSet(n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1));
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }

  constexpr bool contains(std::size_t x) const { return x < 64 && ((bits_ >> x) & 1U) != 0; }
  constexpr void insert(std::size_t x) { bits_ |= std::uint64_t{1} << x; }
  constexpr void erase(std::size_t x) { bits_ &= ~(std::uint64_t{1} << x); }

  constexpr bool subset_of(ElemSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(ElemSet other) const { return (bits_ & other.bits_) != 0; }

  std::vector<std::size_t> members() const {
    std::vector<std::size_t> out;
    for (std::uint64_t b = bits_; b != 0; b &= b - 1)
      out.push_back(static_cast<std::size_t>(std::countr_zero(b)));
    return out;
  }

  friend constexpr ElemSet operator|(ElemSet a, ElemSet b) { return ElemSet(a.bits_ | b.bits_); }
  friend constexpr ElemSet operator&(ElemSet a, ElemSet b) { return ElemSet(a.bits_ & b.bits_); }
  friend constexpr ElemSet operator-(ElemSet a, ElemSet b) { return ElemSet(a.bits_ & ~b.bits_); }
  friend constexpr bool operator==(ElemSet a, ElemSet b) = default;
  friend constexpr auto operator<=>(ElemSet a, ElemSet b) = default;

  constexpr ElemSet& operator|=(ElemSet o) { bits_ |= o.bits_; return *this; }
  constexpr ElemSet& operator&=(ElemSet o) { bits_ &= o.bits_; return *this; }
  constexpr ElemSet& operator-=(ElemSet o) { bits_ &= ~o.bits_; return *this; }

  std::string to_string() const {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (auto x : members()) {
      if (!first)
        os << ',';
      os << x;
      first = false;
    }
    os << '}';
    return os.str();
  }

private:
  std::uint64_t bits_ = 0;
};

/// A finite partial order on 0..n-1.
///
/// `up(x)` is the principal upset of x (all y with x <= y) and `down(x)` the
/// principal downset. Both rows are kept so closure in either direction is
/// a word-wide OR.
class FinPoset {
public:
  FinPoset() = default;

  /// Builds the reflexive-transitive closure of a cover (or any generating)
  /// relation. Throws RangeError on bad indices and CycleError when the
  /// closure is not antisymmetric.
  static FinPoset from_covers(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& covers) {
    if (n > kMaxPosetSize)
      throw RangeError("poset size " + std::to_string(n) + " exceeds " + std::to_string(kMaxPosetSize));
    std::vector<ElemSet> up(n);
    for (std::size_t i = 0; i < n; ++i)
      up[i].insert(i);
    for (auto [a, b] : covers) {
      if (a >= n || b >= n)
        throw RangeError("cover (" + std::to_string(a) + "," + std::to_string(b) + ") out of range for n=" +
                         std::to_string(n));
      if (a == b)
        throw CycleError("cover (" + std::to_string(a) + "," + std::to_string(a) + ") is a loop");
      up[a].insert(b);
    }
    // Warshall on bit rows.
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i)
        if (up[i].contains(k))
          up[i] |= up[k];
    return from_upsets(std::move(up));
  }

  /// Builds from a full relation given as rows `leq[i]` = {j | i <= j}.
  /// The relation must already be reflexive and transitive.
  static FinPoset from_relation(std::vector<ElemSet> leq) {
    const std::size_t n = leq.size();
    if (n > kMaxPosetSize)
      throw RangeError("poset size exceeds " + std::to_string(kMaxPosetSize));
    for (std::size_t i = 0; i < n; ++i) {
      if (!leq[i].subset_of(ElemSet::full(n)))
        throw RangeError("relation row " + std::to_string(i) + " out of range");
      if (!leq[i].contains(i))
        throw Error("relation is not reflexive at " + std::to_string(i));
      for (auto j : leq[i].members())
        if (!leq[j].subset_of(leq[i]))
          throw Error("relation is not transitive through " + std::to_string(j));
    }
    return from_upsets(std::move(leq));
  }

  static FinPoset chain(std::size_t n) {
    std::vector<std::pair<std::size_t, std::size_t>> covers;
    for (std::size_t i = 0; i + 1 < n; ++i)
      covers.emplace_back(i, i + 1);
    return from_covers(n, covers);
  }

  static FinPoset antichain(std::size_t n) { return from_covers(n, {}); }

  std::size_t size() const { return up_.size(); }
  ElemSet carrier() const { return ElemSet::full(size()); }

  bool leq(std::size_t a, std::size_t b) const { return up_[a].contains(b); }
  bool less(std::size_t a, std::size_t b) const { return a != b && leq(a, b); }

  ElemSet up(std::size_t x) const { return up_[x]; }
  ElemSet down(std::size_t x) const { return down_[x]; }

  /// Elements in an order compatible with <= (smaller elements first).
  const std::vector<std::size_t>& linear_extension() const { return order_; }

  /// Cover pairs (a, b): a < b with nothing strictly between.
  std::vector<std::pair<std::size_t, std::size_t>> covers() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t a = 0; a < size(); ++a)
      for (std::size_t b = 0; b < size(); ++b) {
        if (!less(a, b))
          continue;
        ElemSet between = (up_[a] & down_[b]) - ElemSet::of({a, b});
        if (between.empty())
          out.emplace_back(a, b);
      }
    return out;
  }

  bool contains(ElemSet s) const { return s.subset_of(carrier()); }

  friend bool operator==(const FinPoset& a, const FinPoset& b) { return a.up_ == b.up_; }

private:
  static FinPoset from_upsets(std::vector<ElemSet> up) {
    const std::size_t n = up.size();
    FinPoset p;
    p.down_.assign(n, ElemSet{});
    for (std::size_t i = 0; i < n; ++i)
      for (auto j : up[i].members())
        p.down_[j].insert(i);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (up[i].contains(j) && up[j].contains(i))
          throw CycleError("order relation has a cycle through " + std::to_string(i) + " and " +
                           std::to_string(j));
    p.order_.resize(n);
    std::iota(p.order_.begin(), p.order_.end(), std::size_t{0});
    // Downset size strictly grows along <, so sorting by it is a linear extension.
    std::stable_sort(p.order_.begin(), p.order_.end(),
                     [&](std::size_t a, std::size_t b) { return p.down_[a].size() < p.down_[b].size(); });
    p.up_ = std::move(up);
    return p;
  }

  std::vector<ElemSet> up_;
  std::vector<ElemSet> down_;
  std::vector<std::size_t> order_;
};

inline void require_over(const FinPoset& p, ElemSet s) {
  if (!p.contains(s))
    throw RangeError("set " + s.to_string() + " is not a subset of a " + std::to_string(p.size()) +
                     "-element poset");
}

/// {x | exists s in S with s <= x}.
inline ElemSet upset_closure(const FinPoset& p, ElemSet s) {
  require_over(p, s);
  ElemSet out;
  for (auto x : s.members())
    out |= p.up(x);
  return out;
}

inline ElemSet downset_closure(const FinPoset& p, ElemSet s) {
  require_over(p, s);
  ElemSet out;
  for (auto x : s.members())
    out |= p.down(x);
  return out;
}

inline ElemSet min_elements(const FinPoset& p, ElemSet s) {
  require_over(p, s);
  ElemSet out;
  for (auto x : s.members())
    if ((p.down(x) & s) == ElemSet::of({x}))
      out.insert(x);
  return out;
}

inline ElemSet max_elements(const FinPoset& p, ElemSet s) {
  require_over(p, s);
  ElemSet out;
  for (auto x : s.members())
    if ((p.up(x) & s) == ElemSet::of({x}))
      out.insert(x);
  return out;
}

inline bool is_upset(const FinPoset& p, ElemSet s) { return upset_closure(p, s) == s; }

inline bool is_downset(const FinPoset& p, ElemSet s) { return downset_closure(p, s) == s; }

/// x <= y <= z with x, z in S forces y in S.
inline bool is_convex(const FinPoset& p, ElemSet s) {
  return (upset_closure(p, s) & downset_closure(p, s)) == s;
}

/// Graphviz rendering of the Hasse diagram (covers only, smaller below).
inline std::string hasse_dot(const FinPoset& p, const std::vector<std::string>& labels = {}) {
  std::ostringstream os;
  os << "digraph hasse {\n  rankdir=BT;\n";
  for (std::size_t i = 0; i < p.size(); ++i) {
    os << "  n" << i << " [label=\"" << (i < labels.size() ? labels[i] : std::to_string(i)) << "\"];\n";
  }
  for (auto [a, b] : p.covers())
    os << "  n" << a << " -> n" << b << " [arrowhead=none];\n";
  os << "}\n";
  return os.str();
}

} // namespace diffchain
