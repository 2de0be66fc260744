#pragma once

// Finite monoids as recognizers, and the powerset construction behind
// forward images under length-preserving homomorphisms.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "diffchain/dfa.hpp"
#include "diffchain/errors.hpp"
#include "diffchain/hom.hpp"

namespace diffchain {

inline constexpr std::size_t kDefaultMonoidCap = 4096;

/// A finite monoid on 0..size-1 given by its multiplication table.
class FinMonoid {
public:
  FinMonoid() = default;

  /// Validates associativity and the identity law.
  FinMonoid(std::size_t size, std::vector<std::uint32_t> table, std::uint32_t identity)
      : FinMonoid(size, std::move(table), identity, Trusted{}) {
    for (std::uint32_t x : table_)
      if (x >= size_)
        throw RangeError("multiplication table entry out of range");
    for (std::uint32_t a = 0; a < size_; ++a)
      if (mul(identity_, a) != a || mul(a, identity_) != a)
        throw Error("identity law fails at " + std::to_string(a));
    for (std::uint32_t a = 0; a < size_; ++a)
      for (std::uint32_t b = 0; b < size_; ++b)
        for (std::uint32_t c = 0; c < size_; ++c)
          if (mul(mul(a, b), c) != mul(a, mul(b, c)))
            throw Error("multiplication is not associative");
  }

  /// Skips the cubic associativity check; for tables built by composition.
  static FinMonoid unchecked(std::size_t size, std::vector<std::uint32_t> table, std::uint32_t identity) {
    return FinMonoid(size, std::move(table), identity, Trusted{});
  }

  std::size_t size() const { return size_; }
  std::uint32_t identity() const { return identity_; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return table_[a * size_ + b]; }
  const std::vector<std::uint32_t>& table() const { return table_; }

  /// The unique element z with za = az = z for all a, if there is one.
  std::optional<std::uint32_t> zero() const {
    for (std::uint32_t z = 0; z < size_; ++z) {
      bool ok = true;
      for (std::uint32_t a = 0; a < size_ && ok; ++a)
        ok = mul(z, a) == z && mul(a, z) == z;
      if (ok)
        return z;
    }
    return std::nullopt;
  }

private:
  struct Trusted {};
  FinMonoid(std::size_t size, std::vector<std::uint32_t> table, std::uint32_t identity, Trusted)
      : size_(size), table_(std::move(table)), identity_(identity) {
    if (size_ == 0 || table_.size() != size_ * size_ || identity_ >= size_)
      throw Error("malformed monoid table");
  }

  std::size_t size_ = 0;
  std::vector<std::uint32_t> table_;
  std::uint32_t identity_ = 0;
};

/// The transformation monoid of an automaton with its evaluation map.
/// Elements are state transformations; element 0 is the identity. The
/// product m * n means "apply m, then n", matching word concatenation.
struct TransitionMonoid {
  FinMonoid monoid;
  Alphabet alphabet;
  std::vector<std::uint32_t> letter_image; ///< g(a) for each letter
  std::vector<std::vector<State>> transforms;
  std::vector<bool> accepting; ///< m(start) is accepting: the set recognizing L

  std::uint32_t eval(const Word& w) const {
    std::uint32_t m = monoid.identity();
    for (Letter l : w)
      m = monoid.mul(m, letter_image[l]);
    return m;
  }
};

inline TransitionMonoid transition_monoid(const Dfa& d, std::size_t cap = kDefaultMonoidCap) {
  const std::size_t n = d.states();
  const std::size_t k = d.alphabet().size();
  std::map<std::vector<State>, std::uint32_t> ids;
  std::vector<std::vector<State>> elems;
  auto id_of = [&](std::vector<State> t) {
    auto [it, fresh] = ids.emplace(t, static_cast<std::uint32_t>(elems.size()));
    if (fresh) {
      if (elems.size() >= cap)
        throw CapacityError("transition monoid exceeds cap " + std::to_string(cap));
      elems.push_back(std::move(t));
    }
    return it->second;
  };
  std::vector<State> ident(n);
  for (State s = 0; s < n; ++s)
    ident[s] = s;
  id_of(ident);
  std::vector<std::uint32_t> letter_image(k);
  for (Letter l = 0; l < k; ++l) {
    std::vector<State> t(n);
    for (State s = 0; s < n; ++s)
      t[s] = d.next(s, l);
    letter_image[l] = id_of(std::move(t));
  }
  // Closure under right multiplication by generators.
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (Letter l = 0; l < k; ++l) {
      std::vector<State> t(n);
      for (State s = 0; s < n; ++s)
        t[s] = d.next(elems[i][s], l);
      id_of(std::move(t));
    }
  const std::size_t size = elems.size();
  std::vector<std::uint32_t> table(size * size);
  for (std::size_t a = 0; a < size; ++a)
    for (std::size_t b = 0; b < size; ++b) {
      std::vector<State> t(n);
      for (State s = 0; s < n; ++s)
        t[s] = elems[b][elems[a][s]];
      table[a * size + b] = ids.at(t);
    }
  std::vector<bool> acc(size);
  for (std::size_t m = 0; m < size; ++m)
    acc[m] = d.accepting(elems[m][d.start()]);
  return TransitionMonoid{FinMonoid::unchecked(size, std::move(table), 0), d.alphabet(),
                          std::move(letter_image), std::move(elems), std::move(acc)};
}

/// g^{-1}(P) for g: A^* -> M given by letter images, as an automaton whose
/// states are the monoid elements.
inline Dfa monoid_preimage_dfa(const FinMonoid& m, const Alphabet& a, const std::vector<std::uint32_t>& letter_image,
                               const std::vector<bool>& subset) {
  const std::size_t k = a.size();
  std::vector<State> delta(m.size() * k);
  for (std::uint32_t x = 0; x < m.size(); ++x)
    for (Letter l = 0; l < k; ++l)
      delta[x * k + l] = m.mul(x, letter_image.at(l));
  return Dfa(a, m.size(), m.identity(), std::move(delta), subset);
}

/// h^{-1}(diamond P) where h: B^* -> P(M), h(w) = g[f^{-1}(w)]. States are
/// the subsets of M reachable from {1} under pointwise products with the
/// letter images h(b) = {g(a) | f(a) = b}; a subset accepts when it meets P.
inline Dfa powerset_image_dfa(const FinMonoid& m, const LpHom& f, const std::vector<std::uint32_t>& letter_image,
                              const std::vector<bool>& subset, std::size_t state_cap = kDefaultStateCap) {
  const std::size_t bk = f.target().size();
  std::vector<std::set<std::uint32_t>> h(bk);
  for (Letter a = 0; a < f.source().size(); ++a)
    h[f(a)].insert(letter_image.at(a));
  std::map<std::set<std::uint32_t>, State> ids;
  std::vector<std::set<std::uint32_t>> states;
  auto id_of = [&](std::set<std::uint32_t> q) {
    auto [it, fresh] = ids.emplace(q, static_cast<State>(states.size()));
    if (fresh) {
      if (states.size() >= state_cap)
        throw CapacityError("powerset monoid automaton exceeds state cap");
      states.push_back(std::move(q));
    }
    return it->second;
  };
  id_of({m.identity()});
  std::vector<State> delta;
  for (std::size_t i = 0; i < states.size(); ++i)
    for (Letter b = 0; b < bk; ++b) {
      std::set<std::uint32_t> prod;
      for (std::uint32_t x : states[i])
        for (std::uint32_t y : h[b])
          prod.insert(m.mul(x, y));
      delta.push_back(id_of(std::move(prod)));
    }
  std::vector<bool> acc(states.size());
  for (std::size_t i = 0; i < states.size(); ++i)
    acc[i] = std::any_of(states[i].begin(), states[i].end(), [&](std::uint32_t x) { return subset.at(x); });
  return Dfa(f.target(), states.size(), 0, std::move(delta), std::move(acc));
}

/// True when m is isomorphic to {1, n, 0} with n^2 = 0.
inline bool is_nilpotent_three(const FinMonoid& m) {
  if (m.size() != 3)
    return false;
  auto z = m.zero();
  if (!z || *z == m.identity())
    return false;
  const std::uint32_t n = 3 - *z - m.identity();
  return m.mul(n, n) == *z;
}

} // namespace diffchain
