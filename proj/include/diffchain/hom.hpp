#pragma once

// Homomorphisms between free monoids and the images of regular languages
// under them.

#include <bit>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "diffchain/alphabet.hpp"
#include "diffchain/dfa.hpp"
#include "diffchain/errors.hpp"

namespace diffchain {

/// A homomorphism A^* -> B^* given by the image word of each letter.
struct Hom {
  Alphabet source;
  Alphabet target;
  std::vector<Word> images;

  Word apply(const Word& w) const {
    Word out;
    for (Letter l : w)
      out.insert(out.end(), images.at(l).begin(), images.at(l).end());
    return out;
  }
};

/// A length-preserving homomorphism: one target letter per source letter.
class LpHom {
public:
  LpHom() = default;
  LpHom(Alphabet source, Alphabet target, std::vector<Letter> letter_map)
      : source_(std::move(source)), target_(std::move(target)), map_(std::move(letter_map)) {
    if (map_.size() != source_.size())
      throw Error("letter map must be total on the source alphabet");
    for (Letter l : map_)
      if (l >= target_.size())
        throw RangeError("letter map target out of range");
  }

  static LpHom identity(const Alphabet& a) {
    std::vector<Letter> m(a.size());
    for (Letter l = 0; l < a.size(); ++l)
      m[l] = l;
    return LpHom(a, a, std::move(m));
  }

  const Alphabet& source() const { return source_; }
  const Alphabet& target() const { return target_; }
  Letter operator()(Letter l) const { return map_[l]; }
  const std::vector<Letter>& letter_map() const { return map_; }

  Word apply(const Word& w) const {
    Word out(w.size());
    for (std::size_t i = 0; i < w.size(); ++i)
      out[i] = map_[w[i]];
    return out;
  }

  Hom as_hom() const {
    Hom h{source_, target_, {}};
    for (Letter l : map_)
      h.images.push_back(Word{l});
    return h;
  }

private:
  Alphabet source_;
  Alphabet target_;
  std::vector<Letter> map_;
};

/// {w over the source | h(w) in L(d)}. Same states as d, rewired.
inline Dfa inverse_hom_image(const Hom& h, const Dfa& d) {
  require_same(h.target, d.alphabet());
  if (h.images.size() != h.source.size())
    throw Error("homomorphism must be total on the source alphabet");
  const std::size_t k = h.source.size();
  std::vector<State> delta(d.states() * k);
  for (State s = 0; s < d.states(); ++s)
    for (Letter l = 0; l < k; ++l)
      delta[s * k + l] = d.run(s, h.images[l]);
  return Dfa(h.source, d.states(), d.start(), std::move(delta), d.accepting_flags());
}

inline Dfa inverse_hom_image(const LpHom& h, const Dfa& d) { return inverse_hom_image(h.as_hom(), d); }

namespace detail {

struct StateSetHash {
  std::size_t operator()(const std::vector<std::uint64_t>& v) const noexcept {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL;
    for (auto x : v) {
      h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }
};

} // namespace detail

/// {h(w) | w in L(d)} for a length-preserving h. The relabelled automaton
/// is nondeterministic; the subset construction runs over sets of states
/// of d, which is the powerset recognizer of the image.
inline Dfa forward_lp_image(const LpHom& h, const Dfa& d, std::size_t state_cap = kDefaultStateCap) {
  require_same(h.source(), d.alphabet());
  const std::size_t words = (d.states() + 63) / 64;
  const std::size_t tk = h.target().size();
  using Bits = std::vector<std::uint64_t>;

  // preimage[b] = source letters mapping to b
  std::vector<std::vector<Letter>> preimage(tk);
  for (Letter l = 0; l < h.source().size(); ++l)
    preimage[h(l)].push_back(l);

  std::unordered_map<Bits, State, detail::StateSetHash> ids;
  std::vector<Bits> subsets;
  auto id_of = [&](Bits&& bits) {
    auto [it, fresh] = ids.emplace(bits, static_cast<State>(subsets.size()));
    if (fresh) {
      if (subsets.size() >= state_cap)
        throw CapacityError("subset construction exceeds state cap " + std::to_string(state_cap));
      subsets.push_back(std::move(bits));
    }
    return it->second;
  };
  Bits init(words, 0);
  init[d.start() / 64] |= std::uint64_t{1} << (d.start() % 64);
  id_of(std::move(init));

  std::vector<State> delta;
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    for (Letter b = 0; b < tk; ++b) {
      Bits next(words, 0);
      const Bits& cur = subsets[i];
      for (std::size_t w = 0; w < words; ++w)
        for (std::uint64_t m = cur[w]; m != 0; m &= m - 1) {
          State s = static_cast<State>(w * 64 + static_cast<std::size_t>(std::countr_zero(m)));
          for (Letter l : preimage[b]) {
            State t = d.next(s, l);
            next[t / 64] |= std::uint64_t{1} << (t % 64);
          }
        }
      delta.push_back(id_of(std::move(next)));
    }
  }
  std::vector<bool> acc(subsets.size(), false);
  for (std::size_t i = 0; i < subsets.size(); ++i)
    for (State s = 0; s < d.states() && !acc[i]; ++s)
      acc[i] = ((subsets[i][s / 64] >> (s % 64)) & 1U) && d.accepting(s);
  return minimize(Dfa(h.target(), subsets.size(), 0, std::move(delta), std::move(acc)));
}

} // namespace diffchain
