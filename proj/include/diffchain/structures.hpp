#pragma once

// Words with marked positions and the quantifier adjoints.
//
// An x-structure w_{x=i} over A is encoded as the word (a_1,S_1)...(a_n,S_n)
// over A x 2^x with S_l = {x_j | i_j = l}; the nonempty S_l partition the
// variables. Semantics are over nonempty words: a structure needs at least
// one position, and the universal adjoint is cut down to A^+.

#include <cstdint>
#include <vector>

#include "diffchain/alphabet.hpp"
#include "diffchain/dfa.hpp"
#include "diffchain/hom.hpp"

namespace diffchain {

inline constexpr std::size_t kDefaultVarCap = 3;

inline void require_var_cap(std::size_t k, std::size_t cap = kDefaultVarCap) {
  if (k == 0)
    throw Error("at least one variable is required");
  if (k > cap)
    throw CapacityError(std::to_string(k) + " variables exceed the cap of " + std::to_string(cap));
}

inline void require_structure_alphabet(const Alphabet& a) {
  if (!a.is_product() || a.has_eps())
    throw AlphabetMismatch("expected an alphabet of the form A x 2^x");
}

/// pi*: (a, S) -> a.
inline LpHom projection(const Alphabet& product_alphabet) {
  require_structure_alphabet(product_alphabet);
  std::vector<Letter> m(product_alphabet.size());
  for (Letter l = 0; l < m.size(); ++l)
    m[l] = static_cast<Letter>(product_alphabet.base_of(l));
  return LpHom(product_alphabet, product_alphabet.base_alphabet(), std::move(m));
}

/// The language A^* (x) x of all x-structures. States are the set of
/// variables assigned so far plus a sink for a variable assigned twice.
inline Dfa structures_dfa(const Alphabet& base, const VarList& vars) {
  const Alphabet pa = Alphabet::product(base, vars);
  const std::uint32_t full = vars.full_mask();
  const std::size_t sink = std::size_t{full} + 1;
  const std::size_t k = pa.size();
  std::vector<State> delta((sink + 1) * k);
  for (std::size_t seen = 0; seen <= sink; ++seen)
    for (Letter l = 0; l < k; ++l) {
      const std::uint32_t s = pa.mask_of(l);
      State t;
      if (seen == sink || (s & seen) != 0)
        t = static_cast<State>(sink);
      else
        t = static_cast<State>(seen | s);
      delta[seen * k + l] = t;
    }
  std::vector<bool> acc(sink + 1, false);
  acc[full] = true;
  return Dfa(pa, sink + 1, 0, std::move(delta), std::move(acc));
}

/// L (x) x: the structures whose underlying word lies in L.
inline Dfa tensor(const Dfa& lang, const VarList& vars) {
  if (lang.alphabet().is_product())
    throw AlphabetMismatch("tensor expects a language over a plain alphabet");
  const Dfa all = structures_dfa(lang.alphabet(), vars);
  return intersect(inverse_hom_image(projection(all.alphabet()), lang), all);
}

/// Theta_x: (a, S) -> (a, S) when S is nonempty, (eps, S) otherwise.
inline LpHom theta(const VarList& vars, const Alphabet& base) {
  const Alphabet src = Alphabet::product(base, vars, false);
  const Alphabet dst = Alphabet::product(base, vars, true);
  std::vector<Letter> m(src.size());
  for (Letter l = 0; l < src.size(); ++l) {
    const std::uint32_t s = src.mask_of(l);
    m[l] = s == 0 ? dst.letter(dst.eps_base(), 0) : dst.letter(src.base_of(l), s);
  }
  return LpHom(src, dst, std::move(m));
}

/// Exists K = pi[K cap structures].
inline Dfa exists_adjoint(const Dfa& k, std::size_t state_cap = kDefaultStateCap) {
  require_structure_alphabet(k.alphabet());
  const Dfa all = structures_dfa(k.alphabet().base_alphabet(), k.alphabet().vars());
  return forward_lp_image(projection(k.alphabet()), intersect(k, all), state_cap);
}

/// Forall K = (pi[K^c cap structures])^c, restricted to nonempty words.
inline Dfa forall_adjoint(const Dfa& k, std::size_t state_cap = kDefaultStateCap) {
  require_structure_alphabet(k.alphabet());
  const Dfa all = structures_dfa(k.alphabet().base_alphabet(), k.alphabet().vars());
  const Dfa bad = forward_lp_image(projection(k.alphabet()), intersect(complement(k), all), state_cap);
  return nonempty_part(complement(bad));
}

/// Encodes w_{x=i}; positions are 1-based, one per variable.
inline Word structure_word(const Alphabet& product_alphabet, const Word& w, const std::vector<std::size_t>& positions) {
  require_structure_alphabet(product_alphabet);
  if (positions.size() != product_alphabet.vars().size())
    throw Error("need one position per variable");
  std::vector<std::uint32_t> masks(w.size(), 0);
  for (std::size_t j = 0; j < positions.size(); ++j) {
    if (positions[j] < 1 || positions[j] > w.size())
      throw RangeError("position out of range");
    masks[positions[j] - 1] |= std::uint32_t{1} << j;
  }
  Word out(w.size());
  for (std::size_t l = 0; l < w.size(); ++l)
    out[l] = product_alphabet.letter(w[l], masks[l]);
  return out;
}

/// K = Theta^{-1}(Theta[K]): K is definable without quantifiers.
inline bool is_quantifier_free(const Dfa& k, std::size_t state_cap = kDefaultStateCap) {
  require_structure_alphabet(k.alphabet());
  const LpHom th = theta(k.alphabet().vars(), k.alphabet().base_alphabet());
  return equivalent(inverse_hom_image(th, forward_lp_image(th, k, state_cap)), k);
}

} // namespace diffchain
