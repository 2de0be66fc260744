#pragma once

// The closure operators [L]_k whose fixpoints are the languages defined by
// purely universal sentences with k variables (arbitrary numerical
// predicates), and the difference chains they induce.
//
// [L]_k = Forall Theta^{-1}(Theta[L (x) x]) for x = (x1..xk). Each step
// preserves regularity, so every member of a chain trace is a DFA. All
// languages here live inside A^+.

#include <optional>
#include <string>
#include <vector>

#include "diffchain/dfa.hpp"
#include "diffchain/hom.hpp"
#include "diffchain/structures.hpp"

namespace diffchain {

inline constexpr std::size_t kDefaultMaxM = 8;

struct Limits {
  std::size_t state_cap = kDefaultStateCap;
  std::size_t var_cap = kDefaultVarCap;
  std::size_t max_m_cap = kDefaultMaxM;
};

/// Least Pi_1^k-closed language containing L (restricted to A^+).
inline Dfa pi1_closure(const Dfa& lang, std::size_t k, const Limits& lim = {}) {
  if (lang.alphabet().is_product())
    throw AlphabetMismatch("closure expects a language over a plain alphabet");
  require_var_cap(k, lim.var_cap);
  const VarList vars = VarList::numbered(k);
  const LpHom th = theta(vars, lang.alphabet());
  const Dfa structures = tensor(lang, vars);
  const Dfa image = forward_lp_image(th, structures, lim.state_cap);
  const Dfa saturated = inverse_hom_image(th, image);
  return forall_adjoint(minimize(saturated), lim.state_cap);
}

inline bool is_pi1_k(const Dfa& lang, std::size_t k, const Limits& lim = {}) {
  return equivalent(pi1_closure(lang, k, lim), lang);
}

enum class TraceStatus { Success, Exhausted };

inline const char* to_string(TraceStatus s) { return s == TraceStatus::Success ? "success" : "exhausted"; }

/// c_1 = [b], c_2n = [c_2n-1 - b], c_2n+1 = [c_2n & b] at a fixed k.
struct ChainTrace {
  std::size_t k = 0;
  Dfa b;
  std::vector<Dfa> c;               ///< c_1, c_2, ... (always an even count)
  std::optional<std::size_t> m;     ///< number of pairs on success
  TraceStatus status = TraceStatus::Exhausted;

  /// c_2l-1 - c_2l for l = 1..pairs
  std::vector<Dfa> witness_diffs() const {
    std::vector<Dfa> out;
    for (std::size_t i = 0; i + 1 < c.size(); i += 2)
      out.push_back(difference(c[i], c[i + 1]));
    return out;
  }
};

/// Nested difference c_1 - (c_2 - (... - c_r)).
inline Dfa nested_difference(const Dfa& empty, const std::vector<Dfa>& chain) {
  Dfa acc = empty;
  for (auto it = chain.rbegin(); it != chain.rend(); ++it)
    acc = difference(*it, acc);
  return acc;
}

/// Union of the pieces c_2l-1 - c_2l.
inline Dfa disjoint_union(const Dfa& empty, const std::vector<Dfa>& chain) {
  Dfa acc = empty;
  for (std::size_t i = 0; i < chain.size(); i += 2) {
    const Dfa next = i + 1 < chain.size() ? chain[i + 1] : empty;
    acc = unite(acc, difference(chain[i], next));
  }
  return acc;
}

/// Builds c pairs until their pieces reconstruct b (success), a piece comes
/// out empty without reconstructing b, or max_m pairs are spent.
inline ChainTrace chain_trace(const Dfa& b, std::size_t k, std::size_t max_m, const Limits& lim = {}) {
  if (max_m == 0)
    throw Error("max_m must be at least 1");
  if (max_m > lim.max_m_cap)
    throw CapacityError("max_m " + std::to_string(max_m) + " exceeds cap " + std::to_string(lim.max_m_cap));
  ChainTrace tr;
  tr.k = k;
  tr.b = minimize(b);
  const Dfa empty = Dfa::empty_language(b.alphabet());
  Dfa pieces = minimize(empty);
  if (is_empty(tr.b)) {
    tr.m = 0;
    tr.status = TraceStatus::Success;
    return tr;
  }
  Dfa prev_even;
  for (std::size_t l = 1; l <= max_m; ++l) {
    const Dfa odd = l == 1 ? pi1_closure(tr.b, k, lim) : pi1_closure(intersect(prev_even, tr.b), k, lim);
    const Dfa even = pi1_closure(difference(odd, tr.b), k, lim);
    const Dfa piece = difference(odd, even);
    if (is_empty(piece))
      break;
    tr.c.push_back(odd);
    tr.c.push_back(even);
    pieces = unite(pieces, piece);
    if (equivalent(pieces, tr.b)) {
      tr.m = l;
      tr.status = TraceStatus::Success;
      break;
    }
    prev_even = even;
  }
  return tr;
}

struct Decomposition {
  bool success = false;
  ChainTrace trace;                 ///< the successful trace, or the last attempt
  std::vector<ChainTrace> attempts; ///< one per k tried, ascending
};

/// Searches k = 1..max_k for a difference chain of Pi_1^k languages for b.
/// Failure only means the bounds ran out.
inline Decomposition decompose_bpi1(const Dfa& b, std::size_t max_k, std::size_t max_m, const Limits& lim = {}) {
  if (max_k == 0 || max_m == 0)
    throw Error("bounds must be at least 1");
  Decomposition out;
  for (std::size_t k = 1; k <= max_k; ++k) {
    out.attempts.push_back(chain_trace(b, k, max_m, lim));
    if (out.attempts.back().status == TraceStatus::Success) {
      out.success = true;
      break;
    }
  }
  out.trace = out.attempts.back();
  return out;
}

/// First c_n computed at k, without early stopping: n terms.
inline std::vector<Dfa> chain_terms(const Dfa& b, std::size_t k, std::size_t n, const Limits& lim = {}) {
  std::vector<Dfa> c;
  for (std::size_t i = 1; i <= n; ++i) {
    if (i == 1)
      c.push_back(pi1_closure(b, k, lim));
    else if (i % 2 == 0)
      c.push_back(pi1_closure(difference(c.back(), b), k, lim));
    else
      c.push_back(pi1_closure(intersect(c.back(), b), k, lim));
  }
  return c;
}

struct MonotonicityReport {
  bool ok = true;
  std::size_t n = 0; ///< failing index, 1-based
  Word witness;      ///< word in c_{n,k'} but not in c_{n,k}
};

/// c_{n,k'} within c_{n,k} for every n up to the bound, given k <= k'.
inline MonotonicityReport family_monotonicity(const Dfa& b, std::size_t k, std::size_t k2, std::size_t n,
                                              const Limits& lim = {}) {
  if (k > k2)
    throw Error("family_monotonicity expects k <= k'");
  MonotonicityReport rep;
  if (k == k2)
    return rep;
  const auto lo = chain_terms(b, k, n, lim);
  const auto hi = chain_terms(b, k2, n, lim);
  for (std::size_t i = 0; i < n; ++i) {
    Word w;
    if (!included(hi[i], lo[i], &w)) {
      rep.ok = false;
      rep.n = i + 1;
      rep.witness = w;
      return rep;
    }
  }
  return rep;
}

} // namespace diffchain
