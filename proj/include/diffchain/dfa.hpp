#pragma once

// Complete deterministic automata and the Boolean algebra of regular
// languages.
//
// Every Dfa is complete: the transition table has one entry per
// (state, letter). minimize() returns the canonical form (minimal, states
// numbered in breadth-first order from the start state, letters visited in
// index order), so language equality is structural equality of canonical
// forms.

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "diffchain/alphabet.hpp"
#include "diffchain/errors.hpp"

namespace diffchain {

using State = std::uint32_t;

inline constexpr std::size_t kDefaultStateCap = 100000;

class Dfa {
public:
  Dfa() = default;

  Dfa(Alphabet alphabet, std::size_t states, State start, std::vector<State> delta, std::vector<bool> accepting)
      : alphabet_(std::move(alphabet)), states_(states), start_(start), delta_(std::move(delta)),
        accepting_(std::move(accepting)) {
    if (states_ == 0)
      throw Error("automaton needs at least one state");
    if (start_ >= states_)
      throw RangeError("start state out of range");
    if (delta_.size() != states_ * alphabet_.size())
      throw Error("transition table must have states * |alphabet| entries");
    if (accepting_.size() != states_)
      throw Error("accepting vector must have one flag per state");
    for (State t : delta_)
      if (t >= states_)
        throw RangeError("transition target out of range");
  }

  /// The language containing no word.
  static Dfa empty_language(const Alphabet& a) { return constant(a, false); }
  /// A^*, including the empty word.
  static Dfa all_words(const Alphabet& a) { return constant(a, true); }

  /// A^+: every nonempty word.
  static Dfa nonempty_words(const Alphabet& a) {
    std::vector<State> delta(2 * a.size(), 1);
    return Dfa(a, 2, 0, std::move(delta), {false, true});
  }

  const Alphabet& alphabet() const { return alphabet_; }
  std::size_t states() const { return states_; }
  State start() const { return start_; }
  State next(State s, Letter l) const { return delta_[s * alphabet_.size() + l]; }
  bool accepting(State s) const { return accepting_[s]; }
  const std::vector<State>& delta() const { return delta_; }
  const std::vector<bool>& accepting_flags() const { return accepting_; }

  State run(State s, const Word& w) const {
    for (Letter l : w)
      s = next(s, l);
    return s;
  }

  bool accepts(const Word& w) const { return accepting(run(start_, w)); }

  friend bool operator==(const Dfa&, const Dfa&) = default;

private:
  static Dfa constant(const Alphabet& a, bool accept) {
    return Dfa(a, 1, 0, std::vector<State>(a.size(), 0), {accept});
  }

  Alphabet alphabet_;
  std::size_t states_ = 0;
  State start_ = 0;
  std::vector<State> delta_;
  std::vector<bool> accepting_;
};

inline Dfa complement(const Dfa& d) {
  std::vector<bool> acc(d.states());
  for (std::size_t s = 0; s < d.states(); ++s)
    acc[s] = !d.accepting(static_cast<State>(s));
  return Dfa(d.alphabet(), d.states(), d.start(), d.delta(), std::move(acc));
}

/// Minimal complete automaton with breadth-first state numbering.
inline Dfa minimize(const Dfa& d) {
  const std::size_t k = d.alphabet().size();
  // Reachable states in BFS order.
  std::vector<std::int64_t> index(d.states(), -1);
  std::vector<State> order{d.start()};
  index[d.start()] = 0;
  for (std::size_t i = 0; i < order.size(); ++i)
    for (Letter l = 0; l < k; ++l) {
      State t = d.next(order[i], l);
      if (index[t] < 0) {
        index[t] = static_cast<std::int64_t>(order.size());
        order.push_back(t);
      }
    }
  const std::size_t n = order.size();

  // Moore refinement over the reachable part.
  std::vector<std::uint32_t> cls(n);
  for (std::size_t i = 0; i < n; ++i)
    cls[i] = d.accepting(order[i]) ? 1 : 0;
  std::size_t classes = 0;
  std::vector<std::uint32_t> sig(n * (k + 1));
  std::vector<std::size_t> perm(n);
  while (true) {
    for (std::size_t i = 0; i < n; ++i) {
      sig[i * (k + 1)] = cls[i];
      for (Letter l = 0; l < k; ++l)
        sig[i * (k + 1) + 1 + l] = cls[static_cast<std::size_t>(index[d.next(order[i], l)])];
    }
    for (std::size_t i = 0; i < n; ++i)
      perm[i] = i;
    auto key_less = [&](std::size_t a, std::size_t b) {
      return std::lexicographical_compare(sig.begin() + static_cast<std::ptrdiff_t>(a * (k + 1)),
                                          sig.begin() + static_cast<std::ptrdiff_t>((a + 1) * (k + 1)),
                                          sig.begin() + static_cast<std::ptrdiff_t>(b * (k + 1)),
                                          sig.begin() + static_cast<std::ptrdiff_t>((b + 1) * (k + 1)));
    };
    std::sort(perm.begin(), perm.end(), key_less);
    std::vector<std::uint32_t> next_cls(n);
    std::uint32_t id = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (i > 0 && key_less(perm[i - 1], perm[i]))
        ++id;
      next_cls[perm[i]] = id;
    }
    const std::size_t next_classes = n == 0 ? 0 : id + 1;
    cls = std::move(next_cls);
    if (next_classes == classes)
      break;
    classes = next_classes;
  }

  // Renumber classes breadth-first from the start class.
  std::vector<std::int64_t> renum(classes, -1);
  std::vector<std::size_t> rep(classes);
  for (std::size_t i = n; i-- > 0;)
    rep[cls[i]] = i;
  std::vector<std::uint32_t> queue{cls[0]};
  renum[cls[0]] = 0;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const std::size_t r = rep[queue[i]];
    for (Letter l = 0; l < k; ++l) {
      std::uint32_t c = cls[static_cast<std::size_t>(index[d.next(order[r], l)])];
      if (renum[c] < 0) {
        renum[c] = static_cast<std::int64_t>(queue.size());
        queue.push_back(c);
      }
    }
  }
  std::vector<State> delta(classes * k);
  std::vector<bool> acc(classes);
  for (std::size_t q = 0; q < classes; ++q) {
    const std::size_t r = rep[queue[q]];
    acc[q] = d.accepting(order[r]);
    for (Letter l = 0; l < k; ++l)
      delta[q * k + l] =
          static_cast<State>(renum[cls[static_cast<std::size_t>(index[d.next(order[r], l)])]]);
  }
  return Dfa(d.alphabet(), classes, 0, std::move(delta), std::move(acc));
}

enum class BoolOp { And, Or, Minus, Xor };

/// Reachable product automaton, minimized.
inline Dfa product(const Dfa& a, const Dfa& b, BoolOp op, std::size_t state_cap = kDefaultStateCap) {
  require_same(a.alphabet(), b.alphabet());
  const std::size_t k = a.alphabet().size();
  std::unordered_map<std::uint64_t, State> ids;
  std::vector<std::pair<State, State>> pairs;
  auto id_of = [&](State x, State y) {
    const std::uint64_t key = (std::uint64_t{x} << 32) | y;
    auto [it, fresh] = ids.emplace(key, static_cast<State>(pairs.size()));
    if (fresh) {
      if (pairs.size() >= state_cap)
        throw CapacityError("product automaton exceeds state cap " + std::to_string(state_cap));
      pairs.emplace_back(x, y);
    }
    return it->second;
  };
  id_of(a.start(), b.start());
  std::vector<State> delta;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    auto [x, y] = pairs[i];
    for (Letter l = 0; l < k; ++l)
      delta.push_back(id_of(a.next(x, l), b.next(y, l)));
  }
  std::vector<bool> acc(pairs.size());
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const bool p = a.accepting(pairs[i].first), q = b.accepting(pairs[i].second);
    switch (op) {
    case BoolOp::And: acc[i] = p && q; break;
    case BoolOp::Or: acc[i] = p || q; break;
    case BoolOp::Minus: acc[i] = p && !q; break;
    case BoolOp::Xor: acc[i] = p != q; break;
    }
  }
  return minimize(Dfa(a.alphabet(), pairs.size(), 0, std::move(delta), std::move(acc)));
}

inline Dfa intersect(const Dfa& a, const Dfa& b) { return product(a, b, BoolOp::And); }
inline Dfa unite(const Dfa& a, const Dfa& b) { return product(a, b, BoolOp::Or); }
inline Dfa difference(const Dfa& a, const Dfa& b) { return product(a, b, BoolOp::Minus); }

/// L intersected with A^+.
inline Dfa nonempty_part(const Dfa& d) { return intersect(d, Dfa::nonempty_words(d.alphabet())); }

/// A shortest accepted word (ties broken by letter order), if any.
inline std::optional<Word> shortest_word(const Dfa& d) {
  const std::size_t k = d.alphabet().size();
  std::vector<std::int64_t> parent(d.states(), -2);
  std::vector<Letter> via(d.states(), 0);
  std::deque<State> queue{d.start()};
  parent[d.start()] = -1;
  while (!queue.empty()) {
    State s = queue.front();
    queue.pop_front();
    if (d.accepting(s)) {
      Word w;
      for (State cur = s; parent[cur] >= 0; cur = static_cast<State>(parent[cur]))
        w.push_back(via[cur]);
      std::reverse(w.begin(), w.end());
      return w;
    }
    for (Letter l = 0; l < k; ++l) {
      State t = d.next(s, l);
      if (parent[t] == -2) {
        parent[t] = s;
        via[t] = l;
        queue.push_back(t);
      }
    }
  }
  return std::nullopt;
}

inline bool is_empty(const Dfa& d) { return !shortest_word(d).has_value(); }

/// L(a) within L(b); on failure `witness` receives a shortest word of a - b.
inline bool included(const Dfa& a, const Dfa& b, Word* witness = nullptr) {
  auto w = shortest_word(difference(a, b));
  if (w && witness)
    *witness = *w;
  return !w.has_value();
}

inline bool equivalent(const Dfa& a, const Dfa& b) {
  require_same(a.alphabet(), b.alphabet());
  return minimize(a) == minimize(b);
}

inline std::string dfa_dot(const Dfa& d) {
  std::ostringstream os;
  os << "digraph dfa {\n  rankdir=LR;\n  init [shape=point];\n";
  for (std::size_t s = 0; s < d.states(); ++s)
    os << "  q" << s << " [shape=" << (d.accepting(static_cast<State>(s)) ? "doublecircle" : "circle") << "];\n";
  os << "  init -> q" << d.start() << ";\n";
  for (std::size_t s = 0; s < d.states(); ++s) {
    std::map<State, std::vector<std::string>> edges;
    for (Letter l = 0; l < d.alphabet().size(); ++l)
      edges[d.next(static_cast<State>(s), l)].push_back(d.alphabet().letter_name(l));
    for (const auto& [t, labels] : edges) {
      os << "  q" << s << " -> q" << t << " [label=\"";
      for (std::size_t i = 0; i < labels.size(); ++i)
        os << (i ? " " : "") << labels[i];
      os << "\"];\n";
    }
  }
  os << "}\n";
  return os.str();
}

} // namespace diffchain
