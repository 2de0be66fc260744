#pragma once

#include <functional>
#include <string>
#include <vector>

#include "diffchain/alphabet.hpp"
#include "diffchain/dfa.hpp"

namespace fixtures {

using namespace diffchain;

inline Alphabet ab() { return Alphabet::plain({"a", "b"}); }

inline Dfa table(const Alphabet& a, const std::vector<std::vector<State>>& rows, const std::vector<State>& acc,
                 State start = 0) {
  std::vector<State> delta;
  for (const auto& r : rows)
    delta.insert(delta.end(), r.begin(), r.end());
  std::vector<bool> flags(rows.size(), false);
  for (State s : acc)
    flags[s] = true;
  return Dfa(a, rows.size(), start, std::move(delta), std::move(flags));
}

// Letters: a = 0, b = 1.
inline Dfa a_plus() { return table(ab(), {{1, 2}, {1, 2}, {2, 2}}, {1}); }
inline Dfa b_plus() { return table(ab(), {{2, 1}, {2, 1}, {2, 2}}, {1}); }
inline Dfa a_star() { return table(ab(), {{0, 1}, {1, 1}}, {0}); }
inline Dfa b_star() { return table(ab(), {{1, 0}, {1, 1}}, {0}); }
inline Dfa all_plus() { return Dfa::nonempty_words(ab()); }
inline Dfa contains_a() { return table(ab(), {{1, 0}, {1, 1}}, {1}); }
inline Dfa contains_b() { return table(ab(), {{0, 1}, {1, 1}}, {1}); }
inline Dfa single_ab() { return table(ab(), {{1, 3}, {3, 2}, {3, 3}, {3, 3}}, {2}); }
inline Dfa ab_plus() { return table(ab(), {{1, 3}, {3, 2}, {1, 3}, {3, 3}}, {2}); }
inline Dfa ab_star() { return table(ab(), {{1, 2}, {2, 0}, {2, 2}}, {0}); }
inline Dfa a_star_b() { return table(ab(), {{0, 1}, {2, 2}, {2, 2}}, {1}); }
inline Dfa a_plus_or_b_plus() { return unite(a_plus(), b_plus()); }

inline bool all_letters(const Word& w, Letter l) {
  for (Letter x : w)
    if (x != l)
      return false;
  return true;
}

/// Membership of d agrees with pred on every word of length <= n,
/// including the empty word.
inline bool matches(const Dfa& d, const std::function<bool(const Word&)>& pred, std::size_t n) {
  bool ok = d.accepts({}) == pred({});
  for (std::size_t len = 1; len <= n && ok; ++len)
    for_each_word(d.alphabet().size(), len, [&](const Word& w) {
      if (d.accepts(w) != pred(w))
        ok = false;
    });
  return ok;
}

inline Word word(const std::string& s) { return parse_word(ab(), s); }

} // namespace fixtures
