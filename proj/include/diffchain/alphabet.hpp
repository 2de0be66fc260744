#pragma once

// Alphabets, including the product alphabets A x 2^x and A_eps x 2^x that
// encode words with marked positions.
//
// Letters are dense indices. In a product alphabet the letter (b, S) has
// index b * 2^k + S, where b indexes the base letters (the extra base letter
// eps, when present, comes last) and S is a bitmask over the k variables.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "diffchain/errors.hpp"

namespace diffchain {

using Letter = std::uint32_t;
using Word = std::vector<Letter>;

inline constexpr std::size_t kMaxVars = 8;
inline constexpr const char* kEpsName = "eps";

/// An ordered list of distinct variable names.
class VarList {
public:
  VarList() = default;
  explicit VarList(std::vector<std::string> names) : names_(std::move(names)) {
    if (names_.size() > kMaxVars)
      throw CapacityError("at most " + std::to_string(kMaxVars) + " variables are supported");
    std::set<std::string> seen(names_.begin(), names_.end());
    if (seen.size() != names_.size())
      throw Error("variable names must be distinct");
  }

  /// (x1, ..., xk)
  static VarList numbered(std::size_t k) {
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= k; ++i)
      names.push_back("x" + std::to_string(i));
    return VarList(std::move(names));
  }

  std::size_t size() const { return names_.size(); }
  bool empty() const { return names_.empty(); }
  const std::vector<std::string>& names() const { return names_; }
  std::uint32_t full_mask() const { return (std::uint32_t{1} << names_.size()) - 1; }

  friend bool operator==(const VarList&, const VarList&) = default;

private:
  std::vector<std::string> names_;
};

class Alphabet {
public:
  Alphabet() = default;

  static Alphabet plain(std::vector<std::string> letters) {
    if (letters.empty())
      throw Error("alphabet must be nonempty");
    std::set<std::string> seen(letters.begin(), letters.end());
    if (seen.size() != letters.size())
      throw Error("alphabet letters must be distinct");
    Alphabet a;
    a.bases_ = std::move(letters);
    return a;
  }

  /// base x 2^vars, or base_eps x 2^vars when `with_eps` is set.
  static Alphabet product(const Alphabet& base, const VarList& vars, bool with_eps = false) {
    if (base.is_product())
      throw Error("product alphabets must be built over a plain alphabet");
    if (vars.empty())
      throw Error("product alphabet needs at least one variable");
    Alphabet a;
    a.bases_ = base.bases_;
    a.eps_ = with_eps;
    a.vars_ = vars;
    return a;
  }

  std::size_t size() const { return base_count() << vars_.size(); }
  bool is_product() const { return !vars_.empty(); }
  bool has_eps() const { return eps_; }
  const VarList& vars() const { return vars_; }
  const std::vector<std::string>& bases() const { return bases_; }

  /// Base letters including eps.
  std::size_t base_count() const { return bases_.size() + (eps_ ? 1 : 0); }
  std::size_t eps_base() const { return bases_.size(); }

  std::size_t base_of(Letter l) const { return l >> vars_.size(); }
  std::uint32_t mask_of(Letter l) const { return l & vars_.full_mask(); }
  bool is_eps(Letter l) const { return eps_ && base_of(l) == eps_base(); }
  Letter letter(std::size_t base, std::uint32_t mask) const {
    return static_cast<Letter>((base << vars_.size()) | mask);
  }

  /// The plain alphabet of base letters (without eps).
  Alphabet base_alphabet() const { return plain(bases_); }

  std::string base_name(std::size_t b) const { return b == bases_.size() ? kEpsName : bases_[b]; }

  std::vector<std::string> var_names(std::uint32_t mask) const {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < vars_.size(); ++i)
      if ((mask >> i) & 1U)
        out.push_back(vars_.names()[i]);
    return out;
  }

  std::string letter_name(Letter l) const {
    if (!is_product())
      return bases_.at(l);
    std::ostringstream os;
    os << '(' << base_name(base_of(l)) << ",{";
    auto names = var_names(mask_of(l));
    for (std::size_t i = 0; i < names.size(); ++i)
      os << (i ? "," : "") << names[i];
    os << "})";
    return os.str();
  }

  std::optional<Letter> find(const std::string& name) const {
    if (is_product())
      return std::nullopt;
    auto it = std::find(bases_.begin(), bases_.end(), name);
    if (it == bases_.end())
      return std::nullopt;
    return static_cast<Letter>(it - bases_.begin());
  }

  Letter at(const std::string& name) const {
    auto l = find(name);
    if (!l)
      throw Error("letter '" + name + "' not in alphabet");
    return *l;
  }

  bool single_char_names() const {
    return !is_product() && std::all_of(bases_.begin(), bases_.end(), [](const auto& s) { return s.size() == 1; });
  }

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

private:
  std::vector<std::string> bases_;
  bool eps_ = false;
  VarList vars_;
};

inline void require_same(const Alphabet& a, const Alphabet& b) {
  if (!(a == b))
    throw AlphabetMismatch("operands are over different alphabets");
}

/// Concatenated letters when every name is one character, otherwise
/// space separated.
inline std::string format_word(const Alphabet& a, const Word& w) {
  std::string out;
  const bool compact = a.single_char_names();
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!compact && i)
      out += ' ';
    out += a.letter_name(w[i]);
  }
  return out;
}

inline Word parse_word(const Alphabet& a, const std::string& text) {
  Word w;
  if (a.single_char_names()) {
    for (char c : text)
      if (c != ' ')
        w.push_back(a.at(std::string(1, c)));
    return w;
  }
  std::istringstream is(text);
  std::string tok;
  while (is >> tok)
    w.push_back(a.at(tok));
  return w;
}

/// Calls f on every word of length exactly n, in lexicographic order.
template <typename F>
void for_each_word(std::size_t alphabet_size, std::size_t n, F&& f) {
  Word w(n, 0);
  while (true) {
    f(static_cast<const Word&>(w));
    std::size_t i = n;
    while (i > 0 && w[i - 1] + 1 == alphabet_size) {
      w[i - 1] = 0;
      --i;
    }
    if (i == 0)
      return;
    ++w[i - 1];
  }
}

} // namespace diffchain
