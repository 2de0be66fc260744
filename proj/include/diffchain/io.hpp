#pragma once

// JSON encodings of posets, automata and traces (nlohmann/json).

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "diffchain/alphabet.hpp"
#include "diffchain/dfa.hpp"
#include "diffchain/diff_chain.hpp"
#include "diffchain/errors.hpp"
#include "diffchain/pi1_closure.hpp"
#include "diffchain/poset.hpp"

namespace diffchain::io {

using nlohmann::json;

struct LabeledPoset {
  FinPoset poset;
  std::vector<std::string> labels;

  std::string label(std::size_t i) const { return i < labels.size() ? labels[i] : std::to_string(i); }
};

inline LabeledPoset poset_from_json(const json& j) {
  try {
    const auto n = j.at("n").get<std::size_t>();
    std::vector<std::pair<std::size_t, std::size_t>> covers;
    for (const auto& c : j.at("covers")) {
      if (!c.is_array() || c.size() != 2)
        throw ParseError("each cover must be a pair [i, j]");
      covers.emplace_back(c[0].get<std::size_t>(), c[1].get<std::size_t>());
    }
    LabeledPoset out{FinPoset::from_covers(n, covers), {}};
    if (j.contains("labels")) {
      out.labels = j.at("labels").get<std::vector<std::string>>();
      if (out.labels.size() != n)
        throw ParseError("labels must have one entry per element");
    }
    return out;
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad poset JSON: ") + e.what());
  }
}

inline json poset_to_json(const LabeledPoset& p) {
  json covers = json::array();
  for (auto [a, b] : p.poset.covers())
    covers.push_back({a, b});
  json j{{"n", p.poset.size()}, {"covers", covers}};
  if (!p.labels.empty())
    j["labels"] = p.labels;
  return j;
}

inline json set_to_json(ElemSet s) { return s.members(); }

/// {"V", "m", "K", "degrees"} for the canonical chain of V.
inline json chain_to_json(const FinPoset& p, ElemSet v) {
  const auto deg = degrees(p, v);
  const auto chain = canonical_chain(p, v);
  json k = json::array();
  for (ElemSet s : chain.sets)
    k.push_back(set_to_json(s));
  return json{{"V", set_to_json(v)}, {"m", chain.pairs()}, {"K", k}, {"degrees", deg}};
}

inline json letter_to_json(const Alphabet& a, Letter l) {
  if (!a.is_product())
    return a.letter_name(l);
  return json{{"base", a.base_name(a.base_of(l))}, {"vars", a.var_names(a.mask_of(l))}};
}

inline json dfa_to_json(const Dfa& d) {
  json alphabet = json::array();
  for (Letter l = 0; l < d.alphabet().size(); ++l)
    alphabet.push_back(letter_to_json(d.alphabet(), l));
  json accepting = json::array();
  json delta = json::array();
  for (State s = 0; s < d.states(); ++s) {
    if (d.accepting(s))
      accepting.push_back(s);
    json row = json::array();
    for (Letter l = 0; l < d.alphabet().size(); ++l)
      row.push_back(d.next(s, l));
    delta.push_back(row);
  }
  json j{{"alphabet", alphabet}, {"states", d.states()}, {"start", d.start()},
         {"accepting", accepting}, {"delta", delta}};
  if (d.alphabet().is_product()) {
    j["bases"] = d.alphabet().bases();
    j["vars"] = d.alphabet().vars().names();
  }
  return j;
}

namespace detail {

/// Product letters may come in any order. Base and variable order is taken
/// from the optional "bases" and "vars" fields, else from first appearance.
inline Alphabet alphabet_from_json(const json& j, std::vector<Letter>& column_letter) {
  const json& letters = j.at("alphabet");
  if (!letters.is_array() || letters.empty())
    throw ParseError("alphabet must be a nonempty array");
  column_letter.clear();
  if (letters.front().is_string()) {
    std::vector<std::string> names;
    for (const auto& l : letters) {
      if (!l.is_string())
        throw ParseError("alphabet mixes plain and product letters");
      names.push_back(l.get<std::string>());
    }
    Alphabet a = Alphabet::plain(names);
    for (Letter l = 0; l < names.size(); ++l)
      column_letter.push_back(l);
    return a;
  }
  std::vector<std::string> bases, vars;
  if (j.contains("bases"))
    bases = j.at("bases").get<std::vector<std::string>>();
  if (j.contains("vars"))
    vars = j.at("vars").get<std::vector<std::string>>();
  const std::size_t declared_bases = bases.size(), declared_vars = vars.size();
  bool eps = false;
  std::vector<std::pair<std::string, std::vector<std::string>>> parsed;
  for (const auto& l : letters) {
    if (!l.is_object())
      throw ParseError("alphabet mixes plain and product letters");
    auto base = l.at("base").get<std::string>();
    auto vs = l.at("vars").get<std::vector<std::string>>();
    if (base == kEpsName)
      eps = true;
    else if (std::find(bases.begin(), bases.end(), base) == bases.end())
      bases.push_back(base);
    for (const auto& v : vs)
      if (std::find(vars.begin(), vars.end(), v) == vars.end())
        vars.push_back(v);
    parsed.emplace_back(std::move(base), std::move(vs));
  }
  if ((declared_bases && bases.size() != declared_bases) || (declared_vars && vars.size() != declared_vars))
    throw ParseError("product letter uses a base or variable missing from the declared lists");
  Alphabet a = Alphabet::product(Alphabet::plain(bases), VarList(vars), eps);
  if (parsed.size() != a.size())
    throw ParseError("product alphabet must list every (base, vars) combination exactly once");
  std::vector<bool> seen(a.size(), false);
  for (const auto& [base, vs] : parsed) {
    const std::size_t b = base == kEpsName ? a.eps_base() : static_cast<std::size_t>(
                                                              std::find(bases.begin(), bases.end(), base) - bases.begin());
    std::uint32_t mask = 0;
    for (const auto& v : vs)
      mask |= std::uint32_t{1} << (std::find(vars.begin(), vars.end(), v) - vars.begin());
    const Letter l = a.letter(b, mask);
    if (seen[l])
      throw ParseError("duplicate product letter");
    seen[l] = true;
    column_letter.push_back(l);
  }
  return a;
}

} // namespace detail

inline Dfa dfa_from_json(const json& j) {
  try {
    std::vector<Letter> column_letter;
    Alphabet a = detail::alphabet_from_json(j, column_letter);
    const auto n = j.at("states").get<std::size_t>();
    const auto start = j.at("start").get<State>();
    const auto& rows = j.at("delta");
    if (!rows.is_array() || rows.size() != n)
      throw ParseError("delta must have one row per state");
    std::vector<State> delta(n * a.size());
    for (std::size_t s = 0; s < n; ++s) {
      const auto& row = rows[s];
      if (!row.is_array() || row.size() != a.size())
        throw ParseError("delta row " + std::to_string(s) + " must have one entry per letter");
      for (std::size_t c = 0; c < a.size(); ++c)
        delta[s * a.size() + column_letter[c]] = row[c].get<State>();
    }
    std::vector<bool> acc(n, false);
    for (const auto& s : j.at("accepting")) {
      const auto q = s.get<std::size_t>();
      if (q >= n)
        throw ParseError("accepting state out of range");
      acc[q] = true;
    }
    return Dfa(std::move(a), n, start, std::move(delta), std::move(acc));
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad DFA JSON: ") + e.what());
  }
}

inline json trace_to_json(const ChainTrace& t) {
  json chain = json::array();
  for (const auto& c : t.c)
    chain.push_back(dfa_to_json(c));
  json diffs = json::array();
  for (const auto& d : t.witness_diffs())
    diffs.push_back(dfa_to_json(d));
  return json{{"k", t.k},
              {"m", t.m ? json(*t.m) : json(nullptr)},
              {"status", to_string(t.status)},
              {"chain", chain},
              {"witness_diffs", diffs}};
}

} // namespace diffchain::io
