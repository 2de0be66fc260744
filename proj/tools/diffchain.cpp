// diffchain: command-line front end. JSON in, JSON (and optionally DOT)
// out. Exit codes: 0 success or verdict true, 1 verdict false or search
// exhausted, 2 input error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "diffchain/birkhoff.hpp"
#include "diffchain/diff_chain.hpp"
#include "diffchain/io.hpp"
#include "diffchain/oracle.hpp"
#include "diffchain/pi1_closure.hpp"

using namespace diffchain;
using nlohmann::json;

namespace {

constexpr int kOk = 0;
constexpr int kNo = 1;
constexpr int kBadInput = 2;

json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw ParseError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out)
    throw ParseError("cannot write " + path);
  out << text;
}

void emit(const json& j) { std::cout << j.dump(2) << '\n'; }

Limits limits_from_env() {
  Limits lim;
  if (const char* cap = std::getenv("DIFFCHAIN_STATE_CAP")) {
    try {
      std::size_t used = 0;
      const long long v = std::stoll(cap, &used);
      if (used != std::string(cap).size() || v <= 0)
        throw std::invalid_argument(cap);
      lim.state_cap = static_cast<std::size_t>(v);
    } catch (const std::exception&) {
      throw ParseError(std::string("DIFFCHAIN_STATE_CAP must be a positive integer, got '") + cap + "'");
    }
  }
  return lim;
}

/// "0,2", "x,y" (labels) or "" for the empty set.
ElemSet parse_set(const io::LabeledPoset& p, std::string text) {
  if (text.size() >= 2 && text.front() == '{' && text.back() == '}')
    text = text.substr(1, text.size() - 2);
  ElemSet s;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    tok.erase(0, tok.find_first_not_of(" \t"));
    tok.erase(tok.find_last_not_of(" \t") + 1);
    if (tok.empty())
      continue;
    auto it = std::find(p.labels.begin(), p.labels.end(), tok);
    if (it != p.labels.end()) {
      s.insert(static_cast<std::size_t>(it - p.labels.begin()));
      continue;
    }
    std::size_t used = 0;
    std::size_t x = 0;
    try {
      x = std::stoul(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size())
      throw ParseError("unknown element '" + tok + "'");
    if (x >= p.poset.size())
      throw RangeError("element " + tok + " out of range");
    s.insert(x);
  }
  return s;
}

json word_json(const Alphabet& a, const std::optional<Word>& w) {
  return w ? json(format_word(a, *w)) : json(nullptr);
}

int poset_chain(const std::string& file, const std::string& set, const std::string& dot) {
  const auto p = io::poset_from_json(read_json(file));
  const ElemSet v = parse_set(p, set);
  json out = io::chain_to_json(p.poset, v);
  const DiffChain chain = canonical_chain(p.poset, v);
  const bool ok = evaluate(p.poset, chain) == v;
  out["reconstructed"] = ok;
  if (!p.labels.empty())
    out["labels"] = p.labels;
  if (!dot.empty())
    write_text(dot, hasse_dot(p.poset, p.labels));
  emit(out);
  return ok ? kOk : kNo;
}

int poset_upsets(const std::string& file, const std::string& dot) {
  const auto p = io::poset_from_json(read_json(file));
  const auto lattice = upsets_of(p.poset);
  json ups = json::array();
  for (ElemSet u : lattice.elements)
    ups.push_back(io::set_to_json(u));
  const FinPoset ji = join_irreducibles(lattice);
  json out{{"count", lattice.elements.size()},
           {"upsets", ups},
           {"join_irreducibles_isomorphic", isomorphic(ji, p.poset)}};
  if (!dot.empty())
    write_text(dot, hasse_dot(p.poset, p.labels));
  emit(out);
  return kOk;
}

int lang_closure(const std::string& file, std::size_t k, const std::string& dot) {
  const Limits lim = limits_from_env();
  const Dfa lang = io::dfa_from_json(read_json(file));
  const Dfa c = pi1_closure(lang, k, lim);
  json out{{"k", k}, {"closed", equivalent(c, lang)}, {"closure", io::dfa_to_json(c)}};
  if (!dot.empty())
    write_text(dot, dfa_dot(c));
  emit(out);
  return kOk;
}

int lang_decompose(const std::string& file, std::size_t max_k, std::size_t max_m, const std::string& dot) {
  const Limits lim = limits_from_env();
  const Dfa b = io::dfa_from_json(read_json(file));
  const auto d = decompose_bpi1(b, max_k, max_m, lim);
  json attempts = json::array();
  for (const auto& t : d.attempts)
    attempts.push_back({{"k", t.k}, {"status", to_string(t.status)}, {"pairs_built", t.c.size() / 2}});
  json out{{"success", d.success}, {"trace", io::trace_to_json(d.trace)}, {"attempts", attempts}};
  if (!dot.empty()) {
    std::string text;
    for (const auto& c : d.trace.c)
      text += dfa_dot(c);
    write_text(dot, text);
  }
  emit(out);
  return d.success ? kOk : kNo;
}

int lang_eq(const std::vector<std::string>& files) {
  if (files.size() != 2)
    throw ParseError("lang eq needs exactly two --dfa files");
  const Dfa a = io::dfa_from_json(read_json(files[0]));
  const Dfa b = io::dfa_from_json(read_json(files[1]));
  require_same(a.alphabet(), b.alphabet());
  const auto diff = shortest_word(product(a, b, BoolOp::Xor));
  emit(json{{"equivalent", !diff}, {"counterexample", word_json(a.alphabet(), diff)}});
  return diff ? kNo : kOk;
}

struct SuiteResult {
  std::size_t cases = 0;
  std::size_t disagreements = 0;
  json first = nullptr;
};

SuiteResult suite_closure(std::size_t max_len, std::uint64_t seed, const Limits& lim) {
  SuiteResult r;
  std::mt19937_64 rng(seed);
  const Alphabet a = Alphabet::plain({"a", "b"});
  for (int i = 0; i < 20; ++i) {
    const Dfa lang = oracle::random_dfa(rng, a, 4);
    for (std::size_t k = 1; k <= 2; ++k) {
      const Dfa c = pi1_closure(lang, k, lim);
      oracle::WordUniverse{a, max_len}.for_each([&](const Word& w) {
        ++r.cases;
        if (c.accepts(w) != oracle::brute_pi1_closure_member(lang, k, w)) {
          if (r.first.is_null())
            r.first = {{"case", i}, {"k", k}, {"word", format_word(a, w)}, {"dfa", io::dfa_to_json(lang)}};
          ++r.disagreements;
        }
      });
    }
  }
  return r;
}

SuiteResult suite_image(std::size_t max_len, std::uint64_t seed, const Limits& lim) {
  SuiteResult r;
  std::mt19937_64 rng(seed);
  const Alphabet a = Alphabet::plain({"a", "b", "c"});
  const Alphabet t = Alphabet::plain({"x", "y"});
  for (int i = 0; i < 20; ++i) {
    const Dfa lang = oracle::random_dfa(rng, a, 4);
    const LpHom h = oracle::random_lp_hom(rng, a, t);
    const Dfa img = forward_lp_image(h, lang, lim.state_cap);
    for (std::size_t n = 1; n <= max_len; ++n)
      for_each_word(t.size(), n, [&](const Word& v) {
        bool hit = false;
        for_each_word(a.size(), n, [&](const Word& w) { hit = hit || (h.apply(w) == v && lang.accepts(w)); });
        ++r.cases;
        if (img.accepts(v) != hit) {
          if (r.first.is_null())
            r.first = {{"case", i}, {"word", format_word(t, v)}};
          ++r.disagreements;
        }
      });
  }
  return r;
}

SuiteResult suite_chain(std::size_t max_size) {
  SuiteResult r;
  for (std::size_t n = 0; n <= std::min<std::size_t>(max_size, 5); ++n)
    for (const auto& p : oracle::posets_up_to_iso(n))
      for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
        const ElemSet v(bits);
        const auto deg = degrees(p, v);
        bool ok = evaluate(p, canonical_chain(p, v)) == v;
        for (std::size_t x = 0; x < n; ++x)
          ok = ok && deg[x] == oracle::brute_degree(p, v, x);
        ++r.cases;
        if (!ok) {
          if (r.first.is_null())
            r.first = {{"poset", io::poset_to_json({p, {}})}, {"V", io::set_to_json(v)}};
          ++r.disagreements;
        }
      }
  return r;
}

int verify(const std::string& suite, std::size_t max_len, std::uint64_t seed) {
  const Limits lim = limits_from_env();
  SuiteResult r;
  if (suite == "closure")
    r = suite_closure(max_len, seed, lim);
  else if (suite == "image")
    r = suite_image(max_len, seed, lim);
  else if (suite == "chain")
    r = suite_chain(max_len);
  else
    throw ParseError("unknown suite '" + suite + "' (expected closure, image or chain)");
  emit(json{{"suite", suite},
            {"seed", seed},
            {"max_len", max_len},
            {"cases", r.cases},
            {"disagreements", r.disagreements},
            {"first_disagreement", r.first}});
  return r.disagreements == 0 ? kOk : kNo;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Difference chains over posets and regular languages"};
  app.require_subcommand(1);

  std::string poset_file, set_text, dot, dfa_file, suite = "closure";
  std::vector<std::string> dfa_files;
  std::size_t k = 1, max_k = 2, max_m = 2, max_len = 6;
  std::uint64_t seed = 1;

  auto* poset = app.add_subcommand("poset", "posets and their upset lattices");
  poset->require_subcommand(1);
  auto* chain = poset->add_subcommand("chain", "canonical difference chain of a subset");
  chain->add_option("--poset", poset_file, "poset JSON file")->required();
  chain->add_option("--set", set_text, "subset V as comma-separated indices or labels")->required();
  chain->add_option("--dot", dot, "write the Hasse diagram here");
  auto* upsets = poset->add_subcommand("upsets", "enumerate the upset lattice");
  upsets->add_option("--poset", poset_file, "poset JSON file")->required();
  upsets->add_option("--dot", dot, "write the Hasse diagram here");

  auto* lang = app.add_subcommand("lang", "regular languages given by DFA JSON");
  lang->require_subcommand(1);
  auto* closure = lang->add_subcommand("closure", "closure under k-variable universal sentences");
  closure->add_option("--dfa", dfa_file, "DFA JSON file")->required();
  closure->add_option("--k", k, "number of variables")->required()->check(CLI::PositiveNumber);
  closure->add_option("--dot", dot, "write the closure automaton here");
  auto* decompose = lang->add_subcommand("decompose", "search for a difference chain of closed languages");
  decompose->add_option("--dfa", dfa_file, "DFA JSON file")->required();
  decompose->add_option("--max-k", max_k, "largest k to try")->check(CLI::PositiveNumber);
  decompose->add_option("--max-m", max_m, "largest number of pairs")->check(CLI::PositiveNumber);
  decompose->add_option("--dot", dot, "write the chain automata here");
  auto* eq = lang->add_subcommand("eq", "language equivalence");
  eq->add_option("--dfa", dfa_files, "two DFA JSON files")->required()->expected(2);

  auto* ver = app.add_subcommand("verify", "cross-check against brute-force oracles");
  ver->add_option("--suite", suite, "closure, image or chain");
  ver->add_option("--max-len", max_len, "longest word checked (chain: largest poset)");
  ver->add_option("--seed", seed, "random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kBadInput;
  }

  try {
    if (chain->parsed())
      return poset_chain(poset_file, set_text, dot);
    if (upsets->parsed())
      return poset_upsets(poset_file, dot);
    if (closure->parsed())
      return lang_closure(dfa_file, k, dot);
    if (decompose->parsed())
      return lang_decompose(dfa_file, max_k, max_m, dot);
    if (eq->parsed())
      return lang_eq(dfa_files);
    if (ver->parsed())
      return verify(suite, max_len, seed);
  } catch (const std::exception& e) {
    std::cerr << "diffchain: " << e.what() << '\n';
    return kBadInput;
  }
  return kBadInput;
}
