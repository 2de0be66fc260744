#include <gtest/gtest.h>

#include "diffchain/io.hpp"
#include "diffchain/structures.hpp"
#include "fixtures.hpp"

using namespace diffchain;
using namespace fixtures;
using nlohmann::json;

TEST(PosetJson, RoundTrip) {
  auto j = json::parse(R"({"n": 3, "covers": [[0, 1], [1, 2]], "labels": ["lo", "mid", "hi"]})");
  auto p = io::poset_from_json(j);
  EXPECT_EQ(p.poset, FinPoset::chain(3));
  EXPECT_EQ(p.label(2), "hi");
  EXPECT_EQ(io::poset_to_json(p), j);
}

TEST(PosetJson, Errors) {
  EXPECT_THROW(io::poset_from_json(json::parse(R"({"covers": []})")), ParseError);
  EXPECT_THROW(io::poset_from_json(json::parse(R"({"n": 2, "covers": [[0]]})")), ParseError);
  EXPECT_THROW(io::poset_from_json(json::parse(R"({"n": 2, "covers": [], "labels": ["x"]})")), ParseError);
  EXPECT_THROW(io::poset_from_json(json::parse(R"({"n": 2, "covers": [[0, 1], [1, 0]]})")), CycleError);
}

TEST(ChainJson, ChainOfThree) {
  auto j = io::chain_to_json(FinPoset::chain(3), ElemSet::of({0, 2}));
  EXPECT_EQ(j, json::parse(R"({"V": [0, 2], "m": 2, "K": [[0, 1, 2], [1, 2], [2], []], "degrees": [1, 2, 3]})"));
}

TEST(DfaJson, PlainRoundTrip) {
  for (const auto& d : {a_plus(), ab_star(), single_ab()}) {
    auto back = io::dfa_from_json(io::dfa_to_json(d));
    EXPECT_EQ(back, d);
  }
}

TEST(DfaJson, ProductRoundTrip) {
  auto d = minimize(tensor(a_plus(), VarList::numbered(2)));
  auto j = io::dfa_to_json(d);
  EXPECT_EQ(j["alphabet"][1], json::parse(R"({"base": "a", "vars": ["x1"]})"));
  EXPECT_EQ(io::dfa_from_json(j), d);
}

TEST(DfaJson, ProductLettersInAnyOrder) {
  auto th = theta(VarList::numbered(1), ab());
  auto d = minimize(forward_lp_image(th, tensor(a_plus(), VarList::numbered(1))));
  auto j = io::dfa_to_json(d);
  // Reverse the letter columns and the alphabet together.
  std::reverse(j["alphabet"].begin(), j["alphabet"].end());
  for (auto& row : j["delta"])
    std::reverse(row.begin(), row.end());
  EXPECT_EQ(io::dfa_from_json(j), d);
}

TEST(DfaJson, Errors) {
  EXPECT_THROW(io::dfa_from_json(json::parse(R"({"alphabet": ["a"], "states": 1, "start": 0})")), ParseError);
  EXPECT_THROW(io::dfa_from_json(json::parse(
                   R"({"alphabet": ["a"], "states": 1, "start": 0, "accepting": [3], "delta": [[0]]})")),
               ParseError);
  EXPECT_THROW(io::dfa_from_json(json::parse(
                   R"({"alphabet": ["a", "b"], "states": 1, "start": 0, "accepting": [], "delta": [[0]]})")),
               ParseError);
  EXPECT_THROW(io::dfa_from_json(json::parse(
                   R"({"alphabet": ["a"], "states": 1, "start": 0, "accepting": [], "delta": [[4]]})")),
               RangeError);
  EXPECT_THROW(io::dfa_from_json(json::parse(
                   R"({"alphabet": [{"base": "a", "vars": []}], "states": 1, "start": 0, "accepting": [], "delta": [[0]]})")),
               Error);
}

TEST(TraceJson, Fields) {
  auto j = io::trace_to_json(chain_trace(contains_b(), 1, 2));
  EXPECT_EQ(j["k"], 1);
  EXPECT_EQ(j["m"], 1);
  EXPECT_EQ(j["status"], "success");
  EXPECT_EQ(j["chain"].size(), 2u);
  EXPECT_EQ(j["witness_diffs"].size(), 1u);
  auto failed = io::trace_to_json(chain_trace(a_plus_or_b_plus(), 1, 2));
  EXPECT_TRUE(failed["m"].is_null());
  EXPECT_EQ(failed["status"], "exhausted");
}
