// Copyright 2026 The ceg authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <algorithm>
#include <string>
#include <vector>

#include "ceg/errors.h"
#include "ceg/game.h"
#include "ceg/game_io.h"
#include "ceg/solve.h"
#include "oracles.h"
#include "test_util.h"

namespace ceg {
namespace {

using testing::LoadFixture;
using testing::Q;
using testing::Vec;

bool HasCode(const std::vector<Diagnostic>& diags, DiagCode code) {
  return std::any_of(diags.begin(), diags.end(),
                     [code](const Diagnostic& d) { return d.code == code; });
}

// Minimal valid one-player tree the diagnostic cases mutate.
GameTree BaseTree() {
  GameTree t;
  t.players = {"p"};
  t.perspective = 0;
  t.root = "r";
  TreeNode r;
  r.kind = NodeKind::kChance;
  r.edges = {{"a", "l1", Q("1/2"), std::nullopt}, {"b", "l2", Q("1/2"), std::nullopt}};
  TreeNode l1;
  l1.kind = NodeKind::kUtility;
  l1.utility = Vec({"1"});
  TreeNode l2 = l1;
  l2.utility = Vec({"2"});
  t.nodes = {{"r", r}, {"l1", l1}, {"l2", l2}};
  return t;
}

TEST_SUITE("game_model") {

TEST_CASE("fixtures parse and validate cleanly") {
  GameTree rad = LoadFixture("radicalisation.json");
  CHECK(rad.nodes.size() == 511);
  CHECK(rad.players == std::vector<std::string>{"provider", "department"});
  CHECK(rad.variables.size() == 8);
  CHECK(Validate(rad).empty());

  GameTree oil = LoadFixture("oil.json");
  CHECK(oil.nodes.size() == 19);
  CHECK(oil.players == std::vector<std::string>{"prospector"});
  CHECK(oil.variables.empty());
  CHECK(Validate(oil).empty());
}

TEST_CASE("serialization round-trips byte for byte") {
  for (const char* name : {"radicalisation.json", "oil.json"}) {
    GameTree t = LoadFixture(name);
    std::string once = SerializeGame(t);
    GameTree back = ParseGame(once);
    CHECK(back == t);
    CHECK(SerializeGame(back) == once);
  }
}

TEST_CASE("parser rejects malformed documents") {
  CHECK_THROWS_AS(ParseGame("{"), ParseError);
  CHECK_THROWS_AS(ParseGame("[1,2]"), ParseError);
  // Unknown keys are schema violations, not silently dropped baggage.
  CHECK_THROWS_AS(ParseGame(R"({"players":["p"],"perspective":"p","root":"r",
      "nodes":{"r":{"kind":"utility","u":{"p":"0"},"colour":"red"}}})"),
                  ParseError);
  // Numbers travel as strings; a bare JSON number is a type error.
  CHECK_THROWS_AS(ParseGame(R"({"players":["p"],"perspective":"p","root":"r",
      "nodes":{"r":{"kind":"utility","u":{"p":0}}}})"),
                  ParseError);
  // Probabilities are required on chance edges and rejected elsewhere.
  CHECK_THROWS_AS(ParseGame(R"({"players":["p"],"perspective":"p","root":"r","nodes":{
      "r":{"kind":"chance","edges":[{"label":"a","to":"l"}]},
      "l":{"kind":"utility","u":{"p":"0"}}}})"),
                  ParseError);
  CHECK_THROWS_AS(ParseGame(R"({"players":["p"],"perspective":"p","root":"r","nodes":{
      "r":{"kind":"decision","owner":"p","edges":[{"label":"a","to":"l","p":"1"}]},
      "l":{"kind":"utility","u":{"p":"0"}}}})"),
                  ParseError);
  // Owner and perspective must resolve to declared players.
  CHECK_THROWS_AS(ParseGame(R"({"players":["p"],"perspective":"q","root":"r",
      "nodes":{"r":{"kind":"utility","u":{"p":"0"}}}})"),
                  ParseError);
  CHECK_THROWS_AS(ParseGame(R"({"players":["p"],"perspective":"p","root":"r","nodes":{
      "r":{"kind":"decision","owner":"q","edges":[{"label":"a","to":"l"}]},
      "l":{"kind":"utility","u":{"p":"0"}}}})"),
                  ParseError);
}

TEST_CASE("validation reports structural defects") {
  SUBCASE("unknown root") {
    GameTree t = BaseTree();
    t.root = "ghost";
    CHECK(HasCode(Validate(t), DiagCode::kUnknownRoot));
  }
  SUBCASE("dangling edge") {
    GameTree t = BaseTree();
    t.nodes.at("r").edges[0].to = "ghost";
    CHECK(HasCode(Validate(t), DiagCode::kDanglingEdge));
  }
  SUBCASE("shared child") {
    GameTree t = BaseTree();
    t.nodes.at("r").edges[1].to = "l1";
    auto diags = Validate(t);
    CHECK(HasCode(diags, DiagCode::kMultipleParents));
    CHECK(HasCode(diags, DiagCode::kUnreachable));  // l2 is now orphaned
  }
  SUBCASE("non-utility leaf") {
    GameTree t = BaseTree();
    t.nodes.at("r").edges.clear();
    CHECK(HasCode(Validate(t), DiagCode::kLeafNotUtility));
  }
  SUBCASE("utility node with edges") {
    GameTree t = BaseTree();
    t.nodes.at("l1").edges = {{"x", "l2", std::nullopt, std::nullopt}};
    CHECK(HasCode(Validate(t), DiagCode::kUtilityHasEdges));
  }
  SUBCASE("duplicate labels") {
    GameTree t = BaseTree();
    t.nodes.at("r").edges[1].label = "a";
    CHECK(HasCode(Validate(t), DiagCode::kDuplicateLabel));
  }
  SUBCASE("missing probability") {
    GameTree t = BaseTree();
    t.nodes.at("r").edges[0].prob.reset();
    CHECK(HasCode(Validate(t), DiagCode::kProbMissing));
  }
  SUBCASE("probability on a decision edge") {
    GameTree t = BaseTree();
    t.nodes.at("r").kind = NodeKind::kDecision;
    t.nodes.at("r").owner = 0;
    CHECK(HasCode(Validate(t), DiagCode::kProbUnexpected));
  }
  SUBCASE("probability out of range") {
    GameTree t = BaseTree();
    t.nodes.at("r").edges[0].prob = Q("3/2");
    t.nodes.at("r").edges[1].prob = Q("-1/2");
    auto diags = Validate(t);
    CHECK(HasCode(diags, DiagCode::kProbOutOfRange));
  }
  SUBCASE("probabilities do not sum to one") {
    GameTree t = BaseTree();
    t.nodes.at("r").edges[1].prob = Q("1/3");
    CHECK(HasCode(Validate(t), DiagCode::kProbSum));
  }
  SUBCASE("utility arity") {
    GameTree t = BaseTree();
    t.nodes.at("l1").utility = Vec({"1", "2"});
    CHECK(HasCode(Validate(t), DiagCode::kUtilityArity));
  }
  SUBCASE("edge utility arity") {
    GameTree t = BaseTree();
    t.nodes.at("r").edges[0].edge_utility = Vec({"1", "2"});
    CHECK(HasCode(Validate(t), DiagCode::kUtilityArity));
  }
  SUBCASE("bad owner") {
    GameTree t = BaseTree();
    t.nodes.at("r").kind = NodeKind::kDecision;
    t.nodes.at("r").owner = 2;
    CHECK(HasCode(Validate(t), DiagCode::kBadOwner));
  }
  SUBCASE("bad perspective") {
    GameTree t = BaseTree();
    t.perspective = 5;
    CHECK(HasCode(Validate(t), DiagCode::kBadPerspective));
  }
  SUBCASE("bad player list") {
    GameTree t = BaseTree();
    t.players = {"p", "p"};
    CHECK(HasCode(Validate(t), DiagCode::kBadPlayerName));
  }
  SUBCASE("unknown variable") {
    GameTree t = BaseTree();
    t.variables = {"va"};
    t.nodes.at("r").var = "zzz";
    CHECK(HasCode(Validate(t), DiagCode::kUnknownVariable));
  }
  SUBCASE("variable order violation") {
    GameTree t = BaseTree();
    t.variables = {"v1", "v2"};
    t.nodes.at("r").var = "v2";
    TreeNode m;
    m.kind = NodeKind::kChance;
    m.var = "v1";
    m.edges = {{"c", "l2", Q("1"), std::nullopt}};
    t.nodes["m"] = m;
    t.nodes.at("r").edges[1].to = "m";
    CHECK(HasCode(Validate(t), DiagCode::kVariableOrder));
  }
}

TEST_CASE("pushing edge utilities preserves every policy's value") {
  GameTree oil = LoadFixture("oil.json");
  GameTree pushed = PushEdgeUtilitiesToLeaves(oil);
  CHECK(Validate(pushed).empty());
  for (const auto& [id, node] : pushed.nodes) {
    for (const TreeEdge& e : node.edges) CHECK_FALSE(e.edge_utility.has_value());
  }

  // Hand-pushed leaf values along each path of the oil venture.
  auto leaf = [&pushed](const char* id) { return pushed.nodes.at(id).utility; };
  CHECK(leaf("leaf_pg") == Vec({"20"}));
  CHECK(leaf("leaf_sg") == Vec({"30"}));
  CHECK(leaf("leaf_og1") == Vec({"60"}));
  CHECK(leaf("leaf_og0") == Vec({"-40"}));
  CHECK(leaf("leaf_ob1_1") == Vec({"60"}));
  CHECK(leaf("leaf_ob1_0") == Vec({"-40"}));
  CHECK(leaf("leaf_sb1") == Vec({"0"}));
  CHECK(leaf("leaf_ob2_1") == Vec({"90"}));
  CHECK(leaf("leaf_ob2_0") == Vec({"-10"}));
  CHECK(leaf("leaf_sb2") == Vec({"30"}));

  // Policy-value invariance, checked across the full policy space via the
  // independent evaluator (which folds edge utilities in on the fly).
  auto policies = EnumerateTreePolicies(pushed);
  CHECK(policies.size() == 16);  // four binary decisions
  for (const auto& [policy, value] : policies) {
    auto before = testing::EvaluateTreePolicy(oil, policy);
    auto after = testing::EvaluateTreePolicy(pushed, policy);
    CHECK(before.at(oil.root) == after.at(pushed.root));
    CHECK(after.at(pushed.root) == value);
  }
}

TEST_CASE("pushing is the identity on leaf-utility documents") {
  GameTree rad = LoadFixture("radicalisation.json");
  CHECK(PushEdgeUtilitiesToLeaves(rad) == rad);
}

}  // TEST_SUITE

}  // namespace
}  // namespace ceg
