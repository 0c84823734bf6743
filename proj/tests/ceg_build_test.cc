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
#include <map>
#include <set>
#include <string>
#include <vector>

#include "ceg/ceg.h"
#include "ceg/game.h"
#include "ceg/game_io.h"
#include "ceg/generator.h"
#include "oracles.h"
#include "test_util.h"

namespace ceg {
namespace {

using testing::LoadFixture;

// The production partition and the brute-force pairwise partition key
// every class by its smallest member, so they must agree as maps.
void CheckPositionsAgainstOracle(const GameTree& t) {
  PositionPartition got = ComputePositions(t);
  std::map<NodeId, NodeId> want = testing::BruteForcePositions(t);
  CHECK(got.position_of == want);
  for (const auto& [key, ids] : got.members) {
    CHECK(std::is_sorted(ids.begin(), ids.end()));
    CHECK(ids.front() == key);
  }
}

TEST_SUITE("ceg_build") {

TEST_CASE("positions match the pairwise subtree oracle") {
  CheckPositionsAgainstOracle(LoadFixture("oil.json"));
  CheckPositionsAgainstOracle(PushEdgeUtilitiesToLeaves(LoadFixture("oil.json")));
  CheckPositionsAgainstOracle(LoadFixture("radicalisation.json"));
  for (uint64_t seed : {1, 2, 3, 4}) {
    GameTree g = GenerateGame({seed, false});
    CheckPositionsAgainstOracle(g);
    CheckPositionsAgainstOracle(PushEdgeUtilitiesToLeaves(g));
  }
}

TEST_CASE("edge utilities keep observationally distinct vertices apart") {
  GameTree oil = LoadFixture("oil.json");
  Ceg as_given = BuildCeg(oil);
  CHECK(as_given.nodes.size() == 9);
  CHECK(HasEdgeUtilities(as_given));

  // The two post-bad-result decisions offer identical futures as written
  // (drill against the same odds or sell), so they share a position even
  // though one sits on the pass branch and one on the test branch.
  PositionPartition p = ComputePositions(oil);
  CHECK(p.position_of.at("d_bad_own") == p.position_of.at("d_bad_rev"));
  CHECK(as_given.nodes.at("d_bad_own").members ==
        std::vector<NodeId>{"d_bad_own", "d_bad_rev"});

  // Pushing bakes the different accumulated path utilities into the
  // leaves, which splits the pair.
  GameTree pushed = PushEdgeUtilitiesToLeaves(oil);
  Ceg after = BuildCeg(pushed);
  CHECK(after.nodes.size() == 16);
  CHECK_FALSE(HasEdgeUtilities(after));
  PositionPartition q = ComputePositions(pushed);
  CHECK(q.position_of.at("d_bad_own") != q.position_of.at("d_bad_rev"));
}

TEST_CASE("stage partition of the radicalisation tree") {
  GameTree rad = LoadFixture("radicalisation.json");
  StagePartition stages = ComputeStages(rad);

  std::vector<NodeId> response;
  for (const auto& [id, node] : rad.nodes) {
    if (node.var && *node.var == "rg_response") response.push_back(id);
  }
  CHECK(response.size() == 16);

  // The response distribution depends on the two first-round decisions
  // only, so vertices 1, 2, 9, 10 of the sorted level share a stage: they
  // agree on those decisions and differ in the chance history.
  CHECK(stages.stage_of.at(response[0]) == stages.stage_of.at(response[1]));
  CHECK(stages.stage_of.at(response[0]) == stages.stage_of.at(response[8]));
  CHECK(stages.stage_of.at(response[0]) == stages.stage_of.at(response[9]));
  CHECK(stages.stage_of.at(response[0]) != stages.stage_of.at(response[2]));

  std::set<int> response_stages;
  for (const NodeId& id : response) response_stages.insert(stages.stage_of.at(id));
  CHECK(response_stages.size() == 4);

  std::set<int> disclosure_stages;
  int disclosure_count = 0;
  for (const auto& [id, node] : rad.nodes) {
    if (node.var && *node.var == "vp_disclosure") {
      disclosure_stages.insert(stages.stage_of.at(id));
      ++disclosure_count;
    }
  }
  CHECK(disclosure_count == 128);
  CHECK(disclosure_stages.size() == 4);
}

TEST_CASE("positions refine stages") {
  for (const char* name : {"radicalisation.json", "oil.json"}) {
    GameTree t = LoadFixture(name);
    StagePartition stages = ComputeStages(t);
    PositionPartition positions = ComputePositions(t);
    for (const auto& [key, ids] : positions.members) {
      if (t.nodes.at(key).kind == NodeKind::kUtility) continue;
      for (const NodeId& id : ids) {
        CHECK(stages.stage_of.at(id) == stages.stage_of.at(key));
      }
    }
  }
}

TEST_CASE("the coarsest graph keeps parallel edges") {
  GameTree rad = LoadFixture("radicalisation.json");
  Ceg g = BuildCeg(rad);
  CHECK(g.nodes.size() == 36);

  // On the cut-contact side both disclosure outcomes reach the same flat
  // payoff, so those chance positions carry two parallel edges. Building
  // must not merge them; that is simplification's job.
  bool found_parallel = false;
  for (const auto& [key, node] : g.nodes) {
    std::set<std::string> targets;
    for (const CegEdge& e : node.edges) {
      CHECK(e.labels.size() == 1);  // merging only happens in simplify
      if (!targets.insert(e.to).second) found_parallel = true;
    }
  }
  CHECK(found_parallel);
}

TEST_CASE("canonical order is topological with utilities last") {
  for (const char* name : {"radicalisation.json", "oil.json"}) {
    Ceg g = BuildCeg(LoadFixture(name));
    std::vector<std::string> order = CanonicalOrder(g);
    CHECK(order.size() == g.nodes.size());
    CHECK(order.front() == g.root);
    std::map<std::string, size_t> index;
    for (size_t i = 0; i < order.size(); ++i) index[order[i]] = i;
    size_t first_utility = order.size();
    for (size_t i = 0; i < order.size(); ++i) {
      if (g.nodes.at(order[i]).kind == NodeKind::kUtility) {
        first_utility = std::min(first_utility, i);
      } else {
        CHECK(i < first_utility);  // no inner node after a sink
      }
      for (const CegEdge& e : g.nodes.at(order[i]).edges) {
        CHECK(index.at(e.to) > i);
      }
    }
  }
}

TEST_CASE("canonical hash sees structure, not naming") {
  std::string text = testing::ReadFileOrThrow(std::string(CEG_FIXTURE_DIR) + "/oil.json");
  Ceg original = BuildCeg(ParseGame(text));
  CHECK(CanonicalHash(original) == CanonicalHash(BuildCeg(ParseGame(text))));

  // Renaming a node relabels keys and members but not the structure.
  std::string renamed = text;
  size_t at;
  while ((at = renamed.find("d_bad_own")) != std::string::npos) {
    renamed.replace(at, 9, "x_bad_own");
  }
  Ceg other = BuildCeg(ParseGame(renamed));
  CHECK(CanonicalHash(other) == CanonicalHash(original));
  CHECK(CegToJson(other) != CegToJson(original));  // keys differ, shape equal

  // A payoff perturbation is structural.
  std::string bumped = text;
  at = bumped.find("\"100\"");
  REQUIRE(at != std::string::npos);
  bumped.replace(at, 5, "\"101\"");
  CHECK(CanonicalHash(BuildCeg(ParseGame(bumped))) != CanonicalHash(original));
}

TEST_CASE("ceg stages mirror the tree stages") {
  Ceg g = BuildCeg(LoadFixture("oil.json"));
  CegStagePartition stages = ComputeCegStages(g);
  // Both option-test lotteries draw good/bad at the same odds.
  CHECK(stages.stage_of.at("c_pass") == stages.stage_of.at("c_test"));
  CHECK(stages.stage_of.at("c_oil_good") != stages.stage_of.at("c_oil_bad1"));
}

TEST_CASE("rendered graph json is deterministic") {
  Ceg g = BuildCeg(LoadFixture("radicalisation.json"));
  CHECK(CegToJson(g) == CegToJson(g));
  CHECK(CegToJson(g).find("\"node_count\": 36") != std::string::npos);
}

}  // TEST_SUITE

}  // namespace
}  // namespace ceg
