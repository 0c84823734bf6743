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
#include <json.hpp>

#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "ceg/ceg.h"
#include "ceg/game.h"
#include "ceg/generator.h"
#include "ceg/simplify.h"
#include "ceg/solve.h"
#include "oracles.h"
#include "test_util.h"

namespace ceg {
namespace {

using testing::LoadFixture;
using testing::Vec;

Ceg PushedRadCeg() {
  return BuildCeg(PushEdgeUtilitiesToLeaves(LoadFixture("radicalisation.json")));
}

// Applies admissible rewrites in a random order until none is left. Each
// round offers every currently barren position and every coalescible
// class; one is drawn and applied. Confluence of the rewrite system means
// any such run must land on the parsimonious form.
Ceg RandomizedFixpoint(const Ceg& start, uint64_t seed) {
  std::mt19937_64 rng(seed);
  Ceg g = NormalizeParallelEdges(start);
  for (;;) {
    std::vector<std::string> barren = FindBarren(g);
    SimplificationTrace classes = CoalescePositions(g).second;
    size_t total = barren.size() + classes.size();
    if (total == 0) return g;
    size_t pick = std::uniform_int_distribution<size_t>(0, total - 1)(rng);
    if (pick < barren.size()) {
      g = DeleteBarren(g, barren[pick]);
    } else {
      g = MergePositions(g, classes[pick - barren.size()].positions);
    }
  }
}

TEST_SUITE("simplify") {

TEST_CASE("radicalisation reduces to its parsimonious form") {
  auto [g, trace] = Parsimonize(PushedRadCeg());

  CHECK(g.root == "n1");
  CHECK(g.nodes.size() == 17);
  int decisions = 0, chances = 0, utilities = 0;
  for (const auto& [key, node] : g.nodes) {
    if (node.kind == NodeKind::kDecision) ++decisions;
    if (node.kind == NodeKind::kChance) ++chances;
    if (node.kind == NodeKind::kUtility) ++utilities;
  }
  CHECK(decisions == 6);
  CHECK(chances == 8);
  CHECK(utilities == 3);

  // The surviving keys: both first-round decision levels collapse across
  // the contact lottery, the wariness level and the whole cut-contact
  // subtree fold away, and three payoff sinks remain.
  std::set<std::string> keys;
  for (const auto& [key, node] : g.nodes) keys.insert(key);
  CHECK(keys == std::set<std::string>{
      "n1", "n11", "n12", "n1111", "n1121", "n1211", "n1221", "n11111",
      "n111111", "n111112", "n1111111", "n1111112", "n1111121", "n1111122",
      "n11111111", "n11111112", "n11112111"});
  CHECK(g.nodes.at("n1").members == std::vector<NodeId>{"n1", "n2"});
  CHECK(g.nodes.at("n11").members == std::vector<NodeId>{"n11", "n21"});
  CHECK(g.nodes.at("n11112111").utility == Vec({"-10", "10"}));

  // 15 barren deletions cascade up the cut-contact side and through the
  // wariness level, three coalesces fold the first round, and deleting
  // the degenerate root finishes the job.
  int barren = 0, coalesce = 0;
  for (const TraceStep& s : trace) {
    if (s.kind == TraceStep::Kind::kBarren) ++barren;
    if (s.kind == TraceStep::Kind::kCoalesce) ++coalesce;
  }
  CHECK(barren == 16);
  CHECK(coalesce == 3);
  CHECK(trace.front().kind == TraceStep::Kind::kBarren);
  CHECK(trace.front().into == "n11112111");
  CHECK(trace.back() ==
        TraceStep{TraceStep::Kind::kBarren, {"n"}, "n1"});
}

TEST_CASE("the trace replays to the identical graph") {
  Ceg start = PushedRadCeg();
  auto [g, trace] = Parsimonize(start);
  Ceg replayed = ReplayTrace(start, trace);
  CHECK(replayed == g);
  CHECK(CanonicalHash(replayed) == CanonicalHash(g));
}

TEST_CASE("parsimonize is idempotent") {
  auto [g, trace] = Parsimonize(PushedRadCeg());
  auto [again, trace2] = Parsimonize(g);
  CHECK(again == g);
  CHECK(trace2.empty());
}

TEST_CASE("a tampered trace is rejected") {
  Ceg start = PushedRadCeg();
  auto [g, trace] = Parsimonize(start);

  SimplificationTrace wrong_target = trace;
  wrong_target[0].into = "n1";
  CHECK_THROWS_AS(ReplayTrace(start, wrong_target), std::invalid_argument);

  SimplificationTrace not_barren = trace;
  not_barren[0].positions = {"n1"};
  not_barren[0].into = "n11";
  CHECK_THROWS_AS(ReplayTrace(start, not_barren), std::invalid_argument);

  SimplificationTrace two_at_once = trace;
  two_at_once[0].positions.push_back("n1111212");
  CHECK_THROWS_AS(ReplayTrace(start, two_at_once), std::invalid_argument);
}

TEST_CASE("random rewrite orders land on the same graph") {
  Ceg start = PushedRadCeg();
  Ceg want = Parsimonize(start).first;
  for (uint64_t seed : {7, 8, 9}) {
    Ceg got = RandomizedFixpoint(start, seed);
    CHECK(got.nodes.size() == want.nodes.size());
    CHECK(CanonicalHash(got) == CanonicalHash(want));
  }
  for (uint64_t game_seed : {5, 6}) {
    Ceg built = BuildCeg(PushEdgeUtilitiesToLeaves(GenerateGame({game_seed, false})));
    Ceg minimal = Parsimonize(built).first;
    for (uint64_t seed : {3, 4}) {
      Ceg got = RandomizedFixpoint(built, seed);
      CHECK(got.nodes.size() == minimal.nodes.size());
      CHECK(CanonicalHash(got) == CanonicalHash(minimal));
    }
  }
}

TEST_CASE("simplification refuses graphs with edge utilities") {
  Ceg g = BuildCeg(LoadFixture("oil.json"));
  REQUIRE(HasEdgeUtilities(g));
  CHECK_THROWS_AS(Parsimonize(g), std::invalid_argument);
  CHECK_THROWS_AS(CoalescePositions(g), std::invalid_argument);
  CHECK_THROWS_AS(FindBarren(g), std::invalid_argument);
  CHECK_THROWS_AS(DeleteBarren(g, "d0"), std::invalid_argument);
}

TEST_CASE("parallel edge normalization") {
  Ceg g = BuildCeg(PushEdgeUtilitiesToLeaves(LoadFixture("radicalisation.json")));

  // A disclosure lottery on the cut-contact side: both outcomes reach the
  // flat payoff, as two parallel edges in the as-built graph.
  const CegNode& before = g.nodes.at("n1111211");
  REQUIRE(before.edges.size() == 2);
  CHECK(before.edges[0].to == before.edges[1].to);
  std::set<std::string> labels{before.edges[0].labels.front(),
                               before.edges[1].labels.front()};

  Ceg n = NormalizeParallelEdges(g);
  CHECK(n.nodes.size() == g.nodes.size());
  const CegNode& after = n.nodes.at("n1111211");
  REQUIRE(after.edges.size() == 1);
  CHECK(after.edges[0].to == "n11112111");
  CHECK(std::set<std::string>(after.edges[0].labels.begin(),
                              after.edges[0].labels.end()) == labels);
  CHECK(std::is_sorted(after.edges[0].labels.begin(), after.edges[0].labels.end()));
  CHECK(*after.edges[0].prob == Rat(1));

  // Nodes without parallel structure pass through untouched.
  CHECK(n.nodes.at("n") == g.nodes.at("n"));
  CHECK(n.root == g.root);
}

TEST_CASE("a degenerate lottery tree collapses to its payoff") {
  const char* doc = R"({
    "players": ["p"],
    "perspective": "p",
    "root": "r",
    "nodes": {
      "r": {"kind": "chance", "edges": [
        {"label": "a", "to": "m1", "p": "1/2"},
        {"label": "b", "to": "m2", "p": "1/2"}]},
      "m1": {"kind": "chance", "edges": [
        {"label": "c", "to": "l1", "p": "1/3"},
        {"label": "d", "to": "l2", "p": "2/3"}]},
      "m2": {"kind": "chance", "edges": [
        {"label": "c", "to": "l3", "p": "1/3"},
        {"label": "d", "to": "l4", "p": "2/3"}]},
      "l1": {"kind": "utility", "u": {"p": "5"}},
      "l2": {"kind": "utility", "u": {"p": "5"}},
      "l3": {"kind": "utility", "u": {"p": "5"}},
      "l4": {"kind": "utility", "u": {"p": "5"}}
    }
  })";
  GameTree t = ParseGame(doc);
  REQUIRE(Validate(t).empty());

  auto [g, trace] = Parsimonize(BuildCeg(t));
  CHECK(g.nodes.size() == 1);
  CHECK(g.root == "l1");
  CHECK(g.nodes.at("l1").kind == NodeKind::kUtility);
  CHECK(g.nodes.at("l1").utility == Vec({"5"}));
  REQUIRE(trace.size() == 2);
  CHECK(trace[0] == TraceStep{TraceStep::Kind::kBarren, {"m1"}, "l1"});
  CHECK(trace[1] == TraceStep{TraceStep::Kind::kBarren, {"r"}, "l1"});

  Solution sol = Propagate(g);
  CHECK(sol.value.at("l1") == Vec({"5"}));
  CHECK(sol.decisions.empty());
}

TEST_CASE("trace json is a faithful, deterministic record") {
  auto [g, trace] = Parsimonize(PushedRadCeg());
  std::string text = TraceToJson(trace);
  CHECK(text == TraceToJson(trace));

  nlohmann::json arr = nlohmann::json::parse(text);
  REQUIRE(arr.is_array());
  REQUIRE(arr.size() == trace.size());
  CHECK(arr[0]["op"] == "delete_barren");
  CHECK(arr[0]["into"] == "n11112111");
  int coalesce = 0;
  for (const auto& step : arr) {
    if (step["op"] == "coalesce") ++coalesce;
  }
  CHECK(coalesce == 3);

  std::string report = SimplifyReportToJson(g, trace, true);
  nlohmann::json doc = nlohmann::json::parse(report);
  CHECK(doc.contains("trace"));
  CHECK_FALSE(nlohmann::json::parse(SimplifyReportToJson(g, trace, false)).contains("trace"));
}

}  // TEST_SUITE

}  // namespace
}  // namespace ceg
