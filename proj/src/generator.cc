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

#include "ceg/generator.h"

#include <cstdio>
#include <deque>
#include <random>
#include <set>
#include <utility>

#include "ceg/solve.h"

namespace ceg {
namespace {

// Shifting every leaf under one subtree by a constant vector shifts that
// subtree's rollback value by exactly the same vector (chance weights sum
// to one, decision argmax is translation invariant). Aligning each root
// subtree to the first therefore ties all root actions exactly.
void ApplyRootTies(GameTree* t) {
  const TreeNode& root = t->nodes.at(t->root);
  if (root.kind != NodeKind::kDecision || root.edges.size() < 2) return;
  TreeSolution sol = TreeRollback(*t);
  const UtilityVector target = sol.value.at(root.edges.front().to);
  for (size_t i = 1; i < root.edges.size(); ++i) {
    const UtilityVector& vi = sol.value.at(root.edges[i].to);
    UtilityVector shift;
    shift.values.reserve(target.values.size());
    for (size_t p = 0; p < target.values.size(); ++p) {
      shift.values.push_back(target.values[p] - vi.values[p]);
    }
    std::deque<NodeId> stack{root.edges[i].to};
    while (!stack.empty()) {
      NodeId id = stack.front();
      stack.pop_front();
      TreeNode& node = t->nodes.at(id);
      if (node.kind == NodeKind::kUtility) {
        node.utility += shift;
        continue;
      }
      for (const TreeEdge& e : node.edges) stack.push_back(e.to);
    }
  }
}

}  // namespace

GameTree GenerateGame(const GenerateOptions& opts) {
  std::mt19937_64 rng(opts.seed);
  // Modulo keeps draws identical across standard libraries; the slight
  // bias is irrelevant here.
  auto next = [&rng](size_t n) { return static_cast<size_t>(rng() % n); };

  GameTree t;
  size_t player_count = 2 + next(2);
  for (size_t p = 0; p < player_count; ++p) {
    t.players.push_back("p" + std::to_string(p + 1));
  }
  t.perspective = 0;

  struct Level {
    NodeKind kind;
    int owner;
    std::vector<std::string> labels;
  };
  size_t depth = 2 + next(4);
  std::vector<Level> levels;
  for (size_t k = 0; k < depth; ++k) {
    bool decision = opts.with_ties && k == 0 ? true : next(2) == 0;
    Level lv;
    lv.kind = decision ? NodeKind::kDecision : NodeKind::kChance;
    lv.owner = decision ? static_cast<int>(next(player_count)) : -1;
    char tag = decision ? 'a' : 'o';
    for (int i = 0; i < 3; ++i) {
      lv.labels.push_back(tag + std::to_string(k) + static_cast<char>('a' + i));
    }
    levels.push_back(std::move(lv));
    t.variables.push_back("v" + std::to_string(k));
  }

  std::vector<int> pool;
  size_t pool_pos = 0;
  auto draw_payoff = [&]() {
    if (pool_pos == pool.size()) {
      if (pool.empty()) {
        for (int x = -50; x <= 50; ++x) pool.push_back(x);
      }
      for (size_t i = pool.size(); i > 1; --i) std::swap(pool[i - 1], pool[next(i)]);
      pool_pos = 0;
    }
    return pool[pool_pos++];
  };

  int counter = 0;
  auto new_id = [&counter]() {
    char buf[8];
    std::snprintf(buf, sizeof(buf), "n%04d", counter++);
    return std::string(buf);
  };
  auto make_leaf = [&](const NodeId& id) {
    TreeNode leaf;
    leaf.kind = NodeKind::kUtility;
    leaf.utility.values.reserve(player_count);
    for (size_t p = 0; p < player_count; ++p) leaf.utility.values.push_back(Rat(draw_payoff()));
    t.nodes[id] = std::move(leaf);
  };

  struct Pending {
    NodeId id;
    size_t level;
  };
  std::deque<Pending> queue;
  t.root = new_id();
  queue.push_back({t.root, 0});
  while (!queue.empty()) {
    Pending cur = queue.front();
    queue.pop_front();
    const Level& lv = levels[cur.level];
    TreeNode node;
    node.kind = lv.kind;
    node.owner = lv.owner;
    node.var = t.variables[cur.level];
    size_t branching = 2 + next(2);

    std::vector<Rat> probs;
    if (lv.kind == NodeKind::kChance) {
      // A random composition of den into `branching` positive parts keeps
      // the weights exact with denominators no larger than 12.
      size_t den = branching + next(13 - branching);
      std::set<size_t> cuts;
      while (cuts.size() < branching - 1) cuts.insert(1 + next(den - 1));
      std::vector<size_t> bounds{0};
      bounds.insert(bounds.end(), cuts.begin(), cuts.end());
      bounds.push_back(den);
      for (size_t i = 1; i < bounds.size(); ++i) {
        probs.push_back(Rat(static_cast<long long>(bounds[i] - bounds[i - 1]),
                            static_cast<long long>(den)));
      }
    }

    for (size_t b = 0; b < branching; ++b) {
      TreeEdge e;
      e.label = lv.labels[b];
      e.to = new_id();
      if (lv.kind == NodeKind::kChance) e.prob = probs[b];
      if (cur.level + 1 == depth || next(5) == 0) {
        make_leaf(e.to);
      } else {
        queue.push_back({e.to, cur.level + 1});
      }
      node.edges.push_back(std::move(e));
    }
    t.nodes[cur.id] = std::move(node);
  }

  if (opts.with_ties) ApplyRootTies(&t);
  return t;
}

}  // namespace ceg
