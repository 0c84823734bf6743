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

#include "ceg/solve.h"

#include <algorithm>
#include <deque>
#include <stdexcept>

#include "ceg/errors.h"
#include "internal_json.h"

namespace ceg {
namespace {

void RequireLeafUtilities(const GameTree& t) {
  for (const auto& [id, node] : t.nodes) {
    for (const TreeEdge& e : node.edges) {
      if (e.edge_utility.has_value()) {
        throw std::invalid_argument("edge utilities present at node '" + id +
                                    "', push them to the leaves first");
      }
    }
  }
}

// Vertex ids ordered deepest first, so every child is visited before its
// parent in a single pass.
std::vector<NodeId> BottomUpOrder(const GameTree& t) {
  std::map<NodeId, int> depth;
  std::deque<NodeId> queue{t.root};
  depth[t.root] = 0;
  while (!queue.empty()) {
    NodeId id = queue.front();
    queue.pop_front();
    for (const TreeEdge& e : t.nodes.at(id).edges) {
      depth[e.to] = depth.at(id) + 1;
      queue.push_back(e.to);
    }
  }
  std::vector<NodeId> order;
  order.reserve(depth.size());
  for (const auto& [id, d] : depth) order.push_back(id);
  std::sort(order.begin(), order.end(), [&depth](const NodeId& a, const NodeId& b) {
    int da = depth.at(a);
    int db = depth.at(b);
    return da != db ? da > db : a < b;
  });
  return order;
}

uint64_t CheckedPolicyCount(const std::vector<size_t>& arity, uint64_t max_profiles) {
  uint64_t count = 1;
  for (size_t n : arity) {
    count *= static_cast<uint64_t>(n);
    if (count > max_profiles) {
      throw GuardError("policy space exceeds " + std::to_string(max_profiles) +
                       " profiles");
    }
  }
  return count;
}

// Mixed-radix increment, rightmost digit fastest. Returns false on wrap.
bool NextDigits(std::vector<size_t>* digits, const std::vector<size_t>& arity) {
  for (size_t i = digits->size(); i-- > 0;) {
    if (++(*digits)[i] < arity[i]) return true;
    (*digits)[i] = 0;
  }
  return false;
}

}  // namespace

Solution Propagate(const Ceg& g) {
  if (HasEdgeUtilities(g)) {
    throw std::invalid_argument("edge utilities present, push them to the leaves first");
  }
  Solution sol;
  sol.order = CanonicalOrder(g);
  for (auto it = sol.order.rbegin(); it != sol.order.rend(); ++it) {
    const std::string& key = *it;
    const CegNode& node = g.nodes.at(key);
    switch (node.kind) {
      case NodeKind::kUtility:
        sol.value[key] = node.utility;
        break;
      case NodeKind::kChance: {
        UtilityVector sum;
        sum.values.assign(g.players.size(), Rat(0));
        for (const CegEdge& e : node.edges) sum += sol.value.at(e.to).Scaled(*e.prob);
        sol.value[key] = std::move(sum);
        break;
      }
      case NodeKind::kDecision: {
        DecisionChoice choice;
        const Rat* best = nullptr;
        for (size_t i = 0; i < node.edges.size(); ++i) {
          const Rat& score = sol.value.at(node.edges[i].to).values[node.owner];
          if (best == nullptr || *best < score) best = &score;
        }
        for (size_t i = 0; i < node.edges.size(); ++i) {
          const Rat& score = sol.value.at(node.edges[i].to).values[node.owner];
          if (score == *best) {
            choice.optimal.push_back(static_cast<int>(i));
          } else {
            choice.suboptimal.push_back(static_cast<int>(i));
          }
        }
        // Edges are kept sorted by first label, so the first optimal index
        // is the canonical tie-break.
        choice.chosen = choice.optimal.front();
        sol.value[key] = sol.value.at(node.edges[choice.chosen].to);
        sol.decisions[key] = std::move(choice);
        break;
      }
    }
  }
  return sol;
}

std::vector<std::map<std::string, StrategyEntry>> ExtractStrategy(const Ceg& g,
                                                                  const Solution& sol) {
  std::vector<std::map<std::string, StrategyEntry>> out(g.players.size());
  for (const auto& [key, choice] : sol.decisions) {
    const CegNode& node = g.nodes.at(key);
    StrategyEntry entry;
    entry.chosen = node.edges[choice.chosen].labels;
    for (int i : choice.optimal) entry.optimal.push_back(node.edges[i].labels);
    out[node.owner][key] = std::move(entry);
  }
  return out;
}

TreeSolution TreeRollback(const GameTree& t) {
  RequireLeafUtilities(t);
  TreeSolution sol;
  for (const NodeId& id : BottomUpOrder(t)) {
    const TreeNode& node = t.nodes.at(id);
    switch (node.kind) {
      case NodeKind::kUtility:
        sol.value[id] = node.utility;
        break;
      case NodeKind::kChance: {
        UtilityVector sum;
        sum.values.assign(t.players.size(), Rat(0));
        for (const TreeEdge& e : node.edges) sum += sol.value.at(e.to).Scaled(*e.prob);
        sol.value[id] = std::move(sum);
        break;
      }
      case NodeKind::kDecision: {
        const Rat* best = nullptr;
        for (const TreeEdge& e : node.edges) {
          const Rat& score = sol.value.at(e.to).values[node.owner];
          if (best == nullptr || *best < score) best = &score;
        }
        TreeDecision d;
        const TreeEdge* chosen_edge = nullptr;
        for (const TreeEdge& e : node.edges) {
          if (sol.value.at(e.to).values[node.owner] == *best) d.optimal.push_back(e.label);
        }
        std::sort(d.optimal.begin(), d.optimal.end());
        d.chosen = d.optimal.front();
        for (const TreeEdge& e : node.edges) {
          if (e.label == d.chosen) chosen_edge = &e;
        }
        sol.value[id] = sol.value.at(chosen_edge->to);
        sol.decisions[id] = std::move(d);
        break;
      }
    }
  }
  return sol;
}

std::vector<std::pair<TreePolicy, UtilityVector>> EnumerateTreePolicies(
    const GameTree& t, uint64_t max_profiles) {
  RequireLeafUtilities(t);
  std::vector<NodeId> decisions;
  for (const auto& [id, node] : t.nodes) {
    if (node.kind == NodeKind::kDecision) decisions.push_back(id);
  }
  std::vector<size_t> arity;
  arity.reserve(decisions.size());
  for (const NodeId& id : decisions) arity.push_back(t.nodes.at(id).edges.size());
  uint64_t count = CheckedPolicyCount(arity, max_profiles);

  std::vector<NodeId> order = BottomUpOrder(t);
  std::vector<std::pair<TreePolicy, UtilityVector>> out;
  out.reserve(count);
  std::vector<size_t> digits(decisions.size(), 0);
  do {
    TreePolicy policy;
    std::map<NodeId, size_t> pick;
    for (size_t i = 0; i < decisions.size(); ++i) {
      policy[decisions[i]] = t.nodes.at(decisions[i]).edges[digits[i]].label;
      pick[decisions[i]] = digits[i];
    }
    std::map<NodeId, UtilityVector> value;
    for (const NodeId& id : order) {
      const TreeNode& node = t.nodes.at(id);
      switch (node.kind) {
        case NodeKind::kUtility:
          value[id] = node.utility;
          break;
        case NodeKind::kChance: {
          UtilityVector sum;
          sum.values.assign(t.players.size(), Rat(0));
          for (const TreeEdge& e : node.edges) sum += value.at(e.to).Scaled(*e.prob);
          value[id] = std::move(sum);
          break;
        }
        case NodeKind::kDecision:
          value[id] = value.at(node.edges[pick.at(id)].to);
          break;
      }
    }
    out.emplace_back(std::move(policy), value.at(t.root));
  } while (NextDigits(&digits, arity));
  return out;
}

std::vector<std::pair<CegPolicy, UtilityVector>> EnumerateCegPolicies(
    const Ceg& g, uint64_t max_profiles) {
  if (HasEdgeUtilities(g)) {
    throw std::invalid_argument("edge utilities present, push them to the leaves first");
  }
  std::vector<std::string> decisions;
  for (const auto& [key, node] : g.nodes) {
    if (node.kind == NodeKind::kDecision) decisions.push_back(key);
  }
  std::vector<size_t> arity;
  arity.reserve(decisions.size());
  for (const std::string& key : decisions) arity.push_back(g.nodes.at(key).edges.size());
  uint64_t count = CheckedPolicyCount(arity, max_profiles);

  std::vector<std::string> order = CanonicalOrder(g);
  std::vector<std::pair<CegPolicy, UtilityVector>> out;
  out.reserve(count);
  std::vector<size_t> digits(decisions.size(), 0);
  do {
    CegPolicy policy;
    for (size_t i = 0; i < decisions.size(); ++i) {
      policy[decisions[i]] = static_cast<int>(digits[i]);
    }
    std::map<std::string, UtilityVector> value;
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      const CegNode& node = g.nodes.at(*it);
      switch (node.kind) {
        case NodeKind::kUtility:
          value[*it] = node.utility;
          break;
        case NodeKind::kChance: {
          UtilityVector sum;
          sum.values.assign(g.players.size(), Rat(0));
          for (const CegEdge& e : node.edges) sum += value.at(e.to).Scaled(*e.prob);
          value[*it] = std::move(sum);
          break;
        }
        case NodeKind::kDecision:
          value[*it] = value.at(node.edges[policy.at(*it)].to);
          break;
      }
    }
    out.emplace_back(std::move(policy), value.at(g.root));
  } while (NextDigits(&digits, arity));
  return out;
}

std::string SolutionToJson(const Ceg& g, const Solution& sol) {
  using internal::Json;
  std::map<std::string, std::string> wid;
  for (size_t i = 0; i < sol.order.size(); ++i) {
    wid[sol.order[i]] = "w" + std::to_string(i + 1);
  }
  auto utility_json = [&g](const UtilityVector& u) {
    Json out = Json::object();
    for (size_t p = 0; p < g.players.size(); ++p) out[g.players[p]] = u.values[p].ToString();
    return out;
  };
  auto labels_of = [&g](const std::string& key, const std::vector<int>& idx) {
    Json out = Json::array();
    for (int i : idx) out.push_back(g.nodes.at(key).edges[i].labels);
    return out;
  };

  Json values = Json::array();
  Json decisions = Json::array();
  for (const std::string& key : sol.order) {
    Json v;
    v["id"] = wid.at(key);
    v["key"] = key;
    v["u"] = utility_json(sol.value.at(key));
    values.push_back(std::move(v));
    auto it = sol.decisions.find(key);
    if (it == sol.decisions.end()) continue;
    const CegNode& node = g.nodes.at(key);
    Json d;
    d["id"] = wid.at(key);
    d["key"] = key;
    d["owner"] = g.players[node.owner];
    d["chosen"] = node.edges[it->second.chosen].labels;
    d["optimal"] = labels_of(key, it->second.optimal);
    d["suboptimal"] = labels_of(key, it->second.suboptimal);
    decisions.push_back(std::move(d));
  }

  Json strategy = Json::object();
  std::vector<std::map<std::string, StrategyEntry>> per_player = ExtractStrategy(g, sol);
  for (size_t p = 0; p < g.players.size(); ++p) {
    Json entries = Json::array();
    for (const std::string& key : sol.order) {
      auto it = per_player[p].find(key);
      if (it == per_player[p].end()) continue;
      Json e;
      e["id"] = wid.at(key);
      e["key"] = key;
      e["chosen"] = it->second.chosen;
      entries.push_back(std::move(e));
    }
    strategy[g.players[p]] = std::move(entries);
  }

  Json out;
  out["players"] = g.players;
  out["perspective"] = g.players[g.perspective];
  out["root"] = wid.at(g.root);
  out["root_value"] = utility_json(sol.value.at(g.root));
  out["values"] = std::move(values);
  out["decisions"] = std::move(decisions);
  out["strategy"] = std::move(strategy);
  return internal::Dump(out);
}

}  // namespace ceg
