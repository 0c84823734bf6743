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

#include "ceg/ceg.h"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>
#include <unordered_map>
#include <utility>

#include "internal_json.h"

namespace ceg {
namespace {

uint64_t Fnv1a(const std::string& s) {
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string HexU64(uint64_t v) {
  static const char kDigits[] = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = kDigits[v & 0xf];
    v >>= 4;
  }
  return out;
}

std::map<NodeId, int> NodeDepths(const GameTree& t) {
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
  return depth;
}

std::string Join(const std::vector<std::string>& parts, char sep) {
  std::string out;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out.push_back(sep);
    out += parts[i];
  }
  return out;
}

std::string JoinSorted(std::vector<std::string> parts, char sep) {
  std::sort(parts.begin(), parts.end());
  return Join(parts, sep);
}

// Groups ids by signature and numbers the groups by smallest member, so
// stage indices never depend on hash or insertion order.
template <typename Key>
void NumberGroups(const std::map<std::string, std::vector<Key>>& groups,
                  std::map<Key, int>* stage_of, std::vector<std::vector<Key>>* members,
                  std::vector<std::string>* signatures) {
  std::vector<std::pair<Key, std::string>> order;
  order.reserve(groups.size());
  for (const auto& [sig, ids] : groups) order.emplace_back(ids.front(), sig);
  std::sort(order.begin(), order.end());
  for (const auto& [first, sig] : order) {
    int idx = static_cast<int>(members->size());
    members->push_back(groups.at(sig));
    if (signatures != nullptr) signatures->push_back(sig);
    for (const Key& id : groups.at(sig)) (*stage_of)[id] = idx;
  }
}

}  // namespace

StagePartition ComputeStages(const GameTree& t) {
  std::map<std::string, std::vector<NodeId>> groups;
  for (const auto& [id, node] : t.nodes) {
    if (node.kind == NodeKind::kUtility) continue;
    std::vector<std::string> parts;
    parts.reserve(node.edges.size());
    for (const TreeEdge& e : node.edges) {
      parts.push_back(node.kind == NodeKind::kChance ? e.label + "=" + e.prob->ToString()
                                                     : e.label);
    }
    std::string sig = (node.kind == NodeKind::kChance
                           ? "C|"
                           : "D" + std::to_string(node.owner) + "|") +
                      JoinSorted(std::move(parts), ',');
    groups[sig].push_back(id);  // t.nodes is ordered, members arrive sorted
  }
  StagePartition out;
  NumberGroups(groups, &out.stage_of, &out.members, &out.signatures);
  return out;
}

PositionPartition ComputePositions(const GameTree& t) {
  std::map<NodeId, int> depth = NodeDepths(t);
  std::vector<NodeId> order;
  order.reserve(depth.size());
  for (const auto& [id, d] : depth) order.push_back(id);
  std::sort(order.begin(), order.end(), [&depth](const NodeId& a, const NodeId& b) {
    int da = depth.at(a);
    int db = depth.at(b);
    return da != db ? da > db : a < b;
  });

  // Bottom up (children strictly before parents), interning one canonical
  // signature per distinguishable future. Equal class index is exactly
  // subtree equivalence, so one pass suffices.
  std::unordered_map<std::string, int> interned;
  std::map<NodeId, int> class_of;
  for (const NodeId& id : order) {
    const TreeNode& node = t.nodes.at(id);
    std::string sig;
    if (node.kind == NodeKind::kUtility) {
      sig = "U|" + node.utility.ToString();
    } else {
      std::vector<std::string> parts;
      parts.reserve(node.edges.size());
      for (const TreeEdge& e : node.edges) {
        std::string part = e.label;
        if (e.prob.has_value()) part += "=" + e.prob->ToString();
        if (e.edge_utility.has_value()) part += "+" + e.edge_utility->ToString();
        part += ">" + std::to_string(class_of.at(e.to));
        parts.push_back(std::move(part));
      }
      sig = (node.kind == NodeKind::kChance ? "C|"
                                            : "D" + std::to_string(node.owner) + "|") +
            JoinSorted(std::move(parts), ',');
    }
    auto [it, unused] = interned.emplace(sig, static_cast<int>(interned.size()));
    class_of[id] = it->second;
  }

  std::map<int, std::vector<NodeId>> by_class;
  for (const auto& [id, cls] : class_of) by_class[cls].push_back(id);  // sorted ids
  PositionPartition out;
  for (const auto& [cls, ids] : by_class) {
    const NodeId& key = ids.front();
    for (const NodeId& id : ids) out.position_of[id] = key;
    out.members[key] = ids;
  }
  return out;
}

Ceg BuildCeg(const GameTree& t) {
  PositionPartition pos = ComputePositions(t);
  Ceg g;
  g.players = t.players;
  g.perspective = t.perspective;
  g.root = pos.position_of.at(t.root);
  for (const auto& [key, ids] : pos.members) {
    // The key is itself the smallest member, so it can serve as the
    // representative vertex.
    const TreeNode& rep = t.nodes.at(key);
    CegNode node;
    node.kind = rep.kind;
    node.owner = rep.owner;
    node.utility = rep.utility;
    node.members = ids;
    node.edges.reserve(rep.edges.size());
    for (const TreeEdge& e : rep.edges) {
      CegEdge edge;
      edge.labels = {e.label};
      edge.to = pos.position_of.at(e.to);
      edge.prob = e.prob;
      edge.edge_utility = e.edge_utility;
      node.edges.push_back(std::move(edge));
    }
    std::sort(node.edges.begin(), node.edges.end(), [](const CegEdge& a, const CegEdge& b) {
      return a.labels.front() < b.labels.front();
    });
    g.nodes[key] = std::move(node);
  }
  return g;
}

std::vector<std::string> CanonicalOrder(const Ceg& g) {
  std::map<std::string, int> in_degree;
  for (const auto& [key, node] : g.nodes) in_degree.emplace(key, 0);
  for (const auto& [key, node] : g.nodes) {
    for (const CegEdge& e : node.edges) in_degree.at(e.to) += 1;
  }
  std::set<std::string> ready_inner;
  std::set<std::string> ready_sink;
  auto mark_ready = [&](const std::string& key) {
    (g.nodes.at(key).kind == NodeKind::kUtility ? ready_sink : ready_inner).insert(key);
  };
  for (const auto& [key, deg] : in_degree) {
    if (deg == 0) mark_ready(key);
  }
  std::vector<std::string> order;
  order.reserve(g.nodes.size());
  while (!ready_inner.empty() || !ready_sink.empty()) {
    // Sinks wait until no inner node is ready. In an acyclic graph some
    // inner node is always ready while any remains, so utilities land in
    // the final slots.
    std::set<std::string>& pool = ready_inner.empty() ? ready_sink : ready_inner;
    std::string key = *pool.begin();
    pool.erase(pool.begin());
    order.push_back(key);
    for (const CegEdge& e : g.nodes.at(key).edges) {
      if (--in_degree.at(e.to) == 0) mark_ready(e.to);
    }
  }
  if (order.size() != g.nodes.size()) throw std::logic_error("graph has a cycle");
  return order;
}

CegStagePartition ComputeCegStages(const Ceg& g) {
  std::map<std::string, std::vector<std::string>> groups;
  for (const auto& [key, node] : g.nodes) {
    if (node.kind == NodeKind::kUtility) continue;
    std::vector<std::string> parts;
    parts.reserve(node.edges.size());
    for (const CegEdge& e : node.edges) {
      std::string labels = Join(e.labels, '+');
      parts.push_back(node.kind == NodeKind::kChance ? labels + "=" + e.prob->ToString()
                                                     : labels);
    }
    std::string sig = (node.kind == NodeKind::kChance
                           ? "C|"
                           : "D" + std::to_string(node.owner) + "|") +
                      JoinSorted(std::move(parts), ',');
    groups[sig].push_back(key);
  }
  CegStagePartition out;
  NumberGroups(groups, &out.stage_of, &out.members, nullptr);
  return out;
}

uint64_t CanonicalHash(const Ceg& g) {
  std::vector<std::string> order = CanonicalOrder(g);
  std::map<std::string, uint64_t> hash_of;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const CegNode& node = g.nodes.at(*it);
    std::string desc;
    switch (node.kind) {
      case NodeKind::kDecision:
        desc = "D" + std::to_string(node.owner);
        break;
      case NodeKind::kChance:
        desc = "C";
        break;
      case NodeKind::kUtility:
        desc = "U" + node.utility.ToString();
        break;
    }
    std::vector<std::string> parts;
    parts.reserve(node.edges.size());
    for (const CegEdge& e : node.edges) {
      std::string part = Join(e.labels, '+');
      if (e.prob.has_value()) part += "=" + e.prob->ToString();
      if (e.edge_utility.has_value()) part += "+" + e.edge_utility->ToString();
      part += ">" + HexU64(hash_of.at(e.to));
      parts.push_back(std::move(part));
    }
    desc += "|" + JoinSorted(std::move(parts), ',');
    hash_of[*it] = Fnv1a(desc);
  }
  return Fnv1a(std::to_string(g.nodes.size()) + ":" + HexU64(hash_of.at(g.root)));
}

bool HasEdgeUtilities(const Ceg& g) {
  for (const auto& [key, node] : g.nodes) {
    for (const CegEdge& e : node.edges) {
      if (e.edge_utility.has_value()) return true;
    }
  }
  return false;
}

namespace internal {

namespace {

Json UtilityToJson(const std::vector<std::string>& players, const UtilityVector& u) {
  Json out = Json::object();
  for (size_t p = 0; p < players.size(); ++p) out[players[p]] = u.values[p].ToString();
  return out;
}

}  // namespace

Json CegToJsonValue(const Ceg& g) {
  std::vector<std::string> order = CanonicalOrder(g);
  std::map<std::string, std::string> wid;
  for (size_t i = 0; i < order.size(); ++i) wid[order[i]] = "w" + std::to_string(i + 1);
  CegStagePartition stages = ComputeCegStages(g);

  Json nodes = Json::array();
  Json edges = Json::array();
  for (const std::string& key : order) {
    const CegNode& node = g.nodes.at(key);
    Json n;
    n["id"] = wid.at(key);
    n["key"] = key;
    n["kind"] = NodeKindName(node.kind);
    n["members"] = node.members;
    if (node.kind == NodeKind::kDecision) n["owner"] = g.players[node.owner];
    if (node.kind == NodeKind::kUtility) {
      n["u"] = UtilityToJson(g.players, node.utility);
    } else {
      n["stage"] = "s" + std::to_string(stages.stage_of.at(key));
    }
    nodes.push_back(std::move(n));
    for (const CegEdge& e : node.edges) {
      Json j;
      j["from"] = wid.at(key);
      j["to"] = wid.at(e.to);
      j["labels"] = e.labels;
      if (e.prob.has_value()) j["p"] = e.prob->ToString();
      if (e.edge_utility.has_value()) j["u"] = UtilityToJson(g.players, *e.edge_utility);
      edges.push_back(std::move(j));
    }
  }

  Json out;
  out["players"] = g.players;
  out["perspective"] = g.players[g.perspective];
  out["root"] = wid.at(g.root);
  out["node_count"] = order.size();
  out["nodes"] = std::move(nodes);
  out["edges"] = std::move(edges);
  return out;
}

}  // namespace internal

std::string CegToJson(const Ceg& g) { return internal::Dump(internal::CegToJsonValue(g)); }

}  // namespace ceg
