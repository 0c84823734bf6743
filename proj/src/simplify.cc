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

#include "ceg/simplify.h"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <unordered_map>

#include "internal_json.h"

namespace ceg {
namespace {

void RequireLeafOnly(const Ceg& g) {
  if (HasEdgeUtilities(g)) {
    throw std::invalid_argument("edge utilities present, push them to the leaves first");
  }
}

bool IsBarren(const CegNode& node) {
  if (node.kind == NodeKind::kUtility || node.edges.empty()) return false;
  for (const CegEdge& e : node.edges) {
    if (e.to != node.edges.front().to) return false;
  }
  return true;
}

std::string Join(const std::vector<std::string>& parts, char sep) {
  std::string out;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out.push_back(sep);
    out += parts[i];
  }
  return out;
}

// Collapses a node's indistinguishable parallel edges: same target and
// same attached utility (if any) means the labels only differ in name, so
// one edge with the union label set carries them, probabilities added.
void MergeParallelEdges(CegNode* node) {
  std::map<std::string, CegEdge> merged;
  for (CegEdge& e : node->edges) {
    std::string group = e.to;
    if (e.edge_utility.has_value()) group += "|" + e.edge_utility->ToString();
    auto it = merged.find(group);
    if (it == merged.end()) {
      merged.emplace(group, std::move(e));
    } else {
      CegEdge& into = it->second;
      into.labels.insert(into.labels.end(), e.labels.begin(), e.labels.end());
      if (into.prob.has_value()) *into.prob += *e.prob;
    }
  }
  node->edges.clear();
  for (auto& [group, e] : merged) {
    std::sort(e.labels.begin(), e.labels.end());
    node->edges.push_back(std::move(e));
  }
  std::sort(node->edges.begin(), node->edges.end(),
            [](const CegEdge& a, const CegEdge& b) { return a.labels.front() < b.labels.front(); });
}

internal::Json TraceToJsonValue(const SimplificationTrace& trace) {
  internal::Json arr = internal::Json::array();
  for (const TraceStep& step : trace) {
    internal::Json s;
    s["op"] = step.kind == TraceStep::Kind::kBarren ? "delete_barren" : "coalesce";
    s["positions"] = step.positions;
    s["into"] = step.into;
    arr.push_back(std::move(s));
  }
  return arr;
}

}  // namespace

Ceg NormalizeParallelEdges(const Ceg& g) {
  Ceg out = g;
  for (auto& [key, node] : out.nodes) MergeParallelEdges(&node);
  return out;
}

std::vector<std::string> FindBarren(const Ceg& g) {
  RequireLeafOnly(g);
  std::vector<std::string> out;
  for (const auto& [key, node] : g.nodes) {
    if (IsBarren(node)) out.push_back(key);
  }
  return out;
}

Ceg DeleteBarren(const Ceg& g, const std::string& key) {
  RequireLeafOnly(g);
  auto it = g.nodes.find(key);
  if (it == g.nodes.end()) throw std::invalid_argument("no position '" + key + "'");
  if (!IsBarren(it->second)) {
    throw std::invalid_argument("position '" + key + "' is not barren");
  }
  const std::string target = it->second.edges.front().to;

  Ceg out = g;
  out.nodes.erase(key);
  if (out.root == key) out.root = target;
  for (auto& [k, node] : out.nodes) {
    bool touched = false;
    for (CegEdge& e : node.edges) {
      if (e.to == key) {
        e.to = target;
        touched = true;
      }
    }
    if (touched) MergeParallelEdges(&node);
  }
  return out;
}

Ceg MergePositions(const Ceg& g, const std::vector<std::string>& keys) {
  std::vector<std::string> sorted = keys;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  if (sorted.size() < 2) throw std::invalid_argument("need at least two distinct positions");
  for (const std::string& key : sorted) {
    if (g.nodes.find(key) == g.nodes.end()) {
      throw std::invalid_argument("no position '" + key + "'");
    }
  }

  const std::string& survivor = sorted.front();
  std::set<std::string> gone(sorted.begin() + 1, sorted.end());

  Ceg out = g;
  CegNode& merged = out.nodes.at(survivor);
  for (const std::string& key : gone) {
    const CegNode& node = out.nodes.at(key);
    merged.members.insert(merged.members.end(), node.members.begin(), node.members.end());
  }
  std::sort(merged.members.begin(), merged.members.end());
  for (const std::string& key : gone) out.nodes.erase(key);
  if (gone.count(out.root) > 0) out.root = survivor;
  for (auto& [k, node] : out.nodes) {
    bool touched = false;
    for (CegEdge& e : node.edges) {
      if (gone.count(e.to) > 0) {
        e.to = survivor;
        touched = true;
      }
    }
    if (touched) MergeParallelEdges(&node);
  }
  return out;
}

std::pair<Ceg, SimplificationTrace> CoalescePositions(const Ceg& g) {
  RequireLeafOnly(g);
  Ceg cur = NormalizeParallelEdges(g);

  // Same interning scheme as the tree position partition, but over the
  // graph: children are classed before parents along the reverse canonical
  // order, so one pass yields the coarsest bisimulation.
  std::vector<std::string> order = CanonicalOrder(cur);
  std::unordered_map<std::string, int> interned;
  std::map<std::string, int> class_of;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const CegNode& node = cur.nodes.at(*it);
    std::string sig;
    if (node.kind == NodeKind::kUtility) {
      sig = "U|" + node.utility.ToString();
    } else {
      std::vector<std::string> parts;
      parts.reserve(node.edges.size());
      for (const CegEdge& e : node.edges) {
        std::string part = Join(e.labels, '+');
        if (e.prob.has_value()) part += "=" + e.prob->ToString();
        part += ">" + std::to_string(class_of.at(e.to));
        parts.push_back(std::move(part));
      }
      std::sort(parts.begin(), parts.end());
      sig = (node.kind == NodeKind::kChance ? "C|"
                                            : "D" + std::to_string(node.owner) + "|") +
            Join(parts, ',');
    }
    auto [entry, unused] = interned.emplace(sig, static_cast<int>(interned.size()));
    class_of[*it] = entry->second;
  }

  std::map<int, std::vector<std::string>> by_class;
  for (const auto& [key, cls] : class_of) by_class[cls].push_back(key);
  std::vector<std::vector<std::string>> classes;
  for (const auto& [cls, keys] : by_class) {
    if (keys.size() > 1) classes.push_back(keys);
  }
  std::sort(classes.begin(), classes.end());

  SimplificationTrace trace;
  for (const std::vector<std::string>& keys : classes) {
    cur = MergePositions(cur, keys);
    trace.push_back({TraceStep::Kind::kCoalesce, keys, keys.front()});
  }
  return {std::move(cur), std::move(trace)};
}

std::pair<Ceg, SimplificationTrace> Parsimonize(const Ceg& g) {
  RequireLeafOnly(g);
  Ceg cur = NormalizeParallelEdges(g);
  SimplificationTrace trace;
  size_t limit = g.nodes.size() + 2;
  for (size_t round = 0;; ++round) {
    if (round > limit) throw std::logic_error("simplification failed to reach a fixpoint");
    bool changed = false;

    // Reverse-topological barren sweep. Deleting a position can only make
    // its ancestors barren, and ancestors come later in this order, so one
    // sweep resolves whole cascades.
    std::vector<std::string> order = CanonicalOrder(cur);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      auto node_it = cur.nodes.find(*it);
      if (node_it == cur.nodes.end() || !IsBarren(node_it->second)) continue;
      std::string into = node_it->second.edges.front().to;
      cur = DeleteBarren(cur, *it);
      trace.push_back({TraceStep::Kind::kBarren, {*it}, std::move(into)});
      changed = true;
    }

    auto [coalesced, steps] = CoalescePositions(cur);
    cur = std::move(coalesced);
    changed = changed || !steps.empty();
    trace.insert(trace.end(), steps.begin(), steps.end());
    if (!changed) break;
  }
  return {std::move(cur), std::move(trace)};
}

Ceg ReplayTrace(const Ceg& g, const SimplificationTrace& trace) {
  Ceg cur = NormalizeParallelEdges(g);
  for (size_t i = 0; i < trace.size(); ++i) {
    const TraceStep& step = trace[i];
    if (step.kind == TraceStep::Kind::kBarren) {
      if (step.positions.size() != 1) {
        throw std::invalid_argument("trace step " + std::to_string(i) +
                                    ": barren step needs exactly one position");
      }
      auto it = cur.nodes.find(step.positions.front());
      if (it == cur.nodes.end() || !IsBarren(it->second) ||
          it->second.edges.front().to != step.into) {
        throw std::invalid_argument("trace step " + std::to_string(i) +
                                    ": does not apply to this graph");
      }
      cur = DeleteBarren(cur, step.positions.front());
    } else {
      std::vector<std::string> sorted = step.positions;
      std::sort(sorted.begin(), sorted.end());
      if (sorted.empty() || sorted.front() != step.into) {
        throw std::invalid_argument("trace step " + std::to_string(i) +
                                    ": survivor must be the smallest key");
      }
      cur = MergePositions(cur, step.positions);
    }
  }
  return cur;
}

std::string TraceToJson(const SimplificationTrace& trace) {
  return internal::Dump(TraceToJsonValue(trace));
}

std::string SimplifyReportToJson(const Ceg& g, const SimplificationTrace& trace,
                                 bool include_trace) {
  internal::Json out;
  out["ceg"] = internal::CegToJsonValue(g);
  if (include_trace) out["trace"] = TraceToJsonValue(trace);
  return internal::Dump(out);
}

}  // namespace ceg
