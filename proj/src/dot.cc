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

#include "ceg/dot.h"

#include <algorithm>
#include <map>
#include <vector>

namespace ceg {
namespace {

constexpr const char* kStageColors[] = {
    "#a6cee3", "#b2df8a", "#fb9a99", "#fdbf6f", "#cab2d6", "#ffed6f",
    "#8dd3c7", "#bebada", "#fccde5", "#80b1d3", "#fdb462", "#ccebc5",
    "#bc80bd", "#d9d9d9", "#e5d8bd", "#b3de69"};
constexpr int kStageColorCount = 16;

std::string Escape(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

std::string JoinLabels(const std::vector<std::string>& labels) {
  std::string out;
  for (size_t i = 0; i < labels.size(); ++i) {
    if (i > 0) out += ", ";
    out += labels[i];
  }
  return out;
}

}  // namespace

std::string ExportDot(const Ceg& g, const Solution* sol) {
  std::vector<std::string> order = CanonicalOrder(g);
  std::map<std::string, std::string> wid;
  for (size_t i = 0; i < order.size(); ++i) wid[order[i]] = "w" + std::to_string(i + 1);
  CegStagePartition stages = ComputeCegStages(g);

  std::string out;
  out += "digraph ceg {\n";
  out += "  rankdir=LR;\n";
  out += "  node [fontname=\"Helvetica\"];\n";
  out += "  edge [fontname=\"Helvetica\"];\n";

  for (const std::string& key : order) {
    const CegNode& node = g.nodes.at(key);
    const std::string& id = wid.at(key);
    out += "  " + id + " [";
    switch (node.kind) {
      case NodeKind::kDecision:
        out += "shape=box, label=\"" + id + "\\n" + Escape(g.players[node.owner]) + "\"";
        break;
      case NodeKind::kChance: {
        out += "shape=ellipse";
        int stage = stages.stage_of.at(key);
        if (stages.members[stage].size() > 1) {
          out += ", style=filled, fillcolor=\"";
          out += kStageColors[stage % kStageColorCount];
          out += "\"";
        }
        out += ", label=\"" + id + "\"";
        break;
      }
      case NodeKind::kUtility:
        out += "shape=diamond, label=\"" + id + "\\n" + Escape(node.utility.ToString()) + "\"";
        break;
    }
    out += "];\n";
  }

  for (const std::string& key : order) {
    const CegNode& node = g.nodes.at(key);
    const DecisionChoice* choice = nullptr;
    if (sol != nullptr && node.kind == NodeKind::kDecision) {
      auto it = sol->decisions.find(key);
      if (it != sol->decisions.end()) choice = &it->second;
    }
    for (size_t i = 0; i < node.edges.size(); ++i) {
      const CegEdge& e = node.edges[i];
      std::string label = JoinLabels(e.labels);
      if (e.prob.has_value()) label += " : " + e.prob->ToString();
      if (e.edge_utility.has_value()) label += " : " + e.edge_utility->ToString();
      out += "  " + wid.at(key) + " -> " + wid.at(e.to) + " [label=\"" + Escape(label) + "\"";
      if (choice != nullptr &&
          std::find(choice->suboptimal.begin(), choice->suboptimal.end(),
                    static_cast<int>(i)) != choice->suboptimal.end()) {
        out += ", style=dashed";
      }
      out += "];\n";
    }
  }

  out += "}\n";
  return out;
}

}  // namespace ceg
