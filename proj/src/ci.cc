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

#include "ceg/ci.h"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>
#include <tuple>

#include "ceg/errors.h"
#include "internal_json.h"

namespace ceg {
namespace {

// Partial assignment of the variable list along a root path; unset slots
// are variables the path skipped or has not reached yet.
using Config = std::vector<std::optional<std::string>>;

int VarIndexOrThrow(const GameTree& t, const std::string& v) {
  int idx = t.VariableIndex(v);
  if (idx < 0) throw std::invalid_argument("unknown variable '" + v + "'");
  return idx;
}

std::map<NodeId, Config> BuildConfigs(const GameTree& t) {
  std::map<NodeId, Config> config;
  config[t.root] = Config(t.variables.size());
  std::deque<NodeId> queue{t.root};
  while (!queue.empty()) {
    NodeId id = queue.front();
    queue.pop_front();
    const TreeNode& node = t.nodes.at(id);
    int var_idx = node.var.has_value() ? t.VariableIndex(*node.var) : -1;
    for (const TreeEdge& e : node.edges) {
      Config child = config.at(id);
      if (var_idx >= 0) child[var_idx] = e.label;
      config[e.to] = std::move(child);
      queue.push_back(e.to);
    }
  }
  return config;
}

std::string ProjectKey(const Config& c, const std::vector<int>& subset) {
  std::string key;
  for (int idx : subset) {
    if (c[idx].has_value()) {
      key += "1" + *c[idx];
    } else {
      key += "0";
    }
    key.push_back('\x1f');
  }
  return key;
}

bool MembershipIsFunctionOf(const std::vector<NodeId>& vertices,
                            const std::map<NodeId, Config>& configs,
                            const std::map<NodeId, std::string>& membership,
                            const std::vector<int>& subset) {
  std::map<std::string, const std::string*> seen;
  for (const NodeId& id : vertices) {
    const std::string& m = membership.at(id);
    auto [it, inserted] = seen.emplace(ProjectKey(configs.at(id), subset), &m);
    if (!inserted && *it->second != m) return false;
  }
  return true;
}

// Size-s subsets of priors in lexicographic order, which gives the search
// its earliest-variable preference within a size.
std::vector<std::vector<int>> CombinationsOfSize(const std::vector<int>& priors, size_t s) {
  std::vector<std::vector<int>> out;
  if (s > priors.size()) return out;
  std::vector<size_t> idx(s);
  for (size_t i = 0; i < s; ++i) idx[i] = i;
  while (true) {
    std::vector<int> subset(s);
    for (size_t i = 0; i < s; ++i) subset[i] = priors[idx[i]];
    out.push_back(std::move(subset));
    bool advanced = false;
    for (size_t i = s; i-- > 0;) {
      if (idx[i] < priors.size() - s + i) {
        ++idx[i];
        for (size_t j = i + 1; j < s; ++j) idx[j] = idx[j - 1] + 1;
        advanced = true;
        break;
      }
    }
    if (!advanced) break;
  }
  return out;
}

// All minimal conditioning sets: the smallest size at which some subset of
// the priors determines membership, every working subset of that size.
std::vector<std::vector<int>> FindMinimalSets(const std::vector<NodeId>& vertices,
                                              const std::map<NodeId, Config>& configs,
                                              const std::map<NodeId, std::string>& membership,
                                              const std::vector<int>& priors) {
  for (size_t s = 0; s <= priors.size(); ++s) {
    std::vector<std::vector<int>> hits;
    for (const std::vector<int>& subset : CombinationsOfSize(priors, s)) {
      if (MembershipIsFunctionOf(vertices, configs, membership, subset)) {
        hits.push_back(subset);
      }
    }
    if (!hits.empty()) return hits;
  }
  // Two vertices with one full-prior projection share a root path, so the
  // full set always works and the loop cannot fall through; kept for form.
  return {priors};
}

std::vector<NodeId> LevelVertices(const GameTree& t, const std::string& v) {
  std::vector<NodeId> out;
  for (const auto& [id, node] : t.nodes) {
    if (node.var.has_value() && *node.var == v) out.push_back(id);
  }
  return out;
}

bool LevelHasDecision(const GameTree& t, const std::string& v) {
  for (const auto& [id, node] : t.nodes) {
    if (node.var.has_value() && *node.var == v && node.kind == NodeKind::kDecision) {
      return true;
    }
  }
  return false;
}

bool LevelIsChance(const GameTree& t, const std::string& v) {
  bool any = false;
  for (const auto& [id, node] : t.nodes) {
    if (!node.var.has_value() || *node.var != v) continue;
    if (node.kind != NodeKind::kChance) return false;
    any = true;
  }
  return any;
}

void FilterByContext(const GameTree& t, const std::map<NodeId, Config>& configs,
                     const CiContext& ctx, std::vector<NodeId>* vertices) {
  int idx = VarIndexOrThrow(t, ctx.var);
  std::vector<NodeId> kept;
  for (const NodeId& id : *vertices) {
    const Config& c = configs.at(id);
    if (c[idx].has_value() && *c[idx] == ctx.value) kept.push_back(id);
  }
  *vertices = std::move(kept);
}

std::vector<int> PriorIndices(const GameTree& t, int upto_exclusive,
                              const std::optional<CiContext>& ctx) {
  size_t end = upto_exclusive < 0 ? t.variables.size() : static_cast<size_t>(upto_exclusive);
  int skip = ctx.has_value() ? t.VariableIndex(ctx->var) : -1;
  std::vector<int> out;
  for (size_t i = 0; i < end; ++i) {
    if (static_cast<int>(i) != skip) out.push_back(static_cast<int>(i));
  }
  return out;
}

std::vector<CiStatement> AssembleStatements(
    const GameTree& t, CiKind kind, const std::string& cut, bool utility_target,
    const std::vector<std::string>& base_targets, bool decision_leads,
    const std::vector<NodeId>& vertices, const std::map<NodeId, Config>& configs,
    const std::map<NodeId, std::string>& membership, const std::vector<int>& priors,
    const std::optional<CiContext>& ctx) {
  if (vertices.empty()) return {};
  std::vector<std::vector<int>> hits = FindMinimalSets(vertices, configs, membership, priors);
  std::vector<CiStatement> out;
  for (size_t h = 0; h < hits.size(); ++h) {
    const std::vector<int>& r = hits[h];
    if (r.size() == priors.size()) break;  // nothing is superfluous: vacuous
    CiStatement s;
    s.kind = kind;
    s.cut = cut;
    s.utility_target = utility_target;
    s.targets = base_targets;
    std::set<int> in_r(r.begin(), r.end());
    for (int i : priors) {
      if (in_r.count(i) == 0) s.superfluous.push_back(t.variables[i]);
    }
    if (decision_leads) s.conditioners.push_back(cut);
    for (int i : r) s.conditioners.push_back(t.variables[i]);
    s.context = ctx;
    s.alternative = h > 0;
    out.push_back(std::move(s));
  }
  return out;
}

std::string JoinComma(const std::vector<std::string>& xs) {
  std::string out;
  for (size_t i = 0; i < xs.size(); ++i) {
    if (i > 0) out += ", ";
    out += xs[i];
  }
  return out;
}

int KindRank(CiKind k) {
  switch (k) {
    case CiKind::kStageCut:
      return 0;
    case CiKind::kPositionCut:
      return 1;
    case CiKind::kParsimony:
      return 2;
    case CiKind::kUtilityCut:
      return 3;
  }
  return 4;
}

std::string_view KindName(CiKind k) {
  switch (k) {
    case CiKind::kStageCut:
      return "stage_cut";
    case CiKind::kPositionCut:
      return "position_cut";
    case CiKind::kParsimony:
      return "parsimony";
    case CiKind::kUtilityCut:
      return "utility_cut";
  }
  return "unknown";
}

}  // namespace

std::string CiStatement::Render() const {
  auto group = [](const std::vector<std::string>& xs) {
    return xs.size() == 1 ? xs[0] : "(" + JoinComma(xs) + ")";
  };
  std::vector<std::string> tg;
  if (utility_target) tg.push_back("U");
  tg.insert(tg.end(), targets.begin(), targets.end());
  std::string out = group(tg) + " ⟂ " + group(superfluous) + " | " +
                    (conditioners.empty() ? "∅" : group(conditioners));
  if (context.has_value()) out += " [ctx: " + context->var + "=" + context->value + "]";
  return out;
}

std::vector<CiStatement> StageCutStatements(const GameTree& t, const StagePartition& stages,
                                            const std::string& v,
                                            const std::optional<CiContext>& ctx) {
  int idx = VarIndexOrThrow(t, v);
  // Stage membership of a decision level only reflects the action sets, so
  // the probabilistic stage reading applies to pure chance levels.
  if (!LevelIsChance(t, v)) return {};
  std::map<NodeId, Config> configs = BuildConfigs(t);
  std::vector<NodeId> vertices = LevelVertices(t, v);
  if (ctx.has_value()) FilterByContext(t, configs, *ctx, &vertices);
  std::map<NodeId, std::string> membership;
  for (const NodeId& id : vertices) membership[id] = std::to_string(stages.stage_of.at(id));
  return AssembleStatements(t, CiKind::kStageCut, v, false, {v}, false, vertices, configs,
                            membership, PriorIndices(t, idx, ctx), ctx);
}

std::vector<CiStatement> PositionCutStatements(const GameTree& t,
                                               const PositionPartition& positions,
                                               const std::string& v,
                                               const std::optional<CiContext>& ctx) {
  int idx = VarIndexOrThrow(t, v);
  std::map<NodeId, Config> configs = BuildConfigs(t);
  std::vector<NodeId> vertices = LevelVertices(t, v);
  bool decision_level = LevelHasDecision(t, v);
  if (ctx.has_value()) FilterByContext(t, configs, *ctx, &vertices);
  std::map<NodeId, std::string> membership;
  for (const NodeId& id : vertices) membership[id] = positions.position_of.at(id);
  std::vector<int> priors = PriorIndices(t, idx, ctx);
  if (decision_level) {
    // Parsimony reading: given the decision and R the position is fixed,
    // and with it everything utility-relevant that can still happen.
    return AssembleStatements(t, CiKind::kParsimony, v, true, {}, true, vertices, configs,
                              membership, priors, ctx);
  }
  std::vector<std::string> targets = {v};
  for (size_t j = static_cast<size_t>(idx) + 1; j < t.variables.size(); ++j) {
    if (LevelIsChance(t, t.variables[j])) targets.push_back(t.variables[j]);
  }
  return AssembleStatements(t, CiKind::kPositionCut, v, true, targets, false, vertices,
                            configs, membership, priors, ctx);
}

std::vector<CiStatement> UtilityCutStatements(const GameTree& t,
                                              const PositionPartition& positions,
                                              const std::optional<CiContext>& ctx) {
  std::map<NodeId, Config> configs = BuildConfigs(t);
  std::vector<NodeId> vertices;
  for (const auto& [id, node] : t.nodes) {
    if (node.kind == NodeKind::kUtility) vertices.push_back(id);
  }
  if (ctx.has_value()) FilterByContext(t, configs, *ctx, &vertices);
  std::map<NodeId, std::string> membership;
  for (const NodeId& id : vertices) membership[id] = positions.position_of.at(id);
  return AssembleStatements(t, CiKind::kUtilityCut, "", true, {}, false, vertices, configs,
                            membership, PriorIndices(t, -1, ctx), ctx);
}

std::vector<CiStatement> ContextStatements(const GameTree& t, const CiContext& ctx) {
  int cidx = VarIndexOrThrow(t, ctx.var);
  std::map<NodeId, Config> configs = BuildConfigs(t);
  bool realized = false;
  for (const auto& [id, c] : configs) {
    if (c[cidx].has_value() && *c[cidx] == ctx.value) {
      realized = true;
      break;
    }
  }
  if (!realized) {
    throw std::invalid_argument("empty slice: no vertex observes " + ctx.var + "=" +
                                ctx.value);
  }
  StagePartition stages = ComputeStages(t);
  PositionPartition positions = ComputePositions(t);
  std::vector<CiStatement> out;
  for (size_t j = static_cast<size_t>(cidx) + 1; j < t.variables.size(); ++j) {
    for (auto& s : StageCutStatements(t, stages, t.variables[j], ctx)) out.push_back(s);
    for (auto& s : PositionCutStatements(t, positions, t.variables[j], ctx)) out.push_back(s);
  }
  for (auto& s : UtilityCutStatements(t, positions, ctx)) out.push_back(s);
  return out;
}

std::vector<CiStatement> AllStatements(const GameTree& t, int max_vars) {
  if (t.variables.empty()) {
    throw std::invalid_argument("tree has no variable annotations");
  }
  if (static_cast<int>(t.variables.size()) > max_vars) {
    throw GuardError("variable count " + std::to_string(t.variables.size()) +
                     " exceeds the subset-search limit " + std::to_string(max_vars));
  }
  for (const std::string& v : t.variables) {
    if (v == "U") {
      throw std::invalid_argument("variable name 'U' is reserved for the utility target");
    }
  }
  for (const auto& [id, node] : t.nodes) {
    if (node.kind != NodeKind::kUtility && !node.var.has_value()) {
      throw std::invalid_argument("node '" + id + "' lacks a variable annotation");
    }
  }

  StagePartition stages = ComputeStages(t);
  PositionPartition positions = ComputePositions(t);

  std::vector<CiStatement> out;
  for (const std::string& v : t.variables) {
    for (auto& s : StageCutStatements(t, stages, v)) out.push_back(s);
    for (auto& s : PositionCutStatements(t, positions, v)) out.push_back(s);
  }
  for (auto& s : UtilityCutStatements(t, positions)) out.push_back(s);

  // A context statement that merely restates an unconditioned one on a
  // slice (same cut and conditioners, nothing new superfluous) is dropped.
  auto key_of = [](const CiStatement& s) {
    return std::to_string(KindRank(s.kind)) + "|" + s.cut + "|" + JoinComma(s.conditioners);
  };
  std::map<std::string, std::set<std::string>> unconditioned;
  for (const CiStatement& s : out) {
    unconditioned[key_of(s)].insert(s.superfluous.begin(), s.superfluous.end());
  }
  auto subsumed = [&](const CiStatement& s) {
    auto it = unconditioned.find(key_of(s));
    if (it == unconditioned.end()) return false;
    for (const std::string& x : s.superfluous) {
      if (it->second.count(x) == 0) return false;
    }
    return true;
  };

  for (size_t c = 0; c < t.variables.size(); ++c) {
    std::set<std::string> values;
    for (const auto& [id, node] : t.nodes) {
      if (!node.var.has_value() || *node.var != t.variables[c]) continue;
      for (const TreeEdge& e : node.edges) values.insert(e.label);
    }
    for (const std::string& value : values) {
      CiContext ctx{t.variables[c], value};
      for (size_t j = c + 1; j < t.variables.size(); ++j) {
        for (auto& s : StageCutStatements(t, stages, t.variables[j], ctx)) {
          if (!subsumed(s)) out.push_back(s);
        }
        for (auto& s : PositionCutStatements(t, positions, t.variables[j], ctx)) {
          if (!subsumed(s)) out.push_back(s);
        }
      }
      for (auto& s : UtilityCutStatements(t, positions, ctx)) {
        if (!subsumed(s)) out.push_back(s);
      }
    }
  }

  auto sort_key = [&t](const CiStatement& s) {
    return std::make_tuple(
        s.context.has_value() ? 1 : 0,
        s.context.has_value() ? t.VariableIndex(s.context->var) : -1,
        s.context.has_value() ? s.context->value : std::string(),
        KindRank(s.kind),
        s.cut.empty() ? static_cast<int>(t.variables.size()) : t.VariableIndex(s.cut),
        s.alternative ? 1 : 0, JoinComma(s.conditioners), JoinComma(s.superfluous));
  };
  std::sort(out.begin(), out.end(),
            [&sort_key](const CiStatement& a, const CiStatement& b) {
              return sort_key(a) < sort_key(b);
            });
  return out;
}

std::string StatementsToJson(const std::vector<CiStatement>& statements) {
  using internal::Json;
  Json arr = Json::array();
  for (const CiStatement& s : statements) {
    Json j;
    j["kind"] = std::string(KindName(s.kind));
    if (s.cut.empty()) {
      j["cut"] = nullptr;
    } else {
      j["cut"] = s.cut;
    }
    Json targets = Json::array();
    if (s.utility_target) targets.push_back("U");
    for (const std::string& v : s.targets) targets.push_back(v);
    j["targets"] = std::move(targets);
    j["superfluous"] = s.superfluous;
    j["conditioners"] = s.conditioners;
    if (s.context.has_value()) {
      Json c;
      c["var"] = s.context->var;
      c["value"] = s.context->value;
      j["context"] = std::move(c);
    } else {
      j["context"] = nullptr;
    }
    j["alternative"] = s.alternative;
    j["text"] = s.Render();
    arr.push_back(std::move(j));
  }
  Json out;
  out["statement_count"] = statements.size();
  out["statements"] = std::move(arr);
  return internal::Dump(out);
}

}  // namespace ceg
