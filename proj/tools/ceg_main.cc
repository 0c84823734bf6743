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

// Command line front end. Exit codes: 0 success, 1 the document failed to
// parse or validate, 2 I/O problems, guard trips, and usage errors.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>

#include "ceg/ceg.h"
#include "ceg/ci.h"
#include "ceg/dot.h"
#include "ceg/errors.h"
#include "ceg/game.h"
#include "ceg/game_io.h"
#include "ceg/generator.h"
#include "ceg/simplify.h"
#include "ceg/solve.h"

namespace {

std::string ReadFile(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << f.rdbuf();
  if (f.bad()) throw std::runtime_error("cannot read '" + path + "'");
  return buf.str();
}

// Writes via a temp file plus rename so readers never observe a partial
// document. Empty path means stdout.
void WriteOutput(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    return;
  }
  std::string tmp = path + ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot write '" + tmp + "'");
    f << content;
    f.flush();
    if (!f) throw std::runtime_error("cannot write '" + tmp + "'");
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) {
    throw std::runtime_error("cannot rename '" + tmp + "' to '" + path + "'");
  }
}

std::optional<ceg::GameTree> LoadValidated(const std::string& path) {
  ceg::GameTree t = ceg::ParseGame(ReadFile(path));
  std::vector<ceg::Diagnostic> diags = ceg::Validate(t);
  if (!diags.empty()) {
    for (const ceg::Diagnostic& d : diags) {
      std::cerr << "error: " << (d.node.empty() ? "" : "node '" + d.node + "': ")
                << d.message << "\n";
    }
    return std::nullopt;
  }
  return t;
}

struct CommonArgs {
  std::string input;
  std::string output;
  std::string dot;
};

void AddIo(CLI::App* cmd, CommonArgs* args, bool with_dot) {
  cmd->add_option("-i,--input", args->input, "input game document")->required();
  cmd->add_option("-o,--output", args->output, "output path (default stdout)");
  if (with_dot) cmd->add_option("--dot", args->dot, "also write a DOT rendering here");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"chain event graph toolkit for extensive-form games with chance"};
  app.require_subcommand(1);

  CommonArgs validate_args;
  CLI::App* cmd_validate = app.add_subcommand("validate", "check a game document");
  cmd_validate->add_option("-i,--input", validate_args.input, "input game document")
      ->required();

  CommonArgs build_args;
  CLI::App* cmd_build = app.add_subcommand("build", "build the chain event graph");
  AddIo(cmd_build, &build_args, true);

  CommonArgs simplify_args;
  bool emit_trace = false;
  CLI::App* cmd_simplify =
      app.add_subcommand("simplify", "build and reduce to the parsimonious form");
  AddIo(cmd_simplify, &simplify_args, true);
  cmd_simplify->add_flag("--emit-trace", emit_trace, "include the simplification trace");

  CommonArgs solve_args;
  CLI::App* cmd_solve = app.add_subcommand("solve", "propagate optimal utility vectors");
  AddIo(cmd_solve, &solve_args, true);

  CommonArgs ci_args;
  int max_subset = 12;
  CLI::App* cmd_ci =
      app.add_subcommand("ci", "read conditional independencies off the tree");
  AddIo(cmd_ci, &ci_args, false);
  cmd_ci->add_option("--max-subset", max_subset,
                     "largest variable count the subset search accepts");

  CommonArgs export_args;
  CLI::App* cmd_export = app.add_subcommand("export", "render the graph as DOT");
  AddIo(cmd_export, &export_args, true);

  CommonArgs generate_args;
  uint64_t seed = 0;
  bool with_ties = false;
  CLI::App* cmd_generate = app.add_subcommand("generate", "emit a random game document");
  cmd_generate->add_option("-o,--output", generate_args.output,
                           "output path (default stdout)");
  cmd_generate->add_option("--seed", seed, "generator seed");
  cmd_generate->add_flag("--with-ties", with_ties, "force an exact tie at the root");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (cmd_validate->parsed()) {
      std::optional<ceg::GameTree> t = LoadValidated(validate_args.input);
      if (!t.has_value()) return 1;
      std::cout << "valid: " << t->nodes.size() << " nodes, " << t->players.size()
                << " players\n";
      return 0;
    }
    if (cmd_build->parsed()) {
      std::optional<ceg::GameTree> t = LoadValidated(build_args.input);
      if (!t.has_value()) return 1;
      ceg::Ceg g = ceg::BuildCeg(*t);
      WriteOutput(build_args.output, ceg::CegToJson(g));
      if (!build_args.dot.empty()) WriteOutput(build_args.dot, ceg::ExportDot(g));
      return 0;
    }
    if (cmd_simplify->parsed()) {
      std::optional<ceg::GameTree> t = LoadValidated(simplify_args.input);
      if (!t.has_value()) return 1;
      ceg::Ceg g = ceg::BuildCeg(ceg::PushEdgeUtilitiesToLeaves(*t));
      auto [reduced, trace] = ceg::Parsimonize(g);
      WriteOutput(simplify_args.output,
                  ceg::SimplifyReportToJson(reduced, trace, emit_trace));
      if (!simplify_args.dot.empty()) {
        WriteOutput(simplify_args.dot, ceg::ExportDot(reduced));
      }
      return 0;
    }
    if (cmd_solve->parsed()) {
      std::optional<ceg::GameTree> t = LoadValidated(solve_args.input);
      if (!t.has_value()) return 1;
      ceg::Ceg g = ceg::BuildCeg(ceg::PushEdgeUtilitiesToLeaves(*t));
      auto [reduced, trace] = ceg::Parsimonize(g);
      ceg::Solution sol = ceg::Propagate(reduced);
      WriteOutput(solve_args.output, ceg::SolutionToJson(reduced, sol));
      if (!solve_args.dot.empty()) {
        WriteOutput(solve_args.dot, ceg::ExportDot(reduced, &sol));
      }
      return 0;
    }
    if (cmd_ci->parsed()) {
      std::optional<ceg::GameTree> t = LoadValidated(ci_args.input);
      if (!t.has_value()) return 1;
      ceg::GameTree pushed = ceg::PushEdgeUtilitiesToLeaves(*t);
      std::vector<ceg::CiStatement> statements = ceg::AllStatements(pushed, max_subset);
      WriteOutput(ci_args.output, ceg::StatementsToJson(statements));
      return 0;
    }
    if (cmd_export->parsed()) {
      std::optional<ceg::GameTree> t = LoadValidated(export_args.input);
      if (!t.has_value()) return 1;
      ceg::Ceg g = ceg::BuildCeg(*t);
      std::string dot = ceg::ExportDot(g);
      WriteOutput(export_args.dot.empty() ? export_args.output : export_args.dot, dot);
      return 0;
    }
    if (cmd_generate->parsed()) {
      ceg::GameTree t = ceg::GenerateGame({seed, with_ties});
      WriteOutput(generate_args.output, ceg::SerializeGame(t));
      return 0;
    }
  } catch (const ceg::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const ceg::GuardError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
