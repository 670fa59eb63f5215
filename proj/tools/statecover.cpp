// Copyright 2026 The statecover Authors.
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

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "statecover/generator.hpp"
#include "statecover/metrics.hpp"
#include "statecover/minimizer.hpp"
#include "statecover/model.hpp"
#include "statecover/parser.hpp"
#include "statecover/tgraph.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitIo = 1;        // I/O or syntax error
constexpr int kExitSemantic = 2;  // violations, semantic errors, inconsistency
constexpr int kExitCap = 3;       // suite cap exceeded

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const std::string& out_path, const std::string& payload) {
  if (out_path.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw IoError("cannot open " + out_path + " for writing");
  out << payload;
}

// Parses, validates and flattens a model file. Violations go to stderr and
// raise SemanticError.
statecover::Statechart load_model(const std::string& path) {
  statecover::Statechart sc = statecover::parse_statechart(read_file(path));
  auto violations = statecover::validate(sc);
  if (!violations.empty()) {
    for (const auto& v : violations) std::cerr << v.message << "\n";
    throw statecover::SemanticError("model is not well formed");
  }
  return statecover::flatten(sc);
}

std::size_t suite_cap() {
  if (const char* env = std::getenv("STATECOVER_CAP")) {
    return std::stoull(env);
  }
  return statecover::kDefaultSuiteCap;
}

void check_suite_consistency(const statecover::Statechart& sc,
                             const statecover::TestSuite& suite) {
  using statecover::SemanticError;
  if (suite.cases.empty()) throw SemanticError("suite has no test cases");
  for (const auto& tc : suite.cases) {
    if (tc.state_trace.size() != tc.transition_trace.size() + 1) {
      throw SemanticError("test case " + tc.id + " has inconsistent traces");
    }
    if (!sc.find_state(tc.initial_state)) {
      throw SemanticError("test case " + tc.id + " starts at unknown state " +
                          tc.initial_state);
    }
    for (std::size_t i = 0; i < tc.transition_trace.size(); ++i) {
      const statecover::Transition* t =
          sc.find_transition(tc.transition_trace[i]);
      if (!t || t->source != tc.state_trace[i] ||
          t->target != tc.state_trace[i + 1]) {
        throw SemanticError("test case " + tc.id +
                            " does not match the model at step " +
                            std::to_string(i + 1));
      }
    }
  }
}

int run_cli(int argc, char** argv) {
  CLI::App app{"statechart test generation, minimization and coverage"};
  app.require_subcommand(1);

  std::string model_path, suite_path, out_path;
  int k = 1;
  std::string mode = "enumerate";
  std::optional<int> max_len;
  bool guard_probes = false;
  std::string rule = "element", group = "global", format = "text";
  std::optional<int> path_bound;

  auto* validate_cmd = app.add_subcommand("validate", "check a model file");
  validate_cmd->add_option("model", model_path)->required();

  auto* generate_cmd = app.add_subcommand("generate", "generate a test suite");
  generate_cmd->add_option("model", model_path)->required();
  generate_cmd->add_option("--mode", mode, "enumerate | ktc | ftc")
      ->check(CLI::IsMember({"enumerate", "ktc", "ftc"}));
  generate_cmd->add_option("--k", k, "sequence length for ktc");
  generate_cmd->add_option("--max-len", max_len,
                           "maximum sequence length for enumerate");
  generate_cmd->add_flag("--guard-probes", guard_probes,
                         "add guard-false probe cases to ftc suites");
  generate_cmd->add_option("--out", out_path);

  auto* minimize_cmd = app.add_subcommand("minimize", "drop subsumed cases");
  minimize_cmd->add_option("suite", suite_path)->required();
  minimize_cmd->add_option("model", model_path)->required();
  minimize_cmd->add_option("--rule", rule, "node | transition | element")
      ->check(CLI::IsMember({"node", "transition", "element"}));
  minimize_cmd->add_option("--group", group, "global | by-start")
      ->check(CLI::IsMember({"global", "by-start"}));
  minimize_cmd->add_option("--out", out_path);

  auto* report_cmd = app.add_subcommand("report", "coverage of a suite");
  report_cmd->add_option("model", model_path)->required();
  report_cmd->add_option("suite", suite_path)->required();
  report_cmd->add_option("--path-bound", path_bound);
  report_cmd->add_option("--format", format, "text | json")
      ->check(CLI::IsMember({"text", "json"}));
  report_cmd->add_option("--out", out_path);

  auto* graph_cmd = app.add_subcommand("graph", "DOT transition graph");
  graph_cmd->add_option("model", model_path)->required();
  graph_cmd->add_option("--k", k, "sequence-graph level");
  graph_cmd->add_option("--out", out_path);

  CLI11_PARSE(app, argc, argv);

  if (validate_cmd->parsed()) {
    statecover::Statechart sc = statecover::parse_statechart(read_file(model_path));
    auto violations = statecover::validate(sc);
    if (violations.empty()) {
      std::cout << "ok\n";
      return kExitOk;
    }
    for (const auto& v : violations) std::cout << v.message << "\n";
    return kExitSemantic;
  }

  if (generate_cmd->parsed()) {
    statecover::Statechart sc = load_model(model_path);
    statecover::TestSuite suite;
    if (mode == "enumerate") {
      int len = max_len.value_or(statecover::default_path_bound(sc));
      suite = statecover::enumerate_sequences(sc, len, suite_cap());
    } else if (mode == "ktc") {
      suite = statecover::generate_ktc_suite(sc, k);
    } else {
      suite = statecover::generate_ftc_suite(sc, guard_probes);
    }
    write_output(out_path, statecover::suite_to_json(suite));
    return kExitOk;
  }

  if (minimize_cmd->parsed()) {
    statecover::Statechart sc = load_model(model_path);
    statecover::TestSuite suite =
        statecover::suite_from_json(read_file(suite_path));
    check_suite_consistency(sc, suite);

    statecover::SubsumptionStrategy strategy;
    strategy.relation =
        rule == "node" ? statecover::SubsumptionRelation::kNodeSubset
        : rule == "transition"
            ? statecover::SubsumptionRelation::kTransitionSubset
            : statecover::SubsumptionRelation::kElementSubset;
    strategy.grouping = group == "by-start"
                            ? statecover::Grouping::kByInitialState
                            : statecover::Grouping::kGlobal;

    statecover::TestSuite minimized =
        statecover::minimize_suite(suite, strategy);

    // NC table for the discarded cases, on the side channel.
    for (const auto& tc : suite.cases) {
      auto nc = statecover::covering_set(tc, suite, strategy);
      if (nc.empty()) continue;
      std::cerr << "NC(" << tc.id << ") = {";
      bool first = true;
      for (const auto& id : nc) {
        if (!first) std::cerr << ", ";
        std::cerr << id;
        first = false;
      }
      std::cerr << "}\n";
    }
    write_output(out_path, statecover::suite_to_json(minimized));
    return kExitOk;
  }

  if (report_cmd->parsed()) {
    statecover::Statechart sc = load_model(model_path);
    statecover::TestSuite suite =
        statecover::suite_from_json(read_file(suite_path));
    check_suite_consistency(sc, suite);
    statecover::CoverageReport report =
        statecover::coverage_report(sc, suite, path_bound);
    write_output(out_path, format == "json"
                               ? statecover::report_to_json(report)
                               : statecover::report_to_text(report));
    return kExitOk;
  }

  if (graph_cmd->parsed()) {
    statecover::Statechart sc = load_model(model_path);
    statecover::TransitionGraph base = statecover::build_transition_graph(sc);
    statecover::TransitionGraph tg =
        k > 1 ? statecover::k_fold_transform(base, k) : base;
    write_output(out_path, statecover::export_dot(statecover::augment(tg)));
    return kExitOk;
  }

  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run_cli(argc, argv);
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const statecover::SyntaxError& e) {
    std::cerr << "syntax error: " << e.what() << "\n";
    return kExitIo;
  } catch (const statecover::SuiteTooLargeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCap;
  } catch (const statecover::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitSemantic;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  }
}
