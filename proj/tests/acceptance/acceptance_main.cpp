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

// End-to-end acceptance checks. Each criterion prints one PASS/FAIL line;
// the process exits nonzero when any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "statecover/generator.hpp"
#include "statecover/interpreter.hpp"
#include "statecover/metrics.hpp"
#include "statecover/minimizer.hpp"
#include "statecover/model.hpp"
#include "statecover/parser.hpp"
#include "statecover/tgraph.hpp"

using namespace statecover;

namespace {

int g_failures = 0;

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start)
      .count();
}

void report(int criterion, const std::string& name, bool ok,
            const std::string& detail = "") {
  std::cout << (ok ? "PASS" : "FAIL") << " criterion " << criterion << ": "
            << name;
  if (!detail.empty()) std::cout << " (" << detail << ")";
  std::cout << "\n";
  if (!ok) ++g_failures;
}

// The frozen 26-case golden suite: transition traces in canonical order.
const std::vector<std::vector<std::string>>& golden_traces() {
  static const std::vector<std::vector<std::string>> traces = {
      {"TR1"},
      {"TR1", "TR2"},
      {"TR1", "TR2", "TR3"},
      {"TR1", "TR2", "TR3", "TR4"},
      {"TR1", "TR2", "TR3", "TR4", "TR5"},
      {"TR1", "TR2", "TR3", "TR4", "TR6"},
      {"TR1", "TR2", "TR3", "TR4", "TR6", "TR7"},
      {"TR2"},
      {"TR2", "TR3"},
      {"TR2", "TR3", "TR4"},
      {"TR2", "TR3", "TR4", "TR5"},
      {"TR2", "TR3", "TR4", "TR6"},
      {"TR2", "TR3", "TR4", "TR6", "TR7"},
      {"TR3"},
      {"TR3", "TR4"},
      {"TR3", "TR4", "TR5"},
      {"TR3", "TR4", "TR6"},
      {"TR3", "TR4", "TR6", "TR7"},
      {"TR4"},
      {"TR4", "TR5"},
      {"TR4", "TR6"},
      {"TR4", "TR6", "TR7"},
      {"TR5"},
      {"TR6"},
      {"TR6", "TR7"},
      {"TR7"}};
  return traces;
}

void criterion_1_enumeration() {
  auto start = Clock::now();
  Statechart atm = oracles::load_model("atm.scd");
  TestSuite suite = enumerate_sequences(atm, 7, kDefaultSuiteCap);
  double ms = elapsed_ms(start);

  bool ok = suite.cases.size() == 26;
  const auto& golden = golden_traces();
  for (std::size_t i = 0; ok && i < golden.size(); ++i) {
    const TestCase& tc = suite.cases[i];
    if (tc.id != "tc" + std::to_string(i + 1)) ok = false;
    if (tc.transition_trace != golden[i]) ok = false;
    // State trace follows the source/target chain of the transitions.
    std::vector<std::string> states{
        atm.find_transition(golden[i].front())->source};
    for (const auto& tid : golden[i]) {
      states.push_back(atm.find_transition(tid)->target);
    }
    if (tc.state_trace != states) ok = false;
    if (tc.initial_state != states.front()) ok = false;
  }
  ok = ok && ms < 1000.0;
  report(1, "ATM enumeration matches the 26 golden cases", ok,
         std::to_string(suite.cases.size()) + " cases, " +
             std::to_string((int)ms) + " ms");
}

void criterion_2_covering_sets() {
  Statechart atm = oracles::load_model("atm.scd");
  TestSuite suite = enumerate_sequences(atm, 7, kDefaultSuiteCap);
  SubsumptionStrategy tr_global{SubsumptionRelation::kTransitionSubset,
                                Grouping::kGlobal};
  bool ok =
      covering_set(*suite.find("tc1"), suite, tr_global) ==
          std::set<std::string>{"tc2", "tc3", "tc4", "tc5", "tc6", "tc7"} &&
      covering_set(*suite.find("tc26"), suite, tr_global) ==
          std::set<std::string>{"tc7", "tc13", "tc18", "tc22", "tc25"};

  // Independent subset checker over every pair, every strategy.
  const std::pair<SubsumptionRelation, const char*> relations[] = {
      {SubsumptionRelation::kNodeSubset, "node"},
      {SubsumptionRelation::kTransitionSubset, "transition"},
      {SubsumptionRelation::kElementSubset, "element"}};
  for (const auto& [relation, name] : relations) {
    for (Grouping grouping : {Grouping::kGlobal, Grouping::kByInitialState}) {
      for (const auto& tc : suite.cases) {
        auto got = covering_set(tc, suite, {relation, grouping});
        auto want = oracles::covering_set_oracle(
            tc, suite, name, grouping == Grouping::kByInitialState);
        if (got != want) ok = false;
      }
    }
  }
  report(2, "covering sets match the frozen values and the brute-force checker",
         ok);
}

void criterion_3_minimization_safety() {
  bool ok = true;
  std::string detail;
  const SubsumptionRelation relations[] = {
      SubsumptionRelation::kNodeSubset, SubsumptionRelation::kTransitionSubset,
      SubsumptionRelation::kElementSubset};
  for (const auto& name : oracles::corpus()) {
    Statechart sc = oracles::load_model(name);
    TestSuite suite = enumerate_sequences(sc, 5, kDefaultSuiteCap);
    for (auto relation : relations) {
      SubsumptionStrategy strategy{relation, Grouping::kGlobal};
      TestSuite minimized = minimize_suite(suite, strategy);
      std::set<std::string> full, kept;
      for (const auto& tc : suite.cases) {
        auto e = element_set(tc, relation);
        full.insert(e.begin(), e.end());
      }
      for (const auto& tc : minimized.cases) {
        auto e = element_set(tc, relation);
        kept.insert(e.begin(), e.end());
      }
      if (kept != full) {
        ok = false;
        detail = name;
      }
    }
  }

  Statechart atm = oracles::load_model("atm.scd");
  TestSuite atm_suite = enumerate_sequences(atm, 7, kDefaultSuiteCap);
  TestSuite minimized = minimize_suite(
      atm_suite, {SubsumptionRelation::kTransitionSubset, Grouping::kGlobal});
  std::vector<std::string> ids;
  for (const auto& tc : minimized.cases) ids.push_back(tc.id);
  if (ids != std::vector<std::string>{"tc5", "tc7"}) ok = false;
  if (coverage_report(atm, minimized).transition.ratio() != 1.0) ok = false;
  report(3, "minimization preserves coverage; ATM keeps {tc5, tc7}", ok,
         detail);
}

void criterion_4_transition_graph() {
  auto start = Clock::now();
  Statechart atm = oracles::load_model("atm.scd");
  TransitionGraph base = build_transition_graph(atm);
  TransitionGraph aug = augment(base);
  double ms = elapsed_ms(start);
  bool ok = base.vertices.size() == 9 && base.edges.size() == 9 &&
            aug.edges.size() == 10 && strongly_connected(aug) &&
            !strongly_connected(base) && ms < 10.0;
  report(4, "ATM transition graph is 9V/9E, 10E and strongly connected "
            "after augmentation",
         ok, std::to_string(ms) + " ms");
}

void criterion_5_kfold_counts() {
  bool ok = true;
  for (const auto& name : oracles::corpus()) {
    Statechart sc = oracles::load_model(name);
    TransitionGraph base = build_transition_graph(sc);
    for (int k = 1; k <= 4; ++k) {
      std::size_t expected = 0;
      for (const auto& seq : oracles::all_sequences(sc, k)) {
        if ((int)seq.size() == k) ++expected;
      }
      if (expected == 0) {
        try {
          k_fold_transform(base, k);
          ok = false;
        } catch (const EmptyGraphError&) {
        }
        continue;
      }
      if (k_fold_transform(base, k).sequence_vertices().size() != expected) {
        ok = false;
      }
    }
  }
  Statechart atm = oracles::load_model("atm.scd");
  if (k_fold_transform(build_transition_graph(atm), 2)
          .sequence_vertices()
          .size() != 6) {
    ok = false;
  }
  report(5, "k-fold vertex counts equal brute-force sequence counts (k <= 4)",
         ok);
}

void criterion_6_gtsp_exactness() {
  bool ok = true;
  double worst_ms = 0.0;
  for (const auto& name : oracles::corpus()) {
    Statechart sc = oracles::load_model(name);
    TransitionGraph base = build_transition_graph(sc);
    for (int k = 1; k <= 3; ++k) {
      TransitionGraph level;
      try {
        level = k_fold_transform(base, k);
      } catch (const EmptyGraphError&) {
        break;
      }
      TransitionGraph aug = augment(level);
      if (aug.vertices.size() > 12 || !strongly_connected(aug)) continue;
      auto start = Clock::now();
      CoveringWalk walk = solve_gtsp(aug);
      double ms = elapsed_ms(start);
      worst_ms = std::max(worst_ms, ms);
      if (walk.cost != oracles::optimal_covering_cost(aug)) ok = false;
      if (ms >= 5000.0) ok = false;
    }
  }

  Statechart atm = oracles::load_model("atm.scd");
  TestSuite ktc = generate_ktc_suite(atm, 1);
  std::set<std::string> covered;
  for (const auto& tc : ktc.cases) {
    if (!tc.complete) ok = false;
    covered.insert(tc.transition_trace.begin(), tc.transition_trace.end());
  }
  if (ktc.cases.size() != 2 || covered.size() != 7) ok = false;
  report(6, "GTSP walks are optimal at desk scale; ATM k=1 yields 2 complete "
            "sequences covering 7/7",
         ok, "worst instance " + std::to_string((int)worst_ms) + " ms");
}

void criterion_7_ftc_completeness() {
  bool ok = true;
  std::string detail;
  auto check_machine = [&](const Statechart& sc, const std::string& label) {
    auto pairs = derive_faulty_pairs(sc);
    TestSuite suite = generate_ftc_suite(sc, false);
    if (suite.cases.size() != pairs.size()) {
      ok = false;
      detail = label + ": case count != pair count";
      return;
    }
    std::set<std::pair<std::string, std::string>> seen;
    for (const auto& tc : suite.cases) {
      ExecTrace trace = run(sc, tc.initial_state, tc.inputs);
      if (trace.accepted() || trace.reject_step != tc.inputs.size() ||
          trace.reject_reason != "no_enabled_transition") {
        ok = false;
        detail = label + ": " + tc.id + " does not reject at the last step";
        return;
      }
      seen.insert({trace.states.back(), tc.inputs.back().event});
    }
    for (const auto& p : pairs) {
      if (!seen.count({p.state, p.event})) {
        ok = false;
        detail = label + ": pair (" + p.state + ", " + p.event + ") missing";
        return;
      }
    }
  };

  check_machine(oracles::load_model("atm.scd"), "atm");
  std::mt19937 rng(7);
  for (int i = 0; i < 20 && ok; ++i) {
    check_machine(oracles::random_machine(rng, 6, 5),
                  "random#" + std::to_string(i));
  }
  report(7, "FTC suites reject exactly at the faulty event, ATM + 20 random "
            "machines",
         ok, detail);
}

void criterion_8_metrics() {
  Statechart atm = oracles::load_model("atm.scd");
  TestSuite full = enumerate_sequences(atm, 7, kDefaultSuiteCap);
  TestSuite one;
  one.cases.push_back(*full.find("tc1"));

  CoverageReport r1 = coverage_report(atm, one);
  CoverageReport rf = coverage_report(atm, full);
  bool ok = r1.state.covered.size() == 2 && r1.state.total() == 7 &&
            r1.transition.covered.size() == 1 && r1.transition.total() == 7 &&
            rf.state.ratio() == 1.0 && rf.transition.ratio() == 1.0 &&
            rf.path.covered.size() == 2 && rf.path.total() == 2 &&
            rf.path_bound == 6;

  // Monotonicity over 100 random prefixes of random permutations.
  std::mt19937 rng(8);
  for (int round = 0; round < 100 && ok; ++round) {
    TestSuite shuffled = full;
    std::shuffle(shuffled.cases.begin(), shuffled.cases.end(), rng);
    std::uniform_int_distribution<std::size_t> len(1, shuffled.cases.size());
    shuffled.cases.resize(len(rng));
    TestSuite growing;
    CoverageReport prev;
    for (std::size_t i = 0; i < shuffled.cases.size(); ++i) {
      growing.cases.push_back(shuffled.cases[i]);
      CoverageReport cur = coverage_report(atm, growing);
      if (i > 0 && (cur.state.ratio() < prev.state.ratio() ||
                    cur.transition.ratio() < prev.transition.ratio() ||
                    cur.path.ratio() < prev.path.ratio() ||
                    cur.action.ratio() < prev.action.ratio() ||
                    cur.condition.ratio() < prev.condition.ratio())) {
        ok = false;
      }
      prev = cur;
    }
  }
  report(8, "metrics match the frozen ATM ratios and are monotone", ok);
}

void criterion_9_parser_robustness() {
  bool ok = true;
  std::string detail;
  for (const auto& name : oracles::corpus()) {
    Statechart sc =
        parse_statechart(oracles::read_file(oracles::data_path(name)));
    std::string canonical = serialize_statechart(sc);
    if (!statecharts_equal(sc, parse_statechart(canonical)) ||
        serialize_statechart(parse_statechart(canonical)) != canonical) {
      ok = false;
      detail = "round-trip failed on " + name;
    }
  }

  std::mt19937 rng(9);
  std::uniform_int_distribution<int> len(0, 200);
  std::uniform_int_distribution<int> byte(0, 255);
  for (int i = 0; i < 10000 && ok; ++i) {
    std::string text;
    int n = len(rng);
    for (int j = 0; j < n; ++j) text += (char)byte(rng);
    try {
      parse_statechart(text);
    } catch (const SyntaxError&) {
    } catch (const std::exception& e) {
      ok = false;
      detail = std::string("fuzz input #") + std::to_string(i) +
               " raised: " + e.what();
    }
  }
  report(9, "parser round-trips the corpus and survives 10^4 fuzz inputs", ok,
         detail);
}

void criterion_10_determinism() {
  auto pipeline = [] {
    std::ostringstream out;
    Statechart atm = oracles::load_model("atm.scd");
    TestSuite suite = enumerate_sequences(atm, 7, kDefaultSuiteCap);
    out << suite_to_json(suite);
    out << suite_to_json(generate_ktc_suite(atm, 2));
    out << suite_to_json(generate_ftc_suite(atm, true));
    TestSuite minimized = minimize_suite(
        suite, {SubsumptionRelation::kTransitionSubset, Grouping::kGlobal});
    out << suite_to_json(minimized);
    out << report_to_json(coverage_report(atm, minimized));
    out << export_dot(augment(build_transition_graph(atm)));
    return out.str();
  };
  std::string first = pipeline();
  std::string second = pipeline();
  report(10, "two full pipeline runs are byte-identical",
         !first.empty() && first == second,
         std::to_string(first.size()) + " bytes");
}

}  // namespace

int main() {
  criterion_1_enumeration();
  criterion_2_covering_sets();
  criterion_3_minimization_safety();
  criterion_4_transition_graph();
  criterion_5_kfold_counts();
  criterion_6_gtsp_exactness();
  criterion_7_ftc_completeness();
  criterion_8_metrics();
  criterion_9_parser_robustness();
  criterion_10_determinism();
  if (g_failures > 0) {
    std::cout << g_failures << " criteria failed\n";
    return 1;
  }
  std::cout << "all criteria passed\n";
  return 0;
}
