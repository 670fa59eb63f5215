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

#include <doctest.h>

#include <algorithm>

#include "oracles.hpp"
#include "statecover/generator.hpp"
#include "statecover/metrics.hpp"
#include "statecover/minimizer.hpp"

using namespace statecover;

namespace {

TestSuite atm_26() {
  Statechart atm = oracles::load_model("atm.scd");
  return enumerate_sequences(atm, 7, kDefaultSuiteCap);
}

TestSuite only(const TestSuite& suite, const std::string& id) {
  TestSuite out;
  const TestCase* tc = suite.find(id);
  REQUIRE(tc);
  out.cases.push_back(*tc);
  return out;
}

}  // namespace

TEST_CASE("complete paths and the default bound on the ATM") {
  Statechart atm = oracles::load_model("atm.scd");
  CHECK(default_path_bound(atm) == 6);
  auto paths = complete_paths(atm, 6);
  REQUIRE(paths.size() == 2);
  CHECK(paths[0] == std::vector<std::string>{"TR1", "TR2", "TR3", "TR4",
                                             "TR5"});
  CHECK(paths[1] == std::vector<std::string>{"TR1", "TR2", "TR3", "TR4", "TR6",
                                             "TR7"});
}

TEST_CASE("complete paths agree with the oracle on the corpus") {
  for (const auto& name : oracles::corpus()) {
    Statechart sc = oracles::load_model(name);
    CAPTURE(name);
    for (int bound = 1; bound <= 6; ++bound) {
      CHECK(complete_paths(sc, bound) ==
            oracles::all_complete_sequences(sc, bound));
    }
  }
}

TEST_CASE("full ATM suite reaches full state and transition coverage") {
  Statechart atm = oracles::load_model("atm.scd");
  CoverageReport report = coverage_report(atm, atm_26());
  CHECK(report.state.ratio() == 1.0);
  CHECK(report.transition.ratio() == 1.0);
  CHECK(report.path.ratio() == 1.0);
  CHECK(report.path.total() == 2);
  // Enumerated inputs always satisfy guards, so no guard is ever seen false.
  CHECK(report.condition.ratio() == 0.0);
  CHECK_FALSE(report.action.applicable);
  CHECK(report.path_bound == 6);
}

TEST_CASE("guard probes complete condition coverage") {
  Statechart atm = oracles::load_model("atm.scd");
  TestSuite suite = atm_26();
  TestSuite probes = generate_ftc_suite(atm, true);
  suite.cases.insert(suite.cases.end(), probes.cases.begin(),
                     probes.cases.end());
  CoverageReport report = coverage_report(atm, suite);
  CHECK(report.condition.ratio() == 1.0);
  CHECK(report.condition.covered ==
        std::vector<std::string>{"TR2", "TR5", "TR6"});
}

TEST_CASE("ATM suite {tc1} coverage") {
  Statechart atm = oracles::load_model("atm.scd");
  CoverageReport report = coverage_report(atm, only(atm_26(), "tc1"));
  CHECK(report.state.covered ==
        std::vector<std::string>{"St1", "St2"});
  CHECK(report.state.ratio() == doctest::Approx(2.0 / 7.0));
  CHECK(report.transition.covered == std::vector<std::string>{"TR1"});
  CHECK(report.transition.ratio() == doctest::Approx(1.0 / 7.0));
  CHECK(report.path.ratio() == 0.0);
  CHECK(report.condition.ratio() == 0.0);
}

TEST_CASE("empty-trace suite scores zero everywhere") {
  Statechart atm = oracles::load_model("atm.scd");
  TestSuite suite;
  TestCase idle;
  idle.id = "tc1";
  idle.initial_state = "St1";
  idle.state_trace = {"St1"};
  suite.cases.push_back(idle);
  CoverageReport report = coverage_report(atm, suite);
  CHECK(report.transition.covered.empty());
  CHECK(report.path.covered.empty());
  CHECK(report.condition.covered.empty());
  CHECK(report.state.covered == std::vector<std::string>{"St1"});
}

TEST_CASE("condition coverage needs both outcomes") {
  Statechart atm = oracles::load_model("atm.scd");
  // tc5 drives n<=6 true and chng==0 true, never false.
  CoverageReport one = coverage_report(atm, only(atm_26(), "tc5"));
  CHECK(one.condition.covered.empty());
  CHECK(one.condition.total() == 3);

  // A probe driving chng == 0 false at St5 completes TR5's pair.
  TestSuite both = only(atm_26(), "tc5");
  TestCase probe;
  probe.id = "tc99";
  probe.initial_state = "St5";
  probe.inputs = {{"e5", {{"chng", 3}}}};
  probe.state_trace = {"St5"};
  both.cases.push_back(probe);
  CoverageReport two = coverage_report(atm, both);
  CHECK(two.condition.covered == std::vector<std::string>{"TR5"});
  CHECK(two.condition.uncovered == std::vector<std::string>{"TR2", "TR6"});
}

TEST_CASE("action coverage counts distinct labels") {
  Statechart branch = oracles::load_model("branch.scd");
  TestSuite suite = enumerate_sequences(branch, 4, kDefaultSuiteCap);
  CoverageReport report = coverage_report(branch, suite);
  CHECK(report.action.applicable);
  CHECK(report.action.ratio() == 1.0);
}

TEST_CASE("adding cases never lowers a ratio") {
  Statechart atm = oracles::load_model("atm.scd");
  TestSuite full = atm_26();
  TestSuite growing;
  CoverageReport prev;
  for (std::size_t i = 0; i < full.cases.size(); ++i) {
    growing.cases.push_back(full.cases[i]);
    CoverageReport cur = coverage_report(atm, growing);
    if (i > 0) {
      CHECK(cur.state.ratio() >= prev.state.ratio());
      CHECK(cur.transition.ratio() >= prev.transition.ratio());
      CHECK(cur.path.ratio() >= prev.path.ratio());
      CHECK(cur.condition.ratio() >= prev.condition.ratio());
    }
    prev = cur;
  }
}

TEST_CASE("transition-subset minimization preserves transition coverage") {
  for (const auto& name : oracles::corpus()) {
    Statechart sc = oracles::load_model(name);
    CAPTURE(name);
    TestSuite suite = enumerate_sequences(sc, 4, kDefaultSuiteCap);
    TestSuite minimized = minimize_suite(
        suite, {SubsumptionRelation::kTransitionSubset, Grouping::kGlobal});
    CHECK(coverage_report(sc, minimized).transition.covered ==
          coverage_report(sc, suite).transition.covered);
  }
}

TEST_CASE("explicit path bounds widen the path universe") {
  Statechart cycle = oracles::load_model("cycle.scd");
  TestSuite suite = enumerate_sequences(cycle, 3, kDefaultSuiteCap);
  CoverageReport narrow = coverage_report(cycle, suite, 1);
  CoverageReport wide = coverage_report(cycle, suite, 5);
  CHECK(wide.path.total() > narrow.path.total());
  CHECK_THROWS_AS(coverage_report(cycle, suite, 0), InvalidBoundError);
}

TEST_CASE("report rendering") {
  Statechart atm = oracles::load_model("atm.scd");
  CoverageReport report = coverage_report(atm, only(atm_26(), "tc1"));
  std::string text = report_to_text(report);
  CHECK(text.find("0.2857") != std::string::npos);
  CHECK(text.find("0.1429") != std::string::npos);
  CHECK(text.find("n/a") != std::string::npos);
  CHECK(text.find("path bound: 6") != std::string::npos);

  std::string json = report_to_json(report);
  CHECK(json.find("\"path_bound\": 6") != std::string::npos);
  CHECK(json.find("\"TR1\"") != std::string::npos);
  CHECK(report_to_json(report) == json);
}
