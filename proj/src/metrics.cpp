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

#include "statecover/metrics.hpp"

#include <algorithm>
#include <functional>
#include <iomanip>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "statecover/interpreter.hpp"

namespace statecover {

namespace {

DimensionCoverage make_dimension(const std::set<std::string>& universe,
                                 const std::set<std::string>& hit) {
  DimensionCoverage dim;
  dim.applicable = !universe.empty();
  for (const auto& e : universe) {
    if (hit.count(e)) {
      dim.covered.push_back(e);
    } else {
      dim.uncovered.push_back(e);
    }
  }
  return dim;
}

void walk_complete_paths(
    const Statechart& sc, int bound, bool transition_simple,
    const std::function<void(const std::vector<std::string>&)>& emit) {
  auto initials = sc.initial_states();
  if (initials.empty()) return;
  const std::string& initial = initials.front();

  std::vector<std::string> current;
  std::set<std::string> used;
  std::function<void(const std::string&)> dfs = [&](const std::string& state) {
    if (const State* s = sc.find_state(state); s && s->is_final && !current.empty()) {
      emit(current);
    }
    if ((int)current.size() >= bound) return;
    for (const auto& [id, t] : sc.transitions) {
      if (t.source != state) continue;
      if (transition_simple && used.count(id)) continue;
      current.push_back(id);
      if (transition_simple) used.insert(id);
      dfs(t.target);
      if (transition_simple) used.erase(id);
      current.pop_back();
    }
  };
  dfs(initial);
}

}  // namespace

std::vector<std::vector<std::string>> complete_paths(const Statechart& sc,
                                                     int bound) {
  std::vector<std::vector<std::string>> out;
  walk_complete_paths(sc, bound, false,
                      [&](const std::vector<std::string>& path) {
                        out.push_back(path);
                      });
  std::sort(out.begin(), out.end());
  return out;
}

int default_path_bound(const Statechart& sc) {
  int longest = 0;
  walk_complete_paths(sc, (int)sc.transitions.size(), true,
                      [&](const std::vector<std::string>& path) {
                        longest = std::max(longest, (int)path.size());
                      });
  return std::max(longest, 1);
}

CoverageReport coverage_report(const Statechart& sc, const TestSuite& suite,
                               std::optional<int> path_bound) {
  int bound = path_bound.value_or(default_path_bound(sc));
  if (bound < 1) throw InvalidBoundError("path bound must be at least 1");

  CoverageReport report;
  report.path_bound = bound;

  std::set<std::string> state_universe, transition_universe, action_universe,
      condition_universe;
  for (const auto& [id, s] : sc.states) state_universe.insert(id);
  for (const auto& [id, t] : sc.transitions) {
    transition_universe.insert(id);
    if (t.action) action_universe.insert(*t.action);
    if (t.guard) condition_universe.insert(id);
  }

  std::set<std::string> states_hit, transitions_hit, actions_hit;
  std::map<std::string, std::set<bool>> guard_outcomes;
  std::set<std::vector<std::string>> whole_traces;
  for (const auto& tc : suite.cases) {
    states_hit.insert(tc.state_trace.begin(), tc.state_trace.end());
    transitions_hit.insert(tc.transition_trace.begin(),
                           tc.transition_trace.end());
    for (const auto& o : tc.expected_outputs) {
      if (action_universe.count(o)) actions_hit.insert(o);
    }
    if (tc.complete) whole_traces.insert(tc.transition_trace);
    if (!condition_universe.empty()) {
      ExecTrace trace = run(sc, tc.initial_state, tc.inputs);
      for (const auto& [id, outcome] : trace.guard_evals) {
        guard_outcomes[id].insert(outcome);
      }
    }
  }

  report.state = make_dimension(state_universe, states_hit);
  report.transition = make_dimension(transition_universe, transitions_hit);
  report.action = make_dimension(action_universe, actions_hit);

  std::set<std::string> conditions_hit;
  for (const auto& [id, outcomes] : guard_outcomes) {
    if (outcomes.size() == 2) conditions_hit.insert(id);
  }
  report.condition = make_dimension(condition_universe, conditions_hit);

  std::set<std::string> path_universe, paths_hit;
  for (const auto& path : complete_paths(sc, bound)) {
    std::string name;
    for (std::size_t i = 0; i < path.size(); ++i) {
      if (i) name += ",";
      name += path[i];
    }
    path_universe.insert(name);
    if (whole_traces.count(path)) paths_hit.insert(name);
  }
  report.path = make_dimension(path_universe, paths_hit);
  return report;
}

namespace {

void dimension_to_json(nlohmann::json* parent, const std::string& key,
                       const DimensionCoverage& dim) {
  nlohmann::json j;
  j["applicable"] = dim.applicable;
  j["covered"] = dim.covered;
  j["uncovered"] = dim.uncovered;
  if (dim.applicable) j["ratio"] = dim.ratio();
  (*parent)[key] = std::move(j);
}

}  // namespace

std::string report_to_json(const CoverageReport& report) {
  nlohmann::json root;
  root["path_bound"] = report.path_bound;
  dimension_to_json(&root, "state", report.state);
  dimension_to_json(&root, "transition", report.transition);
  dimension_to_json(&root, "path", report.path);
  dimension_to_json(&root, "action", report.action);
  dimension_to_json(&root, "condition", report.condition);
  return root.dump(2) + "\n";
}

std::string report_to_text(const CoverageReport& report) {
  std::ostringstream out;
  out << std::left << std::setw(12) << "dimension" << std::right
      << std::setw(9) << "covered" << std::setw(7) << "total" << std::setw(8)
      << "ratio" << "\n";
  auto row = [&](const std::string& name, const DimensionCoverage& dim) {
    out << std::left << std::setw(12) << name << std::right;
    if (!dim.applicable) {
      out << std::setw(9) << "-" << std::setw(7) << "-" << std::setw(8)
          << "n/a" << "\n";
      return;
    }
    out << std::setw(9) << dim.covered.size() << std::setw(7) << dim.total()
        << std::setw(8) << std::fixed << std::setprecision(4) << dim.ratio()
        << "\n";
  };
  row("state", report.state);
  row("transition", report.transition);
  row("path", report.path);
  row("action", report.action);
  row("condition", report.condition);
  out << "path bound: " << report.path_bound << "\n";
  return out.str();
}

}  // namespace statecover
