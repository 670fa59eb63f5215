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

#include "statecover/minimizer.hpp"

#include <algorithm>

namespace statecover {

std::set<std::string> element_set(const TestCase& tc,
                                  SubsumptionRelation relation) {
  std::set<std::string> out;
  if (relation != SubsumptionRelation::kTransitionSubset) {
    for (const auto& s : tc.state_trace) out.insert("s:" + s);
  }
  if (relation != SubsumptionRelation::kNodeSubset) {
    for (const auto& t : tc.transition_trace) out.insert("t:" + t);
  }
  if (relation == SubsumptionRelation::kElementSubset) {
    for (const auto& in : tc.inputs) out.insert("i:" + in.event);
    for (const auto& o : tc.expected_outputs) out.insert("o:" + o);
  }
  return out;
}

std::set<std::string> covering_set(const TestCase& tc, const TestSuite& suite,
                                   SubsumptionStrategy strategy) {
  if (!suite.find(tc.id)) throw UnknownTestCaseError(tc.id);
  auto mine = element_set(tc, strategy.relation);
  std::set<std::string> out;
  for (const auto& other : suite.cases) {
    if (other.id == tc.id) continue;
    if (strategy.grouping == Grouping::kByInitialState &&
        other.initial_state != tc.initial_state) {
      continue;
    }
    auto theirs = element_set(other, strategy.relation);
    if (!std::includes(theirs.begin(), theirs.end(), mine.begin(),
                       mine.end())) {
      continue;
    }
    if (theirs.size() == mine.size() && other.id > tc.id) {
      continue;  // antisymmetry repair, only the smaller id covers
    }
    out.insert(other.id);
  }
  return out;
}

TestSuite minimize_suite(const TestSuite& suite, SubsumptionStrategy strategy) {
  if (suite.cases.empty()) throw EmptySuiteError();
  TestSuite out;
  out.provenance = SuiteProvenance::kMinimized;
  for (const auto& tc : suite.cases) {
    if (covering_set(tc, suite, strategy).empty()) out.cases.push_back(tc);
  }
  return out;
}

TestSuite greedy_reduce(const TestSuite& suite, CoverageDimension target) {
  if (suite.cases.empty()) throw EmptySuiteError();
  auto dimension = [&](const TestCase& tc) -> const std::vector<std::string>& {
    return target == CoverageDimension::kStates ? tc.state_trace
                                                : tc.transition_trace;
  };
  std::set<std::string> universe;
  for (const auto& tc : suite.cases) {
    const auto& elems = dimension(tc);
    universe.insert(elems.begin(), elems.end());
  }

  TestSuite out;
  out.provenance = SuiteProvenance::kMinimized;
  std::set<std::string> covered;
  std::set<std::string> used;
  while (covered != universe) {
    const TestCase* best = nullptr;
    std::size_t best_gain = 0;
    for (const auto& tc : suite.cases) {
      if (used.count(tc.id)) continue;
      const auto& elems = dimension(tc);
      std::set<std::string> fresh(elems.begin(), elems.end());
      std::size_t gain = 0;
      for (const auto& e : fresh) {
        if (!covered.count(e)) ++gain;
      }
      // Ties go to the smaller id; shorter ids sort first so tc5 beats tc13.
      auto id_key = [](const std::string& id) {
        return std::make_pair(id.size(), id);
      };
      if (gain > best_gain || (best && gain == best_gain && gain > 0 &&
                               id_key(tc.id) < id_key(best->id))) {
        best = &tc;
        best_gain = gain;
      }
    }
    if (!best) break;  // unreachable for consistent input
    used.insert(best->id);
    const auto& elems = dimension(*best);
    covered.insert(elems.begin(), elems.end());
    out.cases.push_back(*best);
  }
  return out;
}

}  // namespace statecover
