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

#ifndef STATECOVER_METRICS_HPP_
#define STATECOVER_METRICS_HPP_

#include <optional>
#include <string>
#include <vector>

#include "statecover/model.hpp"

namespace statecover {

struct DimensionCoverage {
  bool applicable = true;  // false when the model has no such elements
  std::vector<std::string> covered;
  std::vector<std::string> uncovered;
  std::size_t total() const { return covered.size() + uncovered.size(); }
  double ratio() const {
    return total() == 0 ? 0.0 : (double)covered.size() / (double)total();
  }
};

struct CoverageReport {
  DimensionCoverage state;
  DimensionCoverage transition;
  DimensionCoverage path;       // complete paths up to path_bound
  DimensionCoverage action;     // distinct action labels
  DimensionCoverage condition;  // guards driven both true and false
  int path_bound = 0;
};

// Complete transition sequences (initial to final, revisits allowed) of
// length at most `bound`.
std::vector<std::vector<std::string>> complete_paths(const Statechart& sc,
                                                     int bound);

// Length of the longest complete path that repeats no transition; the
// default path-coverage bound.
int default_path_bound(const Statechart& sc);

// The five coverage ratios of a suite against a flat valid machine. State,
// transition and action coverage come from the union of the suite's traces;
// path coverage counts complete paths appearing as whole test cases;
// condition coverage replays each case and requires every guard to have been
// observed both true and false.
CoverageReport coverage_report(const Statechart& sc, const TestSuite& suite,
                               std::optional<int> path_bound = std::nullopt);

std::string report_to_json(const CoverageReport& report);
std::string report_to_text(const CoverageReport& report);

}  // namespace statecover

#endif  // STATECOVER_METRICS_HPP_
