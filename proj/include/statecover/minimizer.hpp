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

#ifndef STATECOVER_MINIMIZER_HPP_
#define STATECOVER_MINIMIZER_HPP_

#include <set>
#include <string>

#include "statecover/model.hpp"

namespace statecover {

enum class SubsumptionRelation {
  kNodeSubset,        // state sets
  kTransitionSubset,  // transition sets
  kElementSubset,     // states + transitions + inputs + outputs
};

enum class Grouping { kGlobal, kByInitialState };

struct SubsumptionStrategy {
  SubsumptionRelation relation = SubsumptionRelation::kElementSubset;
  Grouping grouping = Grouping::kGlobal;
};

// The covered elements of a test case under a relation, tagged by dimension
// so that element-subset mixes them without collisions.
std::set<std::string> element_set(const TestCase& tc,
                                  SubsumptionRelation relation);

// The set of other suite members whose elements subsume those of tc. Two
// cases with identical element sets would cover each other; only the
// lexicographically smaller id counts as covering the larger one, so a
// mutual-coverage pair never deletes both members.
std::set<std::string> covering_set(const TestCase& tc, const TestSuite& suite,
                                   SubsumptionStrategy strategy);

// Keeps exactly the cases whose covering set is empty (the maximal elements
// under subsumption), preserving order.
TestSuite minimize_suite(const TestSuite& suite, SubsumptionStrategy strategy);

enum class CoverageDimension { kStates, kTransitions };

// Greedy set cover over the target dimension: repeatedly takes the case with
// the largest marginal gain (ties by id) until the full suite's union is
// reached.
TestSuite greedy_reduce(const TestSuite& suite, CoverageDimension target);

}  // namespace statecover

#endif  // STATECOVER_MINIMIZER_HPP_
