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

#ifndef STATECOVER_GENERATOR_HPP_
#define STATECOVER_GENERATOR_HPP_

#include <optional>
#include <string>
#include <vector>

#include "statecover/interpreter.hpp"
#include "statecover/model.hpp"
#include "statecover/tgraph.hpp"

namespace statecover {

inline constexpr std::size_t kDefaultSuiteCap = 100000;

// Walk through an augmented transition graph from ti to tf that visits every
// vertex at least once. Cost counts traversed edges.
struct CoveringWalk {
  std::vector<int> vertices;
  int cost = 0;
};

// A sneak path: an event with no transition at a state, guards ignored.
struct FaultyPair {
  std::string state;
  std::string event;

  bool operator==(const FaultyPair&) const = default;
  auto operator<=>(const FaultyPair&) const = default;
};

// Searches integer assignments for the guard's variables among boundary
// candidates (constants of the guard +/- 1, plus 0 and 1) until the guard
// evaluates to `want`. Returns nullopt when no candidate assignment works.
std::optional<Env> satisfy_guard(const GuardExpr& guard, bool want);

// Input events realizing a legal transition sequence, with bindings chosen to
// enable each guard.
std::vector<InputEvent> inputs_for_sequence(
    const Statechart& sc, const std::vector<std::string>& transition_ids);

// Builds a test case by replaying the sequence on the interpreter from the
// source state of its first transition.
TestCase make_test_case(const Statechart& sc,
                        const std::vector<std::string>& transition_ids);

// Every legal transition sequence of length 1..max_len, as walks starting
// from every state, each turned into a test case. Throws SuiteTooLargeError
// past `cap`.
TestSuite enumerate_sequences(const Statechart& sc, int max_len,
                              std::size_t cap = kDefaultSuiteCap);

// Minimum-cost covering walk. Exact (all-pairs shortest paths + optimal tour
// on the metric closure) for graphs of at most 12 vertices, nearest-neighbor
// plus 2-opt beyond that. Requires a strongly connected augmented graph.
CoveringWalk solve_gtsp(const TransitionGraph& tg);

// k-transition-coverage suite: unexpandable complete sequences from levels
// 1..k plus the split covering walk of the level-k sequence graph. Every
// legal sequence of length <= k appears contiguously in some test case.
TestSuite generate_ktc_suite(const Statechart& sc, int k);

std::vector<FaultyPair> derive_faulty_pairs(const Statechart& sc);

// Shortest legal transition sequence from the initial state to `state_id`,
// ties broken by lexicographic transition ids.
std::vector<std::string> start_sequence(const Statechart& sc,
                                        const std::string& state_id);

// One test case per faulty pair: shortest start sequence, then the faulty
// event; the replay must reject exactly at the final step. With
// include_guard_probes set, adds one case per guarded transition driving its
// guard false (skipped when a sibling transition would still fire).
TestSuite generate_ftc_suite(const Statechart& sc,
                             bool include_guard_probes = false);

}  // namespace statecover

#endif  // STATECOVER_GENERATOR_HPP_
