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

#ifndef STATECOVER_TGRAPH_HPP_
#define STATECOVER_TGRAPH_HPP_

#include <string>
#include <utility>
#include <vector>

#include "statecover/model.hpp"

namespace statecover {

// Directed graph over transition-sequence vertices plus the entry sentinel
// "ti" and exit sentinel "tf". In the base graph (k = 1) every non-sentinel
// vertex denotes a single transition; after the k-fold transform it denotes a
// legal transition sequence of length k. Graphs are immutable once built.
class TransitionGraph {
 public:
  struct Vertex {
    std::string name;               // "ti", "tf", or "TR1,TR2,..."
    std::vector<std::string> seq;   // empty for sentinels
    bool sentinel = false;
  };

  std::vector<Vertex> vertices;
  // Edges as vertex-index pairs, kept sorted ascending. Every edge costs 1.
  std::vector<std::pair<int, int>> edges;
  int entry_vertex = -1;
  int exit_vertex = -1;
  int k = 1;
  bool augmented = false;

  bool has_edge(int from, int to) const;
  int find_vertex(const std::string& name) const;
  std::vector<int> sequence_vertices() const;
  std::vector<std::vector<int>> out_adjacency() const;
  std::vector<std::vector<int>> in_adjacency() const;
};

// Builds the base transition graph of a valid flat machine: one vertex per
// legal transition, an edge per transition pair sharing a simple state,
// ti -> t for transitions leaving the initial state, t -> tf for transitions
// entering a final state.
TransitionGraph build_transition_graph(const Statechart& sc);

// Adds the single return edge tf -> ti. Idempotent. For valid machines the
// result is strongly connected.
TransitionGraph augment(const TransitionGraph& tg);

// Sequence graph of level k: one vertex per legal transition sequence of
// length k (walks; transitions may repeat), an edge v -> v' when the (k-1)
// suffix of v equals the (k-1) prefix of v'. ti connects to vertices whose
// first transition leaves the initial state, and vertices whose last
// transition enters a final state connect to tf. Throws EmptyGraphError when
// no length-k sequence exists.
TransitionGraph k_fold_transform(const TransitionGraph& base, int k);

// Sequence vertices connected only to the sentinels (indegree and outdegree
// both 1, via ti and tf). These denote complete sequences that cannot be
// expanded to a longer legal sequence.
std::vector<std::vector<std::string>> unexpandable_short_sequences(
    const TransitionGraph& tg);

bool strongly_connected(const TransitionGraph& tg);

}  // namespace statecover

#endif  // STATECOVER_TGRAPH_HPP_
