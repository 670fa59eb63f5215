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

#include "statecover/tgraph.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace statecover {

namespace {

std::string seq_name(const std::vector<std::string>& seq) {
  std::string out;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (i) out += ",";
    out += seq[i];
  }
  return out;
}

void add_sorted_edges(TransitionGraph* tg,
                      std::vector<std::pair<int, int>> edges) {
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  tg->edges = std::move(edges);
}

}  // namespace

bool TransitionGraph::has_edge(int from, int to) const {
  return std::binary_search(edges.begin(), edges.end(),
                            std::make_pair(from, to));
}

int TransitionGraph::find_vertex(const std::string& name) const {
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (vertices[i].name == name) return (int)i;
  }
  return -1;
}

std::vector<int> TransitionGraph::sequence_vertices() const {
  std::vector<int> out;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (!vertices[i].sentinel) out.push_back((int)i);
  }
  return out;
}

std::vector<std::vector<int>> TransitionGraph::out_adjacency() const {
  std::vector<std::vector<int>> adj(vertices.size());
  for (const auto& [from, to] : edges) adj[from].push_back(to);
  return adj;
}

std::vector<std::vector<int>> TransitionGraph::in_adjacency() const {
  std::vector<std::vector<int>> adj(vertices.size());
  for (const auto& [from, to] : edges) adj[to].push_back(from);
  return adj;
}

TransitionGraph build_transition_graph(const Statechart& sc) {
  TransitionGraph tg;
  tg.k = 1;
  tg.vertices.push_back({"ti", {}, true});
  tg.vertices.push_back({"tf", {}, true});
  tg.entry_vertex = 0;
  tg.exit_vertex = 1;

  std::map<std::string, int> index;  // transition id -> vertex
  for (const auto& [id, t] : sc.transitions) {
    index[id] = (int)tg.vertices.size();
    tg.vertices.push_back({id, {id}, false});
  }

  std::vector<std::pair<int, int>> edges;
  // Transition pairs sharing a simple state.
  for (const auto& [sid, s] : sc.states) {
    for (const Transition* in : in_set(sc, sid)) {
      for (const Transition* out : out_set(sc, sid)) {
        edges.emplace_back(index[in->id], index[out->id]);
      }
    }
  }
  // Sentinel edges.
  std::vector<std::string> initials = sc.initial_states();
  for (const auto& [id, t] : sc.transitions) {
    if (std::find(initials.begin(), initials.end(), t.source) !=
        initials.end()) {
      edges.emplace_back(tg.entry_vertex, index[id]);
    }
    if (const State* target = sc.find_state(t.target); target && target->is_final) {
      edges.emplace_back(index[id], tg.exit_vertex);
    }
  }
  add_sorted_edges(&tg, std::move(edges));
  return tg;
}

TransitionGraph augment(const TransitionGraph& tg) {
  if (tg.augmented) return tg;
  TransitionGraph out = tg;
  out.augmented = true;
  auto edges = out.edges;
  edges.emplace_back(out.exit_vertex, out.entry_vertex);
  add_sorted_edges(&out, std::move(edges));
  return out;
}

TransitionGraph k_fold_transform(const TransitionGraph& base, int k) {
  // Enumerate legal transition sequences of length k as walks among the
  // non-sentinel vertices of the base graph.
  std::vector<int> singles = base.sequence_vertices();
  auto adj = base.out_adjacency();

  std::vector<std::vector<int>> walks;
  for (int v : singles) walks.push_back({v});
  for (int len = 1; len < k; ++len) {
    std::vector<std::vector<int>> next;
    for (const auto& walk : walks) {
      for (int succ : adj[walk.back()]) {
        if (base.vertices[succ].sentinel) continue;
        auto extended = walk;
        extended.push_back(succ);
        next.push_back(std::move(extended));
      }
    }
    walks = std::move(next);
    if (walks.empty()) break;
  }
  if (walks.empty()) {
    throw EmptyGraphError("no legal transition sequence of length " +
                          std::to_string(k));
  }

  std::vector<std::vector<std::string>> seqs;
  for (const auto& walk : walks) {
    std::vector<std::string> seq;
    for (int v : walk) seq.push_back(base.vertices[v].name);
    seqs.push_back(std::move(seq));
  }
  std::sort(seqs.begin(), seqs.end());
  seqs.erase(std::unique(seqs.begin(), seqs.end()), seqs.end());

  TransitionGraph out;
  out.k = k;
  out.vertices.push_back({"ti", {}, true});
  out.vertices.push_back({"tf", {}, true});
  out.entry_vertex = 0;
  out.exit_vertex = 1;
  for (const auto& seq : seqs) {
    out.vertices.push_back({seq_name(seq), seq, false});
  }

  // v -> v' when the (k-1)-suffix of v equals the (k-1)-prefix of v' and the
  // final transition of v' legally follows the final transition of v. The
  // second condition only bites at k = 1, where the empty suffix matches
  // everything; for longer sequences it already follows from v' being legal.
  std::map<std::vector<std::string>, std::vector<int>> by_prefix;
  for (std::size_t i = 0; i < seqs.size(); ++i) {
    std::vector<std::string> prefix(seqs[i].begin(), seqs[i].end() - 1);
    by_prefix[prefix].push_back((int)(i + 2));
  }
  std::vector<std::pair<int, int>> edges;
  for (std::size_t i = 0; i < seqs.size(); ++i) {
    std::vector<std::string> suffix(seqs[i].begin() + 1, seqs[i].end());
    auto it = by_prefix.find(suffix);
    if (it == by_prefix.end()) continue;
    int from_last = base.find_vertex(seqs[i].back());
    for (int to : it->second) {
      int to_last = base.find_vertex(seqs[(std::size_t)to - 2].back());
      if (base.has_edge(from_last, to_last)) {
        edges.emplace_back((int)(i + 2), to);
      }
    }
  }

  // Sentinel edges carry over from the base graph's first/last transition.
  auto base_has = [&](const std::string& from, const std::string& to) {
    int a = from == "ti" ? base.entry_vertex : base.find_vertex(from);
    int b = to == "tf" ? base.exit_vertex : base.find_vertex(to);
    return a >= 0 && b >= 0 && base.has_edge(a, b);
  };
  for (std::size_t i = 0; i < seqs.size(); ++i) {
    if (base_has("ti", seqs[i].front())) {
      edges.emplace_back(out.entry_vertex, (int)(i + 2));
    }
    if (base_has(seqs[i].back(), "tf")) {
      edges.emplace_back((int)(i + 2), out.exit_vertex);
    }
  }
  add_sorted_edges(&out, std::move(edges));
  return out;
}

std::vector<std::vector<std::string>> unexpandable_short_sequences(
    const TransitionGraph& tg) {
  auto in = tg.in_adjacency();
  auto out = tg.out_adjacency();
  std::vector<std::vector<std::string>> result;
  for (int v : tg.sequence_vertices()) {
    if (in[v].size() == 1 && out[v].size() == 1 &&
        in[v][0] == tg.entry_vertex && out[v][0] == tg.exit_vertex) {
      result.push_back(tg.vertices[v].seq);
    }
  }
  std::sort(result.begin(), result.end());
  return result;
}

bool strongly_connected(const TransitionGraph& tg) {
  if (tg.vertices.empty()) return true;
  auto bfs = [&](int start, const std::vector<std::vector<int>>& adj) {
    std::vector<bool> seen(tg.vertices.size(), false);
    std::deque<int> work{start};
    seen[start] = true;
    while (!work.empty()) {
      int cur = work.front();
      work.pop_front();
      for (int next : adj[cur]) {
        if (!seen[next]) {
          seen[next] = true;
          work.push_back(next);
        }
      }
    }
    return seen;
  };
  auto fwd = bfs(0, tg.out_adjacency());
  auto bwd = bfs(0, tg.in_adjacency());
  for (std::size_t i = 0; i < tg.vertices.size(); ++i) {
    if (!fwd[i] || !bwd[i]) return false;
  }
  return true;
}

}  // namespace statecover
