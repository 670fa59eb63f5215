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

#include "statecover/generator.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <limits>
#include <map>
#include <set>

namespace statecover {

namespace {

constexpr int kInf = std::numeric_limits<int>::max() / 4;

std::vector<long long> candidate_values(const GuardExpr& guard) {
  std::set<long long> candidates{0, 1};
  for (long long c : guard.constants()) {
    candidates.insert(c - 1);
    candidates.insert(c);
    candidates.insert(c + 1);
  }
  return {candidates.begin(), candidates.end()};
}

// Cartesian search over candidate values, smallest assignments first.
std::optional<Env> search_assignment(
    const std::vector<std::string>& vars,
    const std::vector<long long>& candidates,
    const std::function<bool(const Env&)>& accept) {
  Env env;
  std::function<std::optional<Env>(std::size_t)> rec =
      [&](std::size_t i) -> std::optional<Env> {
    if (i == vars.size()) {
      if (accept(env)) return env;
      return std::nullopt;
    }
    for (long long value : candidates) {
      env[vars[i]] = value;
      if (auto found = rec(i + 1)) return found;
    }
    env.erase(vars[i]);
    return std::nullopt;
  };
  return rec(0);
}

// Adjacency of legal transitions: t -> t' when target(t) = source(t').
std::map<std::string, std::vector<std::string>> successor_map(
    const Statechart& sc) {
  std::map<std::string, std::vector<std::string>> by_source;
  for (const auto& [id, t] : sc.transitions) by_source[t.source].push_back(id);
  std::map<std::string, std::vector<std::string>> succ;
  for (const auto& [id, t] : sc.transitions) {
    auto it = by_source.find(t.target);
    if (it != by_source.end()) succ[id] = it->second;
  }
  return succ;
}

}  // namespace

std::optional<Env> satisfy_guard(const GuardExpr& guard, bool want) {
  auto var_set = guard.variables();
  std::vector<std::string> vars(var_set.begin(), var_set.end());
  auto candidates = candidate_values(guard);
  return search_assignment(vars, candidates, [&](const Env& env) {
    return eval_guard(guard, env) == want;
  });
}

std::vector<InputEvent> inputs_for_sequence(
    const Statechart& sc, const std::vector<std::string>& transition_ids) {
  std::vector<InputEvent> inputs;
  for (const auto& id : transition_ids) {
    const Transition* t = sc.find_transition(id);
    if (!t) throw SemanticError("unknown transition: " + id);
    InputEvent in;
    in.event = t->event;
    if (t->guard) {
      auto env = satisfy_guard(*t->guard, true);
      if (!env) {
        throw SemanticError("no boundary assignment satisfies the guard of " +
                            id);
      }
      in.bindings = *env;
    }
    inputs.push_back(std::move(in));
  }
  return inputs;
}

TestCase make_test_case(const Statechart& sc,
                        const std::vector<std::string>& transition_ids) {
  if (transition_ids.empty()) {
    throw SemanticError("cannot build a test case from an empty sequence");
  }
  const Transition* first = sc.find_transition(transition_ids.front());
  if (!first) throw SemanticError("unknown transition: " + transition_ids.front());

  TestCase tc;
  tc.initial_state = first->source;
  tc.inputs = inputs_for_sequence(sc, transition_ids);
  ExecTrace trace = run(sc, tc.initial_state, tc.inputs);
  if (!trace.accepted() || trace.fired_transitions != transition_ids) {
    throw SemanticError("sequence starting at " + transition_ids.front() +
                        " does not replay deterministically");
  }
  tc.expected_outputs = trace.outputs;
  tc.state_trace = trace.states;
  tc.transition_trace = transition_ids;
  auto initials = sc.initial_states();
  const State* last = sc.find_state(tc.state_trace.back());
  tc.complete = std::find(initials.begin(), initials.end(), tc.initial_state) !=
                    initials.end() &&
                last && last->is_final;
  return tc;
}

TestSuite enumerate_sequences(const Statechart& sc, int max_len,
                              std::size_t cap) {
  if (max_len < 1) throw InvalidBoundError("max_len must be at least 1");
  auto succ = successor_map(sc);

  std::vector<std::vector<std::string>> seqs;
  std::vector<std::string> current;
  std::function<void(const std::string&)> extend = [&](const std::string& id) {
    current.push_back(id);
    seqs.push_back(current);
    if (seqs.size() > cap) throw SuiteTooLargeError(cap);
    if ((int)current.size() < max_len) {
      auto it = succ.find(id);
      if (it != succ.end()) {
        for (const auto& next : it->second) extend(next);
      }
    }
    current.pop_back();
  };
  for (const auto& [id, t] : sc.transitions) extend(id);

  TestSuite suite;
  suite.provenance = SuiteProvenance::kEnumerated;
  for (const auto& seq : seqs) suite.cases.push_back(make_test_case(sc, seq));
  sort_suite(suite);
  number_suite(suite);
  return suite;
}

namespace {

// Unit-weight shortest path distances and deterministic predecessor trees
// from every vertex.
struct AllPairs {
  std::vector<std::vector<int>> dist;
  std::vector<std::vector<int>> pred;  // pred[src][v], -1 at src/unreached
};

AllPairs all_pairs_shortest(const TransitionGraph& tg) {
  int n = (int)tg.vertices.size();
  auto adj = tg.out_adjacency();
  AllPairs ap;
  ap.dist.assign(n, std::vector<int>(n, kInf));
  ap.pred.assign(n, std::vector<int>(n, -1));
  for (int src = 0; src < n; ++src) {
    ap.dist[src][src] = 0;
    std::deque<int> work{src};
    while (!work.empty()) {
      int cur = work.front();
      work.pop_front();
      for (int next : adj[cur]) {
        if (ap.dist[src][next] == kInf) {
          ap.dist[src][next] = ap.dist[src][cur] + 1;
          ap.pred[src][next] = cur;
          work.push_back(next);
        }
      }
    }
  }
  return ap;
}

std::vector<int> expand_leg(const AllPairs& ap, int from, int to) {
  std::vector<int> path;  // excludes `from`
  int cur = to;
  while (cur != from) {
    path.push_back(cur);
    cur = ap.pred[from][cur];
  }
  std::reverse(path.begin(), path.end());
  return path;
}

// Optimal visiting order by Held-Karp on the metric closure: a minimum-cost
// path over all vertices from entry to exit.
std::vector<int> exact_order(const TransitionGraph& tg, const AllPairs& ap) {
  int n = (int)tg.vertices.size();
  int entry = tg.entry_vertex;
  int exit = tg.exit_vertex;
  std::vector<int> others;
  for (int v = 0; v < n; ++v) {
    if (v != entry && v != exit) others.push_back(v);
  }
  int m = (int)others.size();
  if (m == 0) return {entry, exit};

  std::vector<std::vector<int>> dp(1 << m, std::vector<int>(m, kInf));
  std::vector<std::vector<int>> parent(1 << m, std::vector<int>(m, -1));
  for (int i = 0; i < m; ++i) {
    dp[1 << i][i] = ap.dist[entry][others[i]];
  }
  for (int mask = 1; mask < (1 << m); ++mask) {
    for (int i = 0; i < m; ++i) {
      if (!(mask & (1 << i)) || dp[mask][i] >= kInf) continue;
      for (int j = 0; j < m; ++j) {
        if (mask & (1 << j)) continue;
        int cost = dp[mask][i] + ap.dist[others[i]][others[j]];
        int nmask = mask | (1 << j);
        if (cost < dp[nmask][j]) {
          dp[nmask][j] = cost;
          parent[nmask][j] = i;
        }
      }
    }
  }
  int full = (1 << m) - 1;
  int best = -1, best_cost = kInf;
  for (int i = 0; i < m; ++i) {
    int cost = dp[full][i] + ap.dist[others[i]][exit];
    if (cost < best_cost) {
      best_cost = cost;
      best = i;
    }
  }
  std::vector<int> order{exit};
  int mask = full, cur = best;
  while (cur != -1) {
    order.push_back(others[cur]);
    int prev = parent[mask][cur];
    mask ^= 1 << cur;
    cur = prev;
  }
  order.push_back(entry);
  std::reverse(order.begin(), order.end());
  return order;
}

std::vector<int> heuristic_order(const TransitionGraph& tg, const AllPairs& ap) {
  int entry = tg.entry_vertex;
  int exit = tg.exit_vertex;
  std::set<int> remaining;
  for (int v = 0; v < (int)tg.vertices.size(); ++v) {
    if (v != entry && v != exit) remaining.insert(v);
  }
  std::vector<int> order{entry};
  int cur = entry;
  while (!remaining.empty()) {
    int best = -1, best_dist = kInf;
    for (int v : remaining) {
      if (ap.dist[cur][v] < best_dist) {
        best_dist = ap.dist[cur][v];
        best = v;
      }
    }
    order.push_back(best);
    remaining.erase(best);
    cur = best;
  }
  order.push_back(exit);

  auto total = [&](const std::vector<int>& o) {
    int sum = 0;
    for (std::size_t i = 0; i + 1 < o.size(); ++i) sum += ap.dist[o[i]][o[i + 1]];
    return sum;
  };
  // 2-opt over the interior: move a single vertex or reverse a segment when
  // it shortens the tour. Directed distances, so reversals are re-costed in
  // full.
  bool improved = true;
  int guard = 0;
  while (improved && guard++ < 50) {
    improved = false;
    int base_cost = total(order);
    for (std::size_t i = 1; i + 1 < order.size() && !improved; ++i) {
      for (std::size_t j = i + 1; j + 1 < order.size() && !improved; ++j) {
        auto candidate = order;
        std::reverse(candidate.begin() + i, candidate.begin() + j + 1);
        if (total(candidate) < base_cost) {
          order = std::move(candidate);
          improved = true;
        }
      }
    }
  }
  return order;
}

}  // namespace

CoveringWalk solve_gtsp(const TransitionGraph& tg) {
  if (!tg.augmented || !strongly_connected(tg)) {
    throw NotStronglyConnectedError(
        "covering walks need a strongly connected augmented graph");
  }
  AllPairs ap = all_pairs_shortest(tg);
  std::vector<int> order = tg.vertices.size() <= 12 ? exact_order(tg, ap)
                                                    : heuristic_order(tg, ap);
  CoveringWalk walk;
  walk.vertices.push_back(order.front());
  for (std::size_t i = 0; i + 1 < order.size(); ++i) {
    auto leg = expand_leg(ap, order[i], order[i + 1]);
    walk.vertices.insert(walk.vertices.end(), leg.begin(), leg.end());
  }
  walk.cost = (int)walk.vertices.size() - 1;
  return walk;
}

TestSuite generate_ktc_suite(const Statechart& sc, int k) {
  if (k < 1) throw InvalidBoundError("k must be at least 1");
  TestSuite suite;
  suite.provenance = SuiteProvenance::kKtc;
  if (sc.transitions.empty()) return suite;

  TransitionGraph base = build_transition_graph(sc);

  // Highest level with any length-j sequence; clamp k to it so short
  // machines still get their complete sequences.
  std::vector<TransitionGraph> levels;  // levels[j-1] = level-j graph
  for (int j = 1; j <= k; ++j) {
    try {
      levels.push_back(k_fold_transform(base, j));
    } catch (const EmptyGraphError&) {
      break;
    }
  }
  if (levels.empty()) {
    throw EmptyGraphError("no legal transition sequence exists");
  }

  std::set<std::vector<std::string>> seqs;
  for (const auto& level : levels) {
    for (auto& seq : unexpandable_short_sequences(level)) {
      seqs.insert(std::move(seq));
    }
  }

  const TransitionGraph& top = levels.back();
  CoveringWalk walk = solve_gtsp(augment(top));

  // Split at sentinel traversals: each maximal run of sequence vertices is a
  // complete transition sequence.
  std::vector<std::string> current;
  auto flush = [&]() {
    if (!current.empty()) seqs.insert(current);
    current.clear();
  };
  for (int v : walk.vertices) {
    if (top.vertices[v].sentinel) {
      flush();
      continue;
    }
    const auto& seq = top.vertices[v].seq;
    if (current.empty()) {
      current = seq;
    } else {
      current.push_back(seq.back());
    }
  }
  flush();

  for (const auto& seq : seqs) suite.cases.push_back(make_test_case(sc, seq));
  sort_suite(suite);
  number_suite(suite);
  return suite;
}

std::vector<FaultyPair> derive_faulty_pairs(const Statechart& sc) {
  std::vector<FaultyPair> pairs;
  for (const auto& [sid, s] : sc.states) {
    for (const auto& event : sc.events) {
      bool handled = false;
      for (const auto& [id, t] : sc.transitions) {
        if (t.source == sid && t.event == event) {
          handled = true;
          break;
        }
      }
      if (!handled) pairs.push_back({sid, event});
    }
  }
  return pairs;
}

std::vector<std::string> start_sequence(const Statechart& sc,
                                        const std::string& state_id) {
  if (!sc.find_state(state_id)) throw UnknownStateError(state_id);
  auto initials = sc.initial_states();
  if (initials.empty()) throw UnreachableStateError(state_id);
  const std::string& initial = initials.front();
  if (state_id == initial) return {};

  // Plain BFS for distances first, then the lexicographically smallest
  // transition-id path layer by layer, so each layer's best paths are final
  // before the next layer uses them.
  std::map<std::string, int> dist{{initial, 0}};
  std::deque<std::string> work{initial};
  while (!work.empty()) {
    std::string cur = work.front();
    work.pop_front();
    for (const auto& [id, t] : sc.transitions) {
      if (t.source == cur && !dist.count(t.target)) {
        dist[t.target] = dist[cur] + 1;
        work.push_back(t.target);
      }
    }
  }
  auto target_it = dist.find(state_id);
  if (target_it == dist.end()) throw UnreachableStateError(state_id);

  std::map<std::string, std::vector<std::string>> best{{initial, {}}};
  for (int layer = 1; layer <= target_it->second; ++layer) {
    for (const auto& [id, t] : sc.transitions) {
      auto d = dist.find(t.target);
      if (d == dist.end() || d->second != layer) continue;
      auto prev = best.find(t.source);
      if (prev == best.end() || dist[t.source] != layer - 1) continue;
      auto candidate = prev->second;
      candidate.push_back(id);
      auto cur = best.find(t.target);
      if (cur == best.end() || candidate < cur->second) {
        best[t.target] = std::move(candidate);
      }
    }
  }
  return best.at(state_id);
}

TestSuite generate_ftc_suite(const Statechart& sc, bool include_guard_probes) {
  TestSuite suite;
  suite.provenance = SuiteProvenance::kFtc;
  auto initials = sc.initial_states();
  const std::string initial = initials.empty() ? "" : initials.front();

  auto add_case = [&](const std::string& target_state,
                      const InputEvent& faulty_input) {
    std::vector<std::string> prefix = start_sequence(sc, target_state);
    TestCase tc;
    tc.initial_state = initial;
    tc.inputs = inputs_for_sequence(sc, prefix);
    tc.inputs.push_back(faulty_input);
    ExecTrace trace = run(sc, initial, tc.inputs);
    tc.expected_outputs = trace.outputs;
    tc.state_trace = trace.states;
    tc.transition_trace = prefix;
    tc.complete = false;
    suite.cases.push_back(std::move(tc));
  };

  for (const auto& pair : derive_faulty_pairs(sc)) {
    add_case(pair.state, InputEvent{pair.event, {}});
  }

  if (include_guard_probes) {
    // One probe per (state, event) with at least one guarded transition:
    // bindings that disable every transition for that event, if they exist.
    std::set<std::pair<std::string, std::string>> done;
    for (const auto& [id, t] : sc.transitions) {
      if (!t.guard || !done.insert({t.source, t.event}).second) continue;
      std::vector<const Transition*> siblings;
      bool has_unguarded = false;
      std::set<std::string> var_set;
      std::set<long long> const_set{0, 1};
      for (const auto& [oid, other] : sc.transitions) {
        if (other.source != t.source || other.event != t.event) continue;
        if (!other.guard) {
          has_unguarded = true;
          break;
        }
        siblings.push_back(&other);
        for (const auto& v : other.guard->variables()) var_set.insert(v);
        for (long long c : other.guard->constants()) {
          const_set.insert(c - 1);
          const_set.insert(c);
          const_set.insert(c + 1);
        }
      }
      if (has_unguarded) continue;
      std::vector<std::string> vars(var_set.begin(), var_set.end());
      std::vector<long long> candidates(const_set.begin(), const_set.end());
      auto env = search_assignment(vars, candidates, [&](const Env& e) {
        for (const Transition* sib : siblings) {
          if (eval_guard(*sib->guard, e)) return false;
        }
        return true;
      });
      if (!env) continue;
      add_case(t.source, InputEvent{t.event, *env});
    }
  }

  sort_suite(suite);
  number_suite(suite);
  return suite;
}

}  // namespace statecover
