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

#include "statecover/model.hpp"

#include <algorithm>
#include <deque>
#include <functional>

#include "statecover/parser.hpp"

namespace statecover {

namespace {

void collect_guard(const GuardExpr::NodePtr& node,
                   std::set<std::string>* vars, std::set<long long>* consts) {
  if (!node) return;
  switch (node->op) {
    case GuardExpr::Op::kAnd:
    case GuardExpr::Op::kOr:
      collect_guard(node->lhs, vars, consts);
      collect_guard(node->rhs, vars, consts);
      break;
    case GuardExpr::Op::kNot:
      collect_guard(node->lhs, vars, consts);
      break;
    default:
      for (const auto* opnd : {&node->a, &node->b}) {
        if (opnd->is_var) {
          if (vars) vars->insert(opnd->var);
        } else if (consts) {
          consts->insert(opnd->value);
        }
      }
      break;
  }
}

bool nodes_equal(const GuardExpr::NodePtr& a, const GuardExpr::NodePtr& b) {
  if (!a || !b) return !a && !b;
  if (a->op != b->op) return false;
  auto operand_eq = [](const GuardExpr::Operand& x, const GuardExpr::Operand& y) {
    if (x.is_var != y.is_var) return false;
    return x.is_var ? x.var == y.var : x.value == y.value;
  };
  switch (a->op) {
    case GuardExpr::Op::kAnd:
    case GuardExpr::Op::kOr:
      return nodes_equal(a->lhs, b->lhs) && nodes_equal(a->rhs, b->rhs);
    case GuardExpr::Op::kNot:
      return nodes_equal(a->lhs, b->lhs);
    default:
      return operand_eq(a->a, b->a) && operand_eq(a->b, b->b);
  }
}

}  // namespace

std::set<std::string> GuardExpr::variables() const {
  std::set<std::string> vars;
  collect_guard(root_, &vars, nullptr);
  return vars;
}

std::set<long long> GuardExpr::constants() const {
  std::set<long long> consts;
  collect_guard(root_, nullptr, &consts);
  return consts;
}

bool GuardExpr::structurally_equal(const GuardExpr& other) const {
  return nodes_equal(root_, other.root_);
}

std::string Transition::label() const {
  std::string out = event;
  if (guard) out += " [" + guard_to_string(*guard) + "]";
  if (action) out += " / " + *action;
  return out;
}

bool Statechart::has_event(const std::string& e) const {
  return std::binary_search(events.begin(), events.end(), e);
}

bool Statechart::has_variable(const std::string& v) const {
  return std::binary_search(variables.begin(), variables.end(), v);
}

const State* Statechart::find_state(const std::string& id) const {
  auto it = states.find(id);
  return it == states.end() ? nullptr : &it->second;
}

const Transition* Statechart::find_transition(const std::string& id) const {
  auto it = transitions.find(id);
  return it == transitions.end() ? nullptr : &it->second;
}

std::vector<std::string> Statechart::initial_states() const {
  std::vector<std::string> out;
  for (const auto& [id, s] : states) {
    if (s.is_initial && s.parent.empty()) out.push_back(id);
  }
  return out;
}

std::vector<std::string> Statechart::final_states() const {
  std::vector<std::string> out;
  for (const auto& [id, s] : states) {
    if (s.is_final) out.push_back(id);
  }
  return out;
}

bool Statechart::is_flat() const {
  for (const auto& [id, s] : states) {
    if (s.kind == StateKind::kComposite) return false;
  }
  return true;
}

std::vector<std::string> Statechart::children(const std::string& id) const {
  std::vector<std::string> out;
  for (const auto& [sid, s] : states) {
    if (s.parent == id) out.push_back(sid);
  }
  return out;
}

namespace {

// Follows default-entry children down to a simple state.
const State* entry_descendant(const Statechart& sc, const State* s) {
  while (s && s->kind == StateKind::kComposite) {
    const State* entry = nullptr;
    for (const auto& child : sc.children(s->id)) {
      const State* c = sc.find_state(child);
      if (c->is_entry) {
        entry = c;
        break;
      }
    }
    s = entry;
  }
  return s;
}

std::vector<const State*> simple_descendants(const Statechart& sc,
                                             const State* s) {
  std::vector<const State*> out;
  std::function<void(const State*)> walk = [&](const State* cur) {
    if (cur->kind == StateKind::kSimple) {
      out.push_back(cur);
      return;
    }
    for (const auto& child : sc.children(cur->id)) walk(sc.find_state(child));
  };
  walk(s);
  return out;
}

}  // namespace

std::vector<Violation> validate(const Statechart& sc) {
  std::vector<Violation> out;
  auto add = [&](ViolationKind kind, const std::string& subject,
                 std::string message) {
    out.push_back({kind, subject, std::move(message)});
  };

  // Hierarchy must form a forest.
  for (const auto& [id, s] : sc.states) {
    std::set<std::string> seen{id};
    const State* cur = &s;
    while (!cur->parent.empty()) {
      const State* p = sc.find_state(cur->parent);
      if (!p || !seen.insert(p->id).second) {
        add(ViolationKind::kHierarchyCycle, id,
            "state " + id + " is its own ancestor or has a dangling parent");
        break;
      }
      cur = p;
    }
  }

  for (const auto& [id, s] : sc.states) {
    auto kids = sc.children(id);
    if (s.kind == StateKind::kComposite) {
      if (kids.empty()) {
        add(ViolationKind::kCompositeWithoutChild, id,
            "composite state " + id + " has no children");
        continue;
      }
      int entries = 0;
      for (const auto& k : kids) {
        if (sc.find_state(k)->is_entry) ++entries;
      }
      if (entries == 0) {
        add(ViolationKind::kCompositeWithoutEntry, id,
            "composite state " + id + " declares no entry child");
      } else if (entries > 1) {
        add(ViolationKind::kMultipleEntry, id,
            "composite state " + id + " declares more than one entry child");
      }
    } else if (!kids.empty()) {
      add(ViolationKind::kSimpleWithChild, id,
          "simple state " + id + " has children");
    }
  }

  auto initials = sc.initial_states();
  if (initials.empty()) {
    add(ViolationKind::kNoInitial, "", "no top-level initial state");
  } else if (initials.size() > 1) {
    add(ViolationKind::kMultipleInitial, initials[1],
        "more than one top-level initial state");
  }
  if (sc.final_states().empty()) {
    add(ViolationKind::kNoFinal, "", "no final state");
  }

  for (const auto& [id, t] : sc.transitions) {
    if (!sc.find_state(t.source)) {
      add(ViolationKind::kUnknownSource, id,
          "transition " + id + " has unknown source " + t.source);
    }
    if (!sc.find_state(t.target)) {
      add(ViolationKind::kUnknownTarget, id,
          "transition " + id + " has unknown target " + t.target);
    }
    if (!sc.has_event(t.event)) {
      add(ViolationKind::kUnknownEvent, id,
          "transition " + id + " has undeclared event " + t.event);
    }
  }

  // Reachability needs a structurally sound machine.
  if (!out.empty()) return out;

  // Reachability and co-reachability of every simple state, checked on the
  // flattened machine.
  Statechart flat = sc.is_flat() ? sc : flatten(sc);
  std::map<std::string, std::vector<std::string>> fwd, bwd;
  for (const auto& [id, t] : flat.transitions) {
    fwd[t.source].push_back(t.target);
    bwd[t.target].push_back(t.source);
  }
  auto closure = [&](const std::vector<std::string>& seeds,
                     const std::map<std::string, std::vector<std::string>>& adj) {
    std::set<std::string> seen(seeds.begin(), seeds.end());
    std::deque<std::string> work(seeds.begin(), seeds.end());
    while (!work.empty()) {
      std::string cur = work.front();
      work.pop_front();
      auto it = adj.find(cur);
      if (it == adj.end()) continue;
      for (const auto& next : it->second) {
        if (seen.insert(next).second) work.push_back(next);
      }
    }
    return seen;
  };
  auto reachable = closure(flat.initial_states(), fwd);
  auto coreachable = closure(flat.final_states(), bwd);
  for (const auto& [id, s] : flat.states) {
    if (!reachable.count(id)) {
      add(ViolationKind::kUnreachable, id,
          "state " + id + " is not reachable from the initial state");
    }
    if (!coreachable.count(id)) {
      add(ViolationKind::kCannotReachFinal, id,
          "state " + id + " cannot reach a final state");
    }
  }
  return out;
}

Statechart flatten(const Statechart& sc) {
  if (sc.is_flat()) return sc;

  Statechart out;
  out.name = sc.name;
  out.events = sc.events;
  out.variables = sc.variables;

  // A composite final makes every simple descendant final.
  std::set<std::string> final_simple;
  for (const auto& [id, s] : sc.states) {
    if (!s.is_final) continue;
    for (const State* d : simple_descendants(sc, &s)) {
      final_simple.insert(d->id);
    }
  }

  std::string initial_simple;
  for (const auto& id : sc.initial_states()) {
    if (const State* entry = entry_descendant(sc, sc.find_state(id))) {
      initial_simple = entry->id;
    }
  }

  for (const auto& [id, s] : sc.states) {
    if (s.kind != StateKind::kSimple) continue;
    State copy;
    copy.id = id;
    copy.kind = StateKind::kSimple;
    copy.is_initial = (id == initial_simple);
    copy.is_final = final_simple.count(id) > 0;
    out.states.emplace(id, std::move(copy));
  }

  for (const auto& [id, t] : sc.transitions) {
    const State* src = sc.find_state(t.source);
    const State* dst = sc.find_state(t.target);
    const State* entry = entry_descendant(sc, dst);
    auto sources = simple_descendants(sc, src);
    for (const State* s : sources) {
      Transition copy = t;
      copy.source = s->id;
      copy.target = entry->id;
      if (sources.size() > 1) copy.id = t.id + "_" + s->id;
      out.transitions.emplace(copy.id, std::move(copy));
    }
  }
  return out;
}

std::vector<const Transition*> in_set(const Statechart& sc,
                                      const std::string& state_id) {
  if (!sc.find_state(state_id)) throw UnknownStateError(state_id);
  std::vector<const Transition*> out;
  for (const auto& [id, t] : sc.transitions) {
    if (t.target == state_id) out.push_back(&t);
  }
  return out;
}

std::vector<const Transition*> out_set(const Statechart& sc,
                                       const std::string& state_id) {
  if (!sc.find_state(state_id)) throw UnknownStateError(state_id);
  std::vector<const Transition*> out;
  for (const auto& [id, t] : sc.transitions) {
    if (t.source == state_id) out.push_back(&t);
  }
  return out;
}

std::string provenance_name(SuiteProvenance p) {
  switch (p) {
    case SuiteProvenance::kEnumerated: return "enumerated";
    case SuiteProvenance::kKtc: return "ktc";
    case SuiteProvenance::kFtc: return "ftc";
    case SuiteProvenance::kMinimized: return "minimized";
  }
  return "enumerated";
}

SuiteProvenance provenance_from_name(const std::string& name) {
  if (name == "ktc") return SuiteProvenance::kKtc;
  if (name == "ftc") return SuiteProvenance::kFtc;
  if (name == "minimized") return SuiteProvenance::kMinimized;
  if (name == "enumerated") return SuiteProvenance::kEnumerated;
  throw SemanticError("unknown suite provenance: " + name);
}

const TestCase* TestSuite::find(const std::string& id) const {
  for (const auto& tc : cases) {
    if (tc.id == id) return &tc;
  }
  return nullptr;
}

void sort_suite(TestSuite& suite) {
  std::stable_sort(suite.cases.begin(), suite.cases.end(),
                   [](const TestCase& a, const TestCase& b) {
                     auto key = [](const TestCase& tc) {
                       std::vector<std::string> events;
                       for (const auto& in : tc.inputs) events.push_back(in.event);
                       return std::tuple(tc.initial_state, tc.transition_trace,
                                         events);
                     };
                     return key(a) < key(b);
                   });
}

void number_suite(TestSuite& suite) {
  int n = 1;
  for (auto& tc : suite.cases) tc.id = "tc" + std::to_string(n++);
}

}  // namespace statecover
