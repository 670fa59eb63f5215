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

#ifndef STATECOVER_MODEL_HPP_
#define STATECOVER_MODEL_HPP_

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "statecover/errors.hpp"

namespace statecover {

enum class StateKind { kSimple, kComposite };

struct State {
  std::string id;
  StateKind kind = StateKind::kSimple;
  bool is_initial = false;
  bool is_final = false;
  // Hierarchy: empty parent means top level. A composite's default entry
  // child carries is_entry.
  std::string parent;
  bool is_entry = false;
};

// Boolean guard over integer variables: comparisons of variables/constants
// combined with and/or/not.
class GuardExpr {
 public:
  enum class Op { kAnd, kOr, kNot, kLt, kLe, kGt, kGe, kEq, kNe };

  struct Operand {
    bool is_var = false;
    std::string var;
    long long value = 0;
  };

  struct Node;
  using NodePtr = std::shared_ptr<const Node>;

  struct Node {
    Op op;
    // kAnd/kOr use lhs+rhs, kNot uses lhs; comparisons use a+b.
    NodePtr lhs;
    NodePtr rhs;
    Operand a;
    Operand b;
  };

  GuardExpr() = default;
  explicit GuardExpr(NodePtr root) : root_(std::move(root)) {}

  const NodePtr& root() const { return root_; }

  // All variable names referenced anywhere in the expression.
  std::set<std::string> variables() const;

  // All integer constants appearing in comparisons. Used by the test-data
  // search for boundary candidates.
  std::set<long long> constants() const;

  bool structurally_equal(const GuardExpr& other) const;

 private:
  NodePtr root_;
};

enum class TransitionKind { kLegal, kFaulty };

struct Transition {
  std::string id;
  std::string source;
  std::string target;
  std::string event;
  std::optional<GuardExpr> guard;
  std::optional<std::string> action;
  // Faulty transitions are never stored in a Statechart; they only exist as
  // derived values (see generator::derive_faulty_pairs).
  TransitionKind kind = TransitionKind::kLegal;

  // Renders `event [guard] / action` with the optional parts elided.
  std::string label() const;
};

class Statechart {
 public:
  std::string name;
  std::vector<std::string> events;     // sorted, unique
  std::vector<std::string> variables;  // sorted, unique
  std::map<std::string, State> states;
  std::map<std::string, Transition> transitions;

  bool has_event(const std::string& e) const;
  bool has_variable(const std::string& v) const;
  const State* find_state(const std::string& id) const;
  const Transition* find_transition(const std::string& id) const;

  // Top-level states marked initial (exactly one for a valid machine).
  std::vector<std::string> initial_states() const;
  std::vector<std::string> final_states() const;

  // True when every state is simple.
  bool is_flat() const;

  // Children of `id` in the hierarchy, sorted.
  std::vector<std::string> children(const std::string& id) const;
};

enum class ViolationKind {
  kNoInitial,
  kMultipleInitial,
  kNoFinal,
  kUnknownSource,
  kUnknownTarget,
  kUnknownEvent,
  kHierarchyCycle,
  kCompositeWithoutChild,
  kCompositeWithoutEntry,
  kMultipleEntry,
  kSimpleWithChild,
  kUnreachable,
  kCannotReachFinal,
};

struct Violation {
  ViolationKind kind;
  std::string subject;  // state/transition id the violation is about
  std::string message;
};

// Checks every structural invariant plus reachability/co-reachability of
// every simple state. An empty result means the machine is well formed.
std::vector<Violation> validate(const Statechart& sc);

// Replaces composite states by their simple descendants: a transition out of
// a composite is copied from every descendant simple state, a transition into
// a composite is redirected to its default-entry descendant. Identity on flat
// machines and idempotent.
Statechart flatten(const Statechart& sc);

// Transitions entering / leaving a simple state of a flattened machine.
std::vector<const Transition*> in_set(const Statechart& sc,
                                      const std::string& state_id);
std::vector<const Transition*> out_set(const Statechart& sc,
                                       const std::string& state_id);

// --- Test cases -------------------------------------------------------------

struct InputEvent {
  std::string event;
  std::map<std::string, long long> bindings;

  bool operator==(const InputEvent&) const = default;
  auto operator<=>(const InputEvent&) const = default;
};

struct TestCase {
  std::string id;
  std::string initial_state;             // I
  std::vector<InputEvent> inputs;        // S (the ID elements)
  std::vector<std::string> expected_outputs;  // O (the OD elements)
  std::vector<std::string> state_trace;       // ST elements, in visit order
  std::vector<std::string> transition_trace;  // TR elements, in fire order
  bool complete = false;
};

enum class SuiteProvenance { kEnumerated, kKtc, kFtc, kMinimized };

std::string provenance_name(SuiteProvenance p);
SuiteProvenance provenance_from_name(const std::string& name);

struct TestSuite {
  SuiteProvenance provenance = SuiteProvenance::kEnumerated;
  std::vector<TestCase> cases;

  const TestCase* find(const std::string& id) const;
};

// Canonical suite order: (initial state id, lexicographic transition trace,
// input event names). Used by every generator before ids are assigned.
void sort_suite(TestSuite& suite);

// Assigns ids tc1..tcN in current order.
void number_suite(TestSuite& suite);

}  // namespace statecover

#endif  // STATECOVER_MODEL_HPP_
