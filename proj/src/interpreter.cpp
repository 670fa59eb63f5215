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

#include "statecover/interpreter.hpp"

namespace statecover {

namespace {

long long operand_value(const GuardExpr::Operand& opnd, const Env& env) {
  if (!opnd.is_var) return opnd.value;
  auto it = env.find(opnd.var);
  if (it == env.end()) throw UnboundVariableError(opnd.var);
  return it->second;
}

bool eval_node(const GuardExpr::NodePtr& node, const Env& env) {
  switch (node->op) {
    case GuardExpr::Op::kAnd:
      return eval_node(node->lhs, env) && eval_node(node->rhs, env);
    case GuardExpr::Op::kOr:
      return eval_node(node->lhs, env) || eval_node(node->rhs, env);
    case GuardExpr::Op::kNot:
      return !eval_node(node->lhs, env);
    default: {
      long long a = operand_value(node->a, env);
      long long b = operand_value(node->b, env);
      switch (node->op) {
        case GuardExpr::Op::kLt: return a < b;
        case GuardExpr::Op::kLe: return a <= b;
        case GuardExpr::Op::kGt: return a > b;
        case GuardExpr::Op::kGe: return a >= b;
        case GuardExpr::Op::kEq: return a == b;
        default: return a != b;
      }
    }
  }
}

}  // namespace

bool eval_guard(const GuardExpr& guard, const Env& env) {
  if (!guard.root()) return true;
  return eval_node(guard.root(), env);
}

std::string default_output(const std::string& transition_id) {
  return "out(" + transition_id + ")";
}

std::optional<StepResult> step(const Statechart& sc, const std::string& current,
                               const InputEvent& input) {
  if (!sc.find_state(current)) throw UnknownStateError(current);
  const Transition* enabled = nullptr;
  for (const auto& [id, t] : sc.transitions) {
    if (t.source != current || t.event != input.event) continue;
    bool fires = !t.guard || eval_guard(*t.guard, input.bindings);
    if (!fires) continue;
    if (enabled) {
      throw NondeterministicModelError(
          "transitions " + enabled->id + " and " + id +
          " are both enabled at state " + current + " on event " + input.event);
    }
    enabled = &t;
  }
  if (!enabled) return std::nullopt;
  return StepResult{enabled, enabled->target};
}

ExecTrace run(const Statechart& sc, const std::string& start,
              const std::vector<InputEvent>& inputs) {
  ExecTrace trace;
  trace.states.push_back(start);
  std::string current = start;
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    const InputEvent& input = inputs[i];
    // Record guard outcomes for every event-matching transition, whether or
    // not one fires.
    for (const auto& [id, t] : sc.transitions) {
      if (t.source == current && t.event == input.event && t.guard) {
        trace.guard_evals.emplace_back(id, eval_guard(*t.guard, input.bindings));
      }
    }
    auto result = step(sc, current, input);
    if (!result) {
      trace.verdict = ExecTrace::Verdict::kRejected;
      trace.reject_step = i + 1;
      trace.reject_reason = "no_enabled_transition";
      return trace;
    }
    trace.outputs.push_back(result->fired->action
                                ? *result->fired->action
                                : default_output(result->fired->id));
    trace.fired_transitions.push_back(result->fired->id);
    current = result->next_state;
    trace.states.push_back(current);
  }
  return trace;
}

}  // namespace statecover
