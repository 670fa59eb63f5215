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

#ifndef STATECOVER_INTERPRETER_HPP_
#define STATECOVER_INTERPRETER_HPP_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "statecover/model.hpp"

namespace statecover {

using Env = std::map<std::string, long long>;

bool eval_guard(const GuardExpr& guard, const Env& env);

struct StepResult {
  const Transition* fired = nullptr;
  std::string next_state;
};

// Fires the unique transition of `current` enabled by the event and its
// bindings. Returns nullopt when no transition is enabled (the sneak-path
// case); throws NondeterministicModelError when more than one is.
std::optional<StepResult> step(const Statechart& sc, const std::string& current,
                               const InputEvent& input);

struct ExecTrace {
  enum class Verdict { kAccepted, kRejected };

  std::vector<std::string> states;
  std::vector<std::string> outputs;
  std::vector<std::string> fired_transitions;
  // Every guard evaluation observed while scanning event-matching
  // transitions, in order. Feeds condition coverage.
  std::vector<std::pair<std::string, bool>> guard_evals;
  Verdict verdict = Verdict::kAccepted;
  std::size_t reject_step = 0;  // 1-based input index, valid when rejected
  std::string reject_reason;

  bool accepted() const { return verdict == Verdict::kAccepted; }
};

// Folds `step` over the inputs, stopping at the first input with no enabled
// transition. A fired transition contributes its action label to the outputs,
// or the token `out(<id>)` when it has none.
ExecTrace run(const Statechart& sc, const std::string& start,
              const std::vector<InputEvent>& inputs);

// Default expected-output token for an unlabeled transition.
std::string default_output(const std::string& transition_id);

}  // namespace statecover

#endif  // STATECOVER_INTERPRETER_HPP_
