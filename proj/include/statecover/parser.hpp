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

#ifndef STATECOVER_PARSER_HPP_
#define STATECOVER_PARSER_HPP_

#include <string>

#include "statecover/model.hpp"

namespace statecover {

class TransitionGraph;

// Parses the line-oriented statechart DSL:
//
//   statechart <Name>
//   events <e1> <e2> ...
//   vars <v1> <v2> ...
//   state <Id> [initial] [final] [in <ParentId>] [entry]
//   transition <Id>: <Src> -> <Dst> on <event> [<guard>] / <action>
//
// `#` starts a comment. Guard and action on a transition line are optional.
// Throws SyntaxError for malformed text and SemanticError for unresolved or
// duplicate ids.
Statechart parse_statechart(const std::string& text);

// Canonical text form; parse_statechart(serialize_statechart(sc)) is
// structurally equal to sc, and canonical input round-trips byte for byte.
std::string serialize_statechart(const Statechart& sc);

// Guard grammar, loosest to tightest binding: or, and, not, comparison.
// Comparisons relate a variable or integer constant to another.
GuardExpr parse_guard(const std::string& text);

// Canonical rendering with minimal parentheses, e.g. "n <= 6".
std::string guard_to_string(const GuardExpr& guard);

// Deep structural comparison of two statecharts.
bool statecharts_equal(const Statechart& a, const Statechart& b);

// DOT digraph with vertices named by transition ids ("ti"/"tf" for the
// sentinels, comma-joined ids for sequence vertices); nodes and edges are
// emitted in sorted order.
std::string export_dot(const TransitionGraph& tg);

// JSON suite schema:
//   { "provenance": "...",
//     "suite": [ { "id", "I", "inputs": [{"event", "bindings": {..}}],
//                  "expected_outputs": [..], "states": [..],
//                  "transitions": [..], "complete": bool } ] }
std::string suite_to_json(const TestSuite& suite);
TestSuite suite_from_json(const std::string& text);

}  // namespace statecover

#endif  // STATECOVER_PARSER_HPP_
