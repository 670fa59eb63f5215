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

#ifndef STATECOVER_ERRORS_HPP_
#define STATECOVER_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace statecover {

// Position of a token in DSL source text. Lines and columns are 1-based.
struct SourceSpan {
  int line = 1;
  int column = 1;
  int length = 0;
};

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed DSL or guard text.
class SyntaxError : public Error {
 public:
  SyntaxError(SourceSpan span, const std::string& message)
      : Error(std::to_string(span.line) + ":" + std::to_string(span.column) +
              ": " + message),
        span_(span) {}
  const SourceSpan& span() const { return span_; }

 private:
  SourceSpan span_;
};

// Well-formed text referring to undeclared ids, duplicate ids, etc.
class SemanticError : public Error {
 public:
  using Error::Error;
};

class UnknownStateError : public SemanticError {
 public:
  explicit UnknownStateError(const std::string& id)
      : SemanticError("unknown state: " + id) {}
};

class UnknownTestCaseError : public SemanticError {
 public:
  explicit UnknownTestCaseError(const std::string& id)
      : SemanticError("unknown test case: " + id) {}
};

class UnboundVariableError : public Error {
 public:
  explicit UnboundVariableError(const std::string& name)
      : Error("unbound guard variable: " + name) {}
};

// More than one transition enabled for the same state/event/bindings.
class NondeterministicModelError : public Error {
 public:
  using Error::Error;
};

class NotStronglyConnectedError : public Error {
 public:
  using Error::Error;
};

class EmptyGraphError : public Error {
 public:
  using Error::Error;
};

class UnreachableStateError : public Error {
 public:
  explicit UnreachableStateError(const std::string& id)
      : Error("state not reachable from the initial state: " + id) {}
};

class SuiteTooLargeError : public Error {
 public:
  explicit SuiteTooLargeError(std::size_t cap)
      : Error("generated suite exceeds cap of " + std::to_string(cap)) {}
};

class EmptySuiteError : public Error {
 public:
  EmptySuiteError() : Error("test suite is empty") {}
};

class InvalidBoundError : public Error {
 public:
  using Error::Error;
};

}  // namespace statecover

#endif  // STATECOVER_ERRORS_HPP_
