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

#include "statecover/parser.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include <json.hpp>

#include "statecover/tgraph.hpp"

namespace statecover {

namespace {

// --- guard expression parsing ----------------------------------------------

struct GuardToken {
  enum Kind { kIdent, kInt, kOp, kLParen, kRParen, kEnd };
  Kind kind = kEnd;
  std::string text;
  long long value = 0;
  int column = 1;  // 1-based within the guard text
};

class GuardLexer {
 public:
  GuardLexer(const std::string& text, SourceSpan base)
      : text_(text), base_(base) {}

  GuardToken next() {
    while (pos_ < text_.size() && std::isspace((unsigned char)text_[pos_])) {
      ++pos_;
    }
    GuardToken tok;
    tok.column = (int)pos_ + 1;
    if (pos_ >= text_.size()) {
      tok.kind = GuardToken::kEnd;
      return tok;
    }
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      tok.kind = GuardToken::kLParen;
      tok.text = "(";
      return tok;
    }
    if (c == ')') {
      ++pos_;
      tok.kind = GuardToken::kRParen;
      tok.text = ")";
      return tok;
    }
    if (std::isalpha((unsigned char)c) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum((unsigned char)text_[pos_]) || text_[pos_] == '_')) {
        ++pos_;
      }
      tok.kind = GuardToken::kIdent;
      tok.text = text_.substr(start, pos_ - start);
      return tok;
    }
    if (std::isdigit((unsigned char)c) ||
        (c == '-' && pos_ + 1 < text_.size() &&
         std::isdigit((unsigned char)text_[pos_ + 1]))) {
      std::size_t start = pos_;
      if (c == '-') ++pos_;
      while (pos_ < text_.size() && std::isdigit((unsigned char)text_[pos_])) {
        ++pos_;
      }
      tok.kind = GuardToken::kInt;
      tok.text = text_.substr(start, pos_ - start);
      tok.value = std::stoll(tok.text);
      return tok;
    }
    for (const char* op : {"<=", ">=", "==", "!=", "<", ">"}) {
      std::size_t n = std::char_traits<char>::length(op);
      if (text_.compare(pos_, n, op) == 0) {
        pos_ += n;
        tok.kind = GuardToken::kOp;
        tok.text = op;
        return tok;
      }
    }
    throw error(tok.column, std::string("unexpected character '") + c +
                                "' in guard");
  }

  SyntaxError error(int column, const std::string& message) const {
    SourceSpan span = base_;
    span.column = base_.column + column - 1;
    span.length = 1;
    return SyntaxError(span, message);
  }

 private:
  const std::string& text_;
  SourceSpan base_;
  std::size_t pos_ = 0;
};

class GuardParser {
 public:
  GuardParser(const std::string& text, SourceSpan base)
      : lexer_(text, base) {
    advance();
  }

  GuardExpr parse() {
    GuardExpr::NodePtr root = parse_or();
    if (cur_.kind != GuardToken::kEnd) {
      throw lexer_.error(cur_.column, "trailing input after guard expression");
    }
    return GuardExpr(std::move(root));
  }

 private:
  void advance() { cur_ = lexer_.next(); }

  GuardExpr::NodePtr parse_or() {
    GuardExpr::NodePtr lhs = parse_and();
    while (cur_.kind == GuardToken::kIdent && cur_.text == "or") {
      advance();
      auto node = std::make_shared<GuardExpr::Node>();
      node->op = GuardExpr::Op::kOr;
      node->lhs = std::move(lhs);
      node->rhs = parse_and();
      lhs = std::move(node);
    }
    return lhs;
  }

  GuardExpr::NodePtr parse_and() {
    GuardExpr::NodePtr lhs = parse_unary();
    while (cur_.kind == GuardToken::kIdent && cur_.text == "and") {
      advance();
      auto node = std::make_shared<GuardExpr::Node>();
      node->op = GuardExpr::Op::kAnd;
      node->lhs = std::move(lhs);
      node->rhs = parse_unary();
      lhs = std::move(node);
    }
    return lhs;
  }

  GuardExpr::NodePtr parse_unary() {
    if (cur_.kind == GuardToken::kIdent && cur_.text == "not") {
      advance();
      auto node = std::make_shared<GuardExpr::Node>();
      node->op = GuardExpr::Op::kNot;
      node->lhs = parse_unary();
      return node;
    }
    return parse_primary();
  }

  GuardExpr::NodePtr parse_primary() {
    if (cur_.kind == GuardToken::kLParen) {
      advance();
      GuardExpr::NodePtr inner = parse_or();
      if (cur_.kind != GuardToken::kRParen) {
        throw lexer_.error(cur_.column, "expected ')'");
      }
      advance();
      return inner;
    }
    return parse_comparison();
  }

  GuardExpr::NodePtr parse_comparison() {
    GuardExpr::Operand lhs = parse_operand();
    if (cur_.kind != GuardToken::kOp) {
      throw lexer_.error(cur_.column, "expected comparison operator");
    }
    GuardExpr::Op op;
    if (cur_.text == "<") op = GuardExpr::Op::kLt;
    else if (cur_.text == "<=") op = GuardExpr::Op::kLe;
    else if (cur_.text == ">") op = GuardExpr::Op::kGt;
    else if (cur_.text == ">=") op = GuardExpr::Op::kGe;
    else if (cur_.text == "==") op = GuardExpr::Op::kEq;
    else op = GuardExpr::Op::kNe;
    advance();
    GuardExpr::Operand rhs = parse_operand();
    auto node = std::make_shared<GuardExpr::Node>();
    node->op = op;
    node->a = std::move(lhs);
    node->b = std::move(rhs);
    return node;
  }

  GuardExpr::Operand parse_operand() {
    GuardExpr::Operand opnd;
    if (cur_.kind == GuardToken::kIdent) {
      if (cur_.text == "and" || cur_.text == "or" || cur_.text == "not") {
        throw lexer_.error(cur_.column,
                           "'" + cur_.text + "' is not a valid operand");
      }
      opnd.is_var = true;
      opnd.var = cur_.text;
    } else if (cur_.kind == GuardToken::kInt) {
      opnd.value = cur_.value;
    } else {
      throw lexer_.error(cur_.column, "expected variable or integer constant");
    }
    advance();
    return opnd;
  }

  GuardLexer lexer_;
  GuardToken cur_;
};

GuardExpr parse_guard_at(const std::string& text, SourceSpan base) {
  return GuardParser(text, base).parse();
}

int precedence(GuardExpr::Op op) {
  switch (op) {
    case GuardExpr::Op::kOr: return 0;
    case GuardExpr::Op::kAnd: return 1;
    case GuardExpr::Op::kNot: return 2;
    default: return 3;
  }
}

std::string operand_text(const GuardExpr::Operand& opnd) {
  return opnd.is_var ? opnd.var : std::to_string(opnd.value);
}

std::string render(const GuardExpr::NodePtr& node) {
  switch (node->op) {
    case GuardExpr::Op::kAnd:
    case GuardExpr::Op::kOr: {
      const char* word = node->op == GuardExpr::Op::kAnd ? " and " : " or ";
      auto side = [&](const GuardExpr::NodePtr& child, bool right) {
        std::string text = render(child);
        int mine = precedence(node->op);
        int theirs = precedence(child->op);
        // Same-precedence on the right needs parens to keep left association.
        if (theirs < mine || (right && theirs == mine)) {
          return "(" + text + ")";
        }
        return text;
      };
      return side(node->lhs, false) + word + side(node->rhs, true);
    }
    case GuardExpr::Op::kNot: {
      std::string inner = render(node->lhs);
      if (precedence(node->lhs->op) < precedence(GuardExpr::Op::kNot)) {
        inner = "(" + inner + ")";
      }
      return "not " + inner;
    }
    case GuardExpr::Op::kLt:
      return operand_text(node->a) + " < " + operand_text(node->b);
    case GuardExpr::Op::kLe:
      return operand_text(node->a) + " <= " + operand_text(node->b);
    case GuardExpr::Op::kGt:
      return operand_text(node->a) + " > " + operand_text(node->b);
    case GuardExpr::Op::kGe:
      return operand_text(node->a) + " >= " + operand_text(node->b);
    case GuardExpr::Op::kEq:
      return operand_text(node->a) + " == " + operand_text(node->b);
    case GuardExpr::Op::kNe:
      return operand_text(node->a) + " != " + operand_text(node->b);
  }
  return "";
}

// --- DSL parsing ------------------------------------------------------------

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

bool valid_identifier(const std::string& s) {
  if (s.empty()) return false;
  if (!std::isalpha((unsigned char)s[0]) && s[0] != '_') return false;
  for (char c : s) {
    if (!std::isalnum((unsigned char)c) && c != '_') return false;
  }
  return true;
}

std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

struct RawTransition {
  Transition t;
  std::string guard_text;
  SourceSpan guard_span;
  int line = 1;
};

}  // namespace

GuardExpr parse_guard(const std::string& text) {
  return parse_guard_at(text, SourceSpan{1, 1, 0});
}

std::string guard_to_string(const GuardExpr& guard) {
  if (!guard.root()) return "";
  return render(guard.root());
}

Statechart parse_statechart(const std::string& text) {
  Statechart sc;
  std::vector<RawTransition> raw_transitions;
  bool saw_header = false;

  std::istringstream input(text);
  std::string rawline;
  int lineno = 0;
  while (std::getline(input, rawline)) {
    ++lineno;
    std::string line = rawline;
    if (auto hash = line.find('#'); hash != std::string::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;

    auto err = [&](int column, const std::string& msg) {
      return SyntaxError(SourceSpan{lineno, column, 1}, msg);
    };

    std::istringstream ls(line);
    std::string keyword;
    ls >> keyword;

    if (!saw_header) {
      if (keyword != "statechart") {
        throw err(1, "expected 'statechart <Name>'");
      }
      std::string name, extra;
      ls >> name;
      if (!valid_identifier(name)) throw err(1, "invalid statechart name");
      if (ls >> extra) throw err(1, "trailing input after statechart name");
      sc.name = name;
      saw_header = true;
      continue;
    }

    if (keyword == "events" || keyword == "vars") {
      std::string id;
      auto& dest = keyword == "events" ? sc.events : sc.variables;
      while (ls >> id) {
        if (!valid_identifier(id)) {
          throw err(1, "invalid identifier '" + id + "' in " + keyword);
        }
        dest.push_back(id);
      }
      std::sort(dest.begin(), dest.end());
      dest.erase(std::unique(dest.begin(), dest.end()), dest.end());
      continue;
    }

    if (keyword == "state") {
      std::string id;
      ls >> id;
      if (!valid_identifier(id)) throw err(1, "expected state id");
      State s;
      s.id = id;
      std::string flag;
      while (ls >> flag) {
        if (flag == "initial") {
          s.is_initial = true;
        } else if (flag == "final") {
          s.is_final = true;
        } else if (flag == "entry") {
          s.is_entry = true;
        } else if (flag == "in") {
          if (!(ls >> s.parent) || !valid_identifier(s.parent)) {
            throw err(1, "expected parent id after 'in'");
          }
        } else {
          throw err(1, "unknown state flag '" + flag + "'");
        }
      }
      if (sc.states.count(id)) {
        throw SemanticError("duplicate state id: " + id);
      }
      sc.states.emplace(id, std::move(s));
      continue;
    }

    if (keyword == "transition") {
      // transition <Id>: <Src> -> <Dst> on <event> [<guard>] / <action>
      auto colon = line.find(':');
      if (colon == std::string::npos) {
        throw err(1, "expected ':' after transition id");
      }
      std::string id = trim(line.substr(std::string("transition").size(),
                                        colon - std::string("transition").size()));
      if (!valid_identifier(id)) throw err(1, "expected transition id");

      std::string rest = line.substr(colon + 1);
      // Split the optional guard/action tail off the structural part.
      std::string structural = rest;
      std::string guard_text;
      SourceSpan guard_span{lineno, 1, 0};
      std::string action_text;
      bool has_action = false;
      if (auto lb = rest.find('['); lb != std::string::npos) {
        auto rb = rest.find(']', lb);
        if (rb == std::string::npos) {
          throw err((int)(colon + 1 + lb + 1), "unterminated guard, missing ']'");
        }
        guard_text = trim(rest.substr(lb + 1, rb - lb - 1));
        guard_span.column = (int)(colon + 1 + lb + 2);
        guard_span.length = (int)(rb - lb - 1);
        structural = rest.substr(0, lb);
        std::string tail = trim(rest.substr(rb + 1));
        if (!tail.empty()) {
          if (tail[0] != '/') {
            throw err((int)(colon + 1 + rb + 2), "expected '/' before action");
          }
          action_text = trim(tail.substr(1));
          has_action = true;
        }
      } else if (auto slash = rest.find('/'); slash != std::string::npos) {
        structural = rest.substr(0, slash);
        action_text = trim(rest.substr(slash + 1));
        has_action = true;
      }

      auto toks = split_ws(structural);
      if (toks.size() != 5 || toks[1] != "->" || toks[3] != "on" ||
          !valid_identifier(toks[0]) || !valid_identifier(toks[2]) ||
          !valid_identifier(toks[4])) {
        throw err(1, "expected '<Src> -> <Dst> on <event>'");
      }
      if (has_action && action_text.empty()) {
        throw err(1, "empty action after '/'");
      }

      RawTransition raw;
      raw.t.id = id;
      raw.t.source = toks[0];
      raw.t.target = toks[2];
      raw.t.event = toks[4];
      if (has_action) raw.t.action = action_text;
      raw.guard_text = guard_text;
      raw.guard_span = guard_span;
      raw.line = lineno;
      raw_transitions.push_back(std::move(raw));
      continue;
    }

    throw err(1, "unknown directive '" + keyword + "'");
  }

  if (!saw_header) {
    throw SyntaxError(SourceSpan{1, 1, 0}, "empty input, expected 'statechart'");
  }

  // Resolve references now that every declaration has been read.
  for (const auto& [id, s] : sc.states) {
    if (!s.parent.empty()) {
      const State* p = sc.find_state(s.parent);
      if (!p) throw SemanticError("unknown parent state: " + s.parent);
    }
  }
  // Mark composites.
  for (auto& [id, s] : sc.states) {
    if (!sc.children(id).empty()) s.kind = StateKind::kComposite;
  }

  int top_level_initials = 0;
  for (const auto& [id, s] : sc.states) {
    if (s.is_initial && s.parent.empty()) ++top_level_initials;
  }
  if (top_level_initials > 1) {
    throw SemanticError("duplicate-initial: more than one initial state");
  }

  for (auto& raw : raw_transitions) {
    if (sc.transitions.count(raw.t.id)) {
      throw SemanticError("duplicate transition id: " + raw.t.id);
    }
    if (!sc.find_state(raw.t.source)) {
      throw SemanticError("unknown state: " + raw.t.source);
    }
    if (!sc.find_state(raw.t.target)) {
      throw SemanticError("unknown state: " + raw.t.target);
    }
    if (!sc.has_event(raw.t.event)) {
      throw SemanticError("unknown event: " + raw.t.event);
    }
    if (!raw.guard_text.empty()) {
      GuardExpr guard = parse_guard_at(raw.guard_text, raw.guard_span);
      for (const auto& var : guard.variables()) {
        if (!sc.has_variable(var)) {
          throw SemanticError("undeclared guard variable: " + var);
        }
      }
      raw.t.guard = std::move(guard);
    }
    sc.transitions.emplace(raw.t.id, std::move(raw.t));
  }
  return sc;
}

std::string serialize_statechart(const Statechart& sc) {
  std::ostringstream out;
  out << "statechart " << sc.name << "\n";
  if (!sc.events.empty()) {
    out << "events";
    for (const auto& e : sc.events) out << " " << e;
    out << "\n";
  }
  if (!sc.variables.empty()) {
    out << "vars";
    for (const auto& v : sc.variables) out << " " << v;
    out << "\n";
  }
  for (const auto& [id, s] : sc.states) {
    out << "state " << id;
    if (s.is_initial) out << " initial";
    if (s.is_final) out << " final";
    if (!s.parent.empty()) out << " in " << s.parent;
    if (s.is_entry) out << " entry";
    out << "\n";
  }
  for (const auto& [id, t] : sc.transitions) {
    out << "transition " << id << ": " << t.source << " -> " << t.target
        << " on " << t.event;
    if (t.guard) out << " [" << guard_to_string(*t.guard) << "]";
    if (t.action) out << " / " << *t.action;
    out << "\n";
  }
  return out.str();
}

bool statecharts_equal(const Statechart& a, const Statechart& b) {
  if (a.name != b.name || a.events != b.events || a.variables != b.variables) {
    return false;
  }
  if (a.states.size() != b.states.size() ||
      a.transitions.size() != b.transitions.size()) {
    return false;
  }
  for (const auto& [id, s] : a.states) {
    const State* o = b.find_state(id);
    if (!o || s.kind != o->kind || s.is_initial != o->is_initial ||
        s.is_final != o->is_final || s.parent != o->parent ||
        s.is_entry != o->is_entry) {
      return false;
    }
  }
  for (const auto& [id, t] : a.transitions) {
    const Transition* o = b.find_transition(id);
    if (!o || t.source != o->source || t.target != o->target ||
        t.event != o->event || t.action != o->action) {
      return false;
    }
    if (t.guard.has_value() != o->guard.has_value()) return false;
    if (t.guard && !t.guard->structurally_equal(*o->guard)) return false;
  }
  return true;
}

std::string export_dot(const TransitionGraph& tg) {
  std::vector<std::string> nodes;
  for (const auto& v : tg.vertices) nodes.push_back(v.name);
  std::sort(nodes.begin(), nodes.end());

  std::vector<std::pair<std::string, std::string>> edges;
  for (const auto& [from, to] : tg.edges) {
    edges.emplace_back(tg.vertices[from].name, tg.vertices[to].name);
  }
  std::sort(edges.begin(), edges.end());

  std::ostringstream out;
  out << "digraph TG {\n";
  for (const auto& n : nodes) out << "  \"" << n << "\";\n";
  for (const auto& [from, to] : edges) {
    out << "  \"" << from << "\" -> \"" << to << "\";\n";
  }
  out << "}\n";
  return out.str();
}

std::string suite_to_json(const TestSuite& suite) {
  nlohmann::json root;
  root["provenance"] = provenance_name(suite.provenance);
  auto& arr = root["suite"] = nlohmann::json::array();
  for (const auto& tc : suite.cases) {
    nlohmann::json c;
    c["id"] = tc.id;
    c["I"] = tc.initial_state;
    auto& inputs = c["inputs"] = nlohmann::json::array();
    for (const auto& in : tc.inputs) {
      nlohmann::json e;
      e["event"] = in.event;
      e["bindings"] = nlohmann::json::object();
      for (const auto& [var, value] : in.bindings) e["bindings"][var] = value;
      inputs.push_back(std::move(e));
    }
    c["expected_outputs"] = tc.expected_outputs;
    c["states"] = tc.state_trace;
    c["transitions"] = tc.transition_trace;
    c["complete"] = tc.complete;
    arr.push_back(std::move(c));
  }
  return root.dump(2) + "\n";
}

TestSuite suite_from_json(const std::string& text) {
  nlohmann::json root;
  try {
    root = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw SyntaxError(SourceSpan{1, 1, 0},
                      std::string("invalid suite JSON: ") + e.what());
  }
  TestSuite suite;
  try {
    if (root.contains("provenance")) {
      suite.provenance = provenance_from_name(root.at("provenance"));
    }
    for (const auto& c : root.at("suite")) {
      TestCase tc;
      tc.id = c.at("id");
      tc.initial_state = c.at("I");
      for (const auto& in : c.at("inputs")) {
        InputEvent e;
        e.event = in.at("event");
        if (in.contains("bindings")) {
          for (const auto& [var, value] : in.at("bindings").items()) {
            e.bindings[var] = value.get<long long>();
          }
        }
        tc.inputs.push_back(std::move(e));
      }
      tc.expected_outputs =
          c.at("expected_outputs").get<std::vector<std::string>>();
      tc.state_trace = c.at("states").get<std::vector<std::string>>();
      tc.transition_trace = c.at("transitions").get<std::vector<std::string>>();
      tc.complete = c.at("complete");
      suite.cases.push_back(std::move(tc));
    }
  } catch (const nlohmann::json::exception& e) {
    throw SemanticError(std::string("malformed suite JSON: ") + e.what());
  }
  return suite;
}

}  // namespace statecover
