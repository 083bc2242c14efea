// Copyright 2026 The Chorus Authors.
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

#include "chorus/surface.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <limits>
#include <optional>
#include <set>

#include "chorus/labels.hpp"
#include "chorus/overloaded.hpp"

namespace chorus {

namespace {

std::string describe(const std::vector<std::string>& expected) {
  std::string out;
  for (std::size_t i = 0; i < expected.size(); ++i) {
    if (i != 0) out += i + 1 == expected.size() ? " or " : ", ";
    out += expected[i];
  }
  return out;
}

}  // namespace

ParseError::ParseError(const std::string& message, Span span, std::vector<std::string> expected)
    : std::runtime_error(std::to_string(span.begin.line) + ":" + std::to_string(span.begin.column) +
                         ": " + message),
      span_(span),
      expected_(std::move(expected)) {}

// ---------------------------------------------------------------------------
// Lexer

namespace {

enum class TokenKind { kName, kNumber, kString, kPunct, kEnd };

struct Token {
  TokenKind kind;
  std::string text;  // for strings: the unescaped contents
  Span span;
};

// Longest first, so that "(+)" wins over "(" and "->" over "-".
constexpr std::array<std::string_view, 21> kPunctuation = {
    "(+)", "->", "==", "<=", "&&", "{", "}", "(", ")", "[", "]",
    ",",   ";",  ".",  "@",  "+",  "!", "?", "&", "|", ":"};

const std::set<std::string, std::less<>> kKeywords = {
    "call", "def",  "else", "end",   "false", "fst",  "if",      "left",
    "main", "right", "snd", "succ",  "then",  "true", "rt_call"};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip_blank();
      const SourcePos start = pos_;
      if (at_end()) {
        out.push_back(Token{TokenKind::kEnd, "", Span{start, start}});
        return out;
      }
      const char c = text_[pos_.offset];
      if (std::isalpha(static_cast<unsigned char>(c))) {
        std::string name;
        while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) {
          name += advance();
        }
        out.push_back(Token{TokenKind::kName, std::move(name), Span{start, pos_}});
      } else if (c == '_') {
        advance();
        throw ParseError("names cannot start with '_'", Span{start, pos_}, {"name"});
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        std::string digits;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) digits += advance();
        out.push_back(Token{TokenKind::kNumber, std::move(digits), Span{start, pos_}});
      } else if (c == '"') {
        out.push_back(string_literal(start));
      } else {
        out.push_back(punctuation(start));
      }
    }
  }

 private:
  bool at_end() const { return pos_.offset >= text_.size(); }
  char peek() const { return text_[pos_.offset]; }

  char advance() {
    const char c = text_[pos_.offset++];
    if (c == '\n') {
      ++pos_.line;
      pos_.column = 1;
    } else {
      ++pos_.column;
    }
    return c;
  }

  void skip_blank() {
    while (!at_end()) {
      if (std::isspace(static_cast<unsigned char>(peek()))) {
        advance();
      } else if (peek() == '#') {
        while (!at_end() && peek() != '\n') advance();
      } else {
        return;
      }
    }
  }

  Token string_literal(SourcePos start) {
    advance();
    std::string out;
    for (;;) {
      if (at_end() || peek() == '\n') {
        throw ParseError("unterminated string", Span{start, pos_}, {"'\"'"});
      }
      char c = advance();
      if (c == '"') break;
      if (c == '\\') {
        if (at_end()) throw ParseError("unterminated string", Span{start, pos_}, {"'\"'"});
        c = advance();
        if (c == 'n') c = '\n';
      }
      out += c;
    }
    return Token{TokenKind::kString, std::move(out), Span{start, pos_}};
  }

  Token punctuation(SourcePos start) {
    const std::string_view rest = text_.substr(pos_.offset);
    for (std::string_view p : kPunctuation) {
      if (rest.substr(0, p.size()) == p) {
        for (std::size_t i = 0; i < p.size(); ++i) advance();
        return Token{TokenKind::kPunct, std::string(p), Span{start, pos_}};
      }
    }
    advance();
    throw ParseError(std::string("unexpected character '") + rest.front() + "'", Span{start, pos_},
                     {});
  }

  std::string_view text_;
  SourcePos pos_;
};

// ---------------------------------------------------------------------------
// Parser

std::string quoted(const std::string& s) { return "'" + s + "'"; }

class Parser {
 public:
  explicit Parser(std::string_view text) : tokens_(Lexer(text).run()) {}

  CCSource cc_program() {
    CCSource out;
    while (at("def")) {
      next();
      const Token& name_token = peek();
      const ProcName x = name("procedure name");
      if (out.program.procedures.is_explicit(x)) {
        throw ParseError("procedure " + x.str() + " is defined twice", name_token.span, {});
      }
      expect("(");
      std::vector<ProcessName> params{name("process name")};
      while (accept(",")) params.push_back(name("process name"));
      expect(")");
      expect("{");
      Path path;
      Choreography body = chor(x, path, out.spans);
      expect("}");
      out.program.procedures.define(x, std::move(params), std::move(body));
      out.declared.push_back(x);
    }
    expect("main");
    expect("{");
    Path path;
    out.program.main = chor(std::nullopt, path, out.spans);
    expect("}");
    expect_end();
    return out;
  }

  SPProgram sp_program() {
    SPProgram out;
    while (at("def")) {
      next();
      const Token& name_token = peek();
      TargetProcName x{name("procedure name"), ProcessName()};
      expect("@");
      x.process = name("process name");
      if (out.procedures.entries().count(x) != 0) {
        throw ParseError("procedure " + to_string(x) + " is defined twice", name_token.span, {});
      }
      expect("{");
      Behaviour b = behaviour();
      expect("}");
      out.procedures.define(x, std::move(b));
    }
    if (peek().kind == TokenKind::kEnd) return out;
    std::set<ProcessName> seen;
    Network::Entries entries;
    do {
      const Token& name_token = peek();
      const ProcessName p = name("process name");
      if (!seen.insert(p).second) {
        throw ParseError("process " + p.str() + " appears twice in the network", name_token.span,
                         {});
      }
      expect("[");
      entries.emplace(p, behaviour());
      expect("]");
    } while (accept("|"));
    expect_end();
    out.network = Network::from_entries(entries);
    return out;
  }

 private:
  // --- token plumbing ------------------------------------------------------

  const Token& peek(std::size_t ahead = 0) const {
    return tokens_[std::min(index_ + ahead, tokens_.size() - 1)];
  }

  const Token& next() {
    const Token& t = tokens_[index_];
    if (index_ + 1 < tokens_.size()) ++index_;
    last_end_ = t.span.end;
    return t;
  }

  bool at(std::string_view text, std::size_t ahead = 0) const {
    const Token& t = peek(ahead);
    return (t.kind == TokenKind::kPunct || t.kind == TokenKind::kName) && t.text == text;
  }

  bool accept(std::string_view text) {
    if (!at(text)) return false;
    next();
    return true;
  }

  [[noreturn]] void fail(std::vector<std::string> expected) const {
    const Token& t = peek();
    const std::string found = t.kind == TokenKind::kEnd ? "end of input" : quoted(t.text);
    const std::string message = "expected " + describe(expected) + ", found " + found;
    throw ParseError(message, t.span, std::move(expected));
  }

  void expect(std::string_view text) {
    if (!accept(text)) fail({quoted(std::string(text))});
  }

  void expect_end() {
    if (peek().kind != TokenKind::kEnd) fail({"end of input"});
  }

  std::string name(const std::string& what) {
    const Token& t = peek();
    if (t.kind != TokenKind::kName || kKeywords.count(t.text) != 0) fail({what});
    return next().text;
  }

  Ann annotation() {
    if (!accept("@")) return {};
    if (peek().kind != TokenKind::kString) fail({"string"});
    return next().text;
  }

  SelLabel sel_label() {
    if (accept("left")) return SelLabel::kLeft;
    if (accept("right")) return SelLabel::kRight;
    fail({"'left'", "'right'"});
  }

  // --- expressions ---------------------------------------------------------

  Expr expression() {
    Expr e = term();
    while (accept("+")) e = expr::plus(std::move(e), term());
    return e;
  }

  Expr unary_arg() {
    expect("(");
    Expr e = expression();
    expect(")");
    return e;
  }

  Expr term() {
    const Token& t = peek();
    if (t.kind == TokenKind::kNumber) {
      Nat n = 0;
      for (char c : t.text) {
        const Nat digit = static_cast<Nat>(c - '0');
        if (n > (std::numeric_limits<Nat>::max() - digit) / 10) {
          throw ParseError("number out of range", t.span, {});
        }
        n = n * 10 + digit;
      }
      next();
      return expr::lit(n);
    }
    if (accept("succ")) return expr::succ(unary_arg());
    if (accept("fst")) return expr::fst(unary_arg());
    if (accept("snd")) return expr::snd(unary_arg());
    if (accept("(")) {
      Expr e = expression();
      if (accept(",")) {
        Expr second = expression();
        expect(")");
        return expr::pair(std::move(e), std::move(second));
      }
      expect(")");
      return e;
    }
    if (t.kind == TokenKind::kName && kKeywords.count(t.text) == 0) {
      return expr::var(next().text);
    }
    fail({"expression"});
  }

  BExpr condition() {
    BExpr b = condition_unary();
    while (accept("&&")) b = bexpr::conj(std::move(b), condition_unary());
    return b;
  }

  BExpr condition_unary() {
    if (accept("!")) return bexpr::negate(condition_unary());
    return condition_atom();
  }

  BExpr condition_atom() {
    if (accept("true")) return bexpr::truth();
    if (accept("false")) return bexpr::falsity();
    if (at("(")) {
      // "(" opens either a parenthesised condition or an expression.
      const std::size_t saved = index_;
      const SourcePos saved_end = last_end_;
      try {
        next();
        BExpr b = condition();
        expect(")");
        return b;
      } catch (const ParseError&) {
        index_ = saved;
        last_end_ = saved_end;
      }
    }
    Expr lhs = expression();
    if (accept("==")) return bexpr::eq(std::move(lhs), expression());
    if (accept("<=")) return bexpr::leq(std::move(lhs), expression());
    fail({"'=='", "'<='"});
  }

  // --- choreographies ------------------------------------------------------

  Choreography chor(const std::optional<ProcName>& proc, Path& path,
                    std::map<Location, Span>& spans) {
    const SourcePos start = peek().span.begin;
    Choreography c = chor_node(proc, path, spans);
    spans[Location{proc, path}] = Span{start, last_end_};
    return c;
  }

  Choreography descend(PathStep step, const std::optional<ProcName>& proc, Path& path,
                       std::map<Location, Span>& spans) {
    path.push_back(step);
    Choreography c = chor(proc, path, spans);
    path.pop_back();
    return c;
  }

  Choreography chor_node(const std::optional<ProcName>& proc, Path& path,
                         std::map<Location, Span>& spans) {
    if (accept("end")) return chor::end();
    if (accept("call")) return chor::call(name("procedure name"));
    if (at("rt_call")) {
      throw ParseError("runtime calls cannot appear in source programs", peek().span, {});
    }
    if (accept("if")) {
      const ProcessName p = name("process name");
      expect(".");
      BExpr b = condition();
      expect("then");
      expect("{");
      Choreography then_branch = descend(PathStep::kThen, proc, path, spans);
      expect("}");
      expect("else");
      expect("{");
      Choreography else_branch = descend(PathStep::kElse, proc, path, spans);
      expect("}");
      return chor::cond(p, std::move(b), std::move(then_branch), std::move(else_branch));
    }
    if (peek().kind != TokenKind::kName || kKeywords.count(peek().text) != 0) {
      fail({"'end'", "'call'", "'if'", "interaction"});
    }
    const ProcessName p = name("process name");
    Eta eta;
    if (accept(".")) {
      Expr e = expression();
      expect("->");
      const ProcessName q = name("process name");
      expect(".");
      eta = Com{p, std::move(e), q, name("variable name")};
    } else if (accept("->")) {
      const ProcessName q = name("process name");
      expect("[");
      const SelLabel l = sel_label();
      expect("]");
      eta = Sel{p, q, l};
    } else {
      fail({"'.'", "'->'"});
    }
    Ann ann = annotation();
    expect(";");
    Choreography cont = descend(PathStep::kCont, proc, path, spans);
    return chor::interaction(std::move(eta), std::move(ann), std::move(cont));
  }

  // --- behaviours ----------------------------------------------------------

  Behaviour behaviour() {
    if (accept("end")) return beh::end();
    if (accept("call")) {
      TargetProcName x{name("procedure name"), ProcessName()};
      expect("@");
      x.process = name("process name");
      return beh::call(std::move(x));
    }
    if (accept("if")) {
      BExpr b = condition();
      expect("then");
      expect("{");
      Behaviour then_branch = behaviour();
      expect("}");
      expect("else");
      expect("{");
      Behaviour else_branch = behaviour();
      expect("}");
      return beh::cond(std::move(b), std::move(then_branch), std::move(else_branch));
    }
    if (peek().kind != TokenKind::kName || kKeywords.count(peek().text) != 0) {
      fail({"'end'", "'call'", "'if'", "action"});
    }
    const ProcessName q = name("process name");
    if (accept("!")) {
      Expr e = expression();
      Ann ann = annotation();
      expect(";");
      return beh::send(q, std::move(e), behaviour(), std::move(ann));
    }
    if (accept("?")) {
      const VarName x = name("variable name");
      Ann ann = annotation();
      expect(";");
      return beh::recv(q, x, behaviour(), std::move(ann));
    }
    if (accept("(+)")) {
      const SelLabel l = sel_label();
      Ann ann = annotation();
      expect(";");
      return beh::choose(q, l, behaviour(), std::move(ann));
    }
    if (accept("&")) {
      expect("{");
      std::optional<beh::Offer> slots[2];
      if (!at("}")) {
        do {
          const Token& label_token = peek();
          const SelLabel l = sel_label();
          auto& slot = slots[l == SelLabel::kLeft ? 0 : 1];
          if (slot) throw ParseError("label offered twice", label_token.span, {});
          Ann ann = annotation();
          expect(":");
          slot = beh::offer(behaviour(), std::move(ann));
        } while (accept("|"));
      }
      expect("}");
      return beh::branch(q, std::move(slots[0]), std::move(slots[1]));
    }
    fail({"'!'", "'?'", "'(+)'", "'&'"});
  }

  std::vector<Token> tokens_;
  std::size_t index_ = 0;
  SourcePos last_end_;
};

}  // namespace

CCSource parse_cc_source(std::string_view text) { return Parser(text).cc_program(); }

CCProgram parse_cc(std::string_view text) { return parse_cc_source(text).program; }

SPProgram parse_sp(std::string_view text) { return Parser(text).sp_program(); }

// ---------------------------------------------------------------------------
// Printers

namespace {

std::string print_ann(const Ann& a) {
  if (a.empty()) return {};
  std::string out = " @\"";
  for (char c : a) {
    if (c == '"' || c == '\\') out += '\\';
    if (c == '\n') {
      out += "\\n";
      continue;
    }
    out += c;
  }
  return out + "\"";
}

std::string join(const std::vector<ProcessName>& ps) {
  std::string out;
  for (const auto& p : ps) out += (out.empty() ? "" : ", ") + p.str();
  return out;
}

}  // namespace

std::string print_expr(const Expr& e) {
  return std::visit(
      overloaded{
          [](const expr::Lit& x) { return std::to_string(x.value); },
          [](const expr::Var& x) { return x.name.str(); },
          [](const expr::Succ& x) { return "succ(" + print_expr(*x.arg) + ")"; },
          [](const expr::Plus& x) {
            std::string rhs = print_expr(*x.rhs);
            if (std::holds_alternative<expr::Plus>(x.rhs->node)) rhs = "(" + rhs + ")";
            return print_expr(*x.lhs) + " + " + rhs;
          },
          [](const expr::Pair& x) {
            return "(" + print_expr(*x.first) + ", " + print_expr(*x.second) + ")";
          },
          [](const expr::Fst& x) { return "fst(" + print_expr(*x.arg) + ")"; },
          [](const expr::Snd& x) { return "snd(" + print_expr(*x.arg) + ")"; },
      },
      e.node);
}

std::string print_bexpr(const BExpr& b) {
  return std::visit(
      overloaded{
          [](const bexpr::Eq& x) { return print_expr(x.lhs) + " == " + print_expr(x.rhs); },
          [](const bexpr::Leq& x) { return print_expr(x.lhs) + " <= " + print_expr(x.rhs); },
          [](const bexpr::Not& x) {
            const auto& n = x.arg->node;
            const bool bare = std::holds_alternative<bexpr::True>(n) ||
                              std::holds_alternative<bexpr::False>(n) ||
                              std::holds_alternative<bexpr::Not>(n);
            return bare ? "!" + print_bexpr(*x.arg) : "!(" + print_bexpr(*x.arg) + ")";
          },
          [](const bexpr::And& x) {
            std::string rhs = print_bexpr(*x.rhs);
            if (std::holds_alternative<bexpr::And>(x.rhs->node)) rhs = "(" + rhs + ")";
            return print_bexpr(*x.lhs) + " && " + rhs;
          },
          [](const bexpr::True&) { return std::string("true"); },
          [](const bexpr::False&) { return std::string("false"); },
      },
      b.node);
}

std::string print_chor(const Choreography& c, std::size_t indent) {
  const std::string pad(2 * indent, ' ');
  return std::visit(
      overloaded{
          [&](const chor::Interaction& i) {
            std::string eta = std::visit(
                overloaded{
                    [](const Com& x) {
                      return x.sender.str() + "." + print_expr(x.expr) + " -> " +
                             x.receiver.str() + "." + x.var.str();
                    },
                    [](const Sel& x) {
                      return x.sender.str() + " -> " + x.receiver.str() + "[" +
                             std::string(to_string(x.label)) + "]";
                    },
                },
                i.eta);
            return pad + eta + print_ann(i.ann) + ";\n" + print_chor(*i.cont, indent);
          },
          [&](const chor::Cond& k) {
            return pad + "if " + k.at.str() + "." + print_bexpr(k.guard) + " then {\n" +
                   print_chor(*k.then_branch, indent + 1) + pad + "} else {\n" +
                   print_chor(*k.else_branch, indent + 1) + pad + "}\n";
          },
          [&](const chor::Call& k) { return pad + "call " + k.procedure.str() + "\n"; },
          [&](const chor::RTCall& k) {
            return pad + "rt_call " + k.procedure.str() + " [" + join(k.pending) + "] {\n" +
                   print_chor(*k.body, indent + 1) + pad + "}\n";
          },
          [&](const chor::End&) { return pad + "end\n"; },
      },
      c.node);
}

std::string print_cc(const CCProgram& p) {
  std::string out;
  for (const auto& [x, proc] : p.procedures.explicit_entries()) {
    out += "def " + x.str() + "(" + join(proc.params) + ") {\n" + print_chor(proc.body, 1) +
           "}\n\n";
  }
  return out + "main {\n" + print_chor(p.main, 1) + "}\n";
}

std::string print_behaviour(const Behaviour& b) {
  auto offer = [](const char* label, const std::optional<beh::Offer>& o) {
    return std::string(label) + print_ann(o->ann) + ": " + print_behaviour(*o->body);
  };
  return std::visit(
      overloaded{
          [](const beh::End&) { return std::string("end"); },
          [](const beh::Send& x) {
            return x.to.str() + "!" + print_expr(x.expr) + print_ann(x.ann) + "; " +
                   print_behaviour(*x.cont);
          },
          [](const beh::Recv& x) {
            return x.from.str() + "?" + x.var.str() + print_ann(x.ann) + "; " +
                   print_behaviour(*x.cont);
          },
          [](const beh::Choose& x) {
            return x.to.str() + " (+) " + std::string(to_string(x.label)) + print_ann(x.ann) +
                   "; " + print_behaviour(*x.cont);
          },
          [&](const beh::Branch& x) {
            std::string slots;
            if (x.left) slots = offer("left", x.left);
            if (x.right) slots += (slots.empty() ? "" : " | ") + offer("right", x.right);
            return x.from.str() + " & {" + slots + "}";
          },
          [](const beh::Cond& x) {
            return "if " + print_bexpr(x.guard) + " then {" + print_behaviour(*x.then_branch) +
                   "} else {" + print_behaviour(*x.else_branch) + "}";
          },
          [](const beh::Call& x) { return "call " + to_string(x.procedure); },
      },
      b.node);
}

std::string print_network(const Network& n) {
  std::string out;
  for (const auto& [p, b] : n.entries()) {
    out += (out.empty() ? "" : "| ") + p.str() + "[" + print_behaviour(b) + "]\n";
  }
  return out;
}

std::string print_sp(const SPProgram& p) {
  std::string out;
  for (const auto& [x, b] : p.procedures.entries()) {
    out += "def " + to_string(x) + " { " + print_behaviour(b) + " }\n";
  }
  if (!out.empty() && !p.network.empty()) out += "\n";
  return out + print_network(p.network);
}

}  // namespace chorus
