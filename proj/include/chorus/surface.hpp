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

// Concrete syntax of both languages.
//
// Choreographies:
//
//   program := procdef* "main" "{" chor "}"
//   procdef := "def" NAME "(" NAME ("," NAME)* ")" "{" chor "}"
//   chor    := eta annot? ";" chor | cond | "call" NAME | "end"
//   cond    := "if" NAME "." bexpr "then" "{" chor "}" "else" "{" chor "}"
//   eta     := NAME "." expr "->" NAME "." NAME
//            | NAME "->" NAME "[" ("left" | "right") "]"
//   annot   := "@" STRING
//
// Processes:
//
//   program := ("def" NAME "@" NAME "{" beh "}")* (entry ("|" entry)*)?
//   entry   := NAME "[" beh "]"
//   beh     := "end" | "call" NAME "@" NAME
//            | NAME "!" expr annot? ";" beh
//            | NAME "?" NAME annot? ";" beh
//            | NAME "(+)" ("left" | "right") annot? ";" beh
//            | NAME "&" "{" (offer ("|" offer)*)? "}"
//            | "if" bexpr "then" "{" beh "}" "else" "{" beh "}"
//   offer   := ("left" | "right") annot? ":" beh
//
// Expressions are `e + e`, `succ(e)`, `fst(e)`, `snd(e)`, `(e, e)`, `(e)`,
// numbers and variables; conditions are `b && b`, `!b`, `true`, `false`,
// `(b)`, `e == e` and `e <= e`. `#` starts a comment.
//
// Runtime calls print as `rt_call X [p, q] { ... }` but cannot be parsed.

#ifndef CHORUS_SURFACE_HPP_
#define CHORUS_SURFACE_HPP_

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "chorus/cc_syntax.hpp"
#include "chorus/sp_syntax.hpp"

namespace chorus {

struct SourcePos {
  std::size_t line = 1;  // 1-based
  std::size_t column = 1;
  std::size_t offset = 0;
};

struct Span {
  SourcePos begin;
  SourcePos end;  // one past the last character
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, Span span, std::vector<std::string> expected);

  const Span& span() const { return span_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  Span span_;
  std::vector<std::string> expected_;
};

/// A parsed choreographic program with the source range of every subterm.
struct CCSource {
  CCProgram program;
  std::vector<ProcName> declared;  // names of the `def`s, in source order
  std::map<Location, Span> spans;
};

CCSource parse_cc_source(std::string_view text);
CCProgram parse_cc(std::string_view text);
SPProgram parse_sp(std::string_view text);

std::string print_expr(const Expr& e);
std::string print_bexpr(const BExpr& b);
std::string print_chor(const Choreography& c, std::size_t indent = 0);
std::string print_cc(const CCProgram& p);
std::string print_behaviour(const Behaviour& b);
std::string print_network(const Network& n);
std::string print_sp(const SPProgram& p);

}  // namespace chorus

#endif  // CHORUS_SURFACE_HPP_
