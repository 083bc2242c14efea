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

// Names, values, expressions and process stores shared by the choreography
// and process languages.

#ifndef CHORUS_FOUNDATION_HPP_
#define CHORUS_FOUNDATION_HPP_

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <variant>

#include "chorus/box.hpp"

namespace chorus {

/// Strongly typed identifier. Distinct tags do not convert into each other.
template <class Tag>
class Name {
 public:
  Name() = default;
  // NOLINTNEXTLINE(google-explicit-constructor)
  Name(std::string text) : text_(std::move(text)) {}
  // NOLINTNEXTLINE(google-explicit-constructor)
  Name(const char* text) : text_(text) {}

  const std::string& str() const { return text_; }

  friend bool operator==(const Name&, const Name&) = default;
  friend std::strong_ordering operator<=>(const Name& a, const Name& b) {
    return a.text_.compare(b.text_) <=> 0;
  }

 private:
  std::string text_;
};

struct ProcessTag;
struct VarTag;
struct ProcTag;

using ProcessName = Name<ProcessTag>;
using VarName = Name<VarTag>;
using ProcName = Name<ProcTag>;

using ProcessSet = std::set<ProcessName>;

/// Procedure name in a projected program: one copy per participating process.
struct TargetProcName {
  ProcName procedure;
  ProcessName process;

  friend bool operator==(const TargetProcName&, const TargetProcName&) = default;
  friend std::strong_ordering operator<=>(const TargetProcName&,
                                          const TargetProcName&) = default;
};

enum class SelLabel { kLeft, kRight };

std::string_view to_string(SelLabel label);

/// Opaque annotation text; never inspected by the semantics.
using Ann = std::string;

using Nat = std::uint64_t;

struct ValuePair;

/// A natural number or a pair of values.
class Value {
 public:
  Value() : data_(Nat{0}) {}
  static Value nat(Nat n) { return Value(Data(n)); }
  static Value pair(Value left, Value right);

  bool is_pair() const { return std::holds_alternative<Box<ValuePair>>(data_); }
  /// Numeric reading: the number itself, or the left-most leaf of a pair.
  Nat numeric() const;
  /// Components of a pair; a non-pair projects to itself.
  const Value& first() const;
  const Value& second() const;

  friend bool operator==(const Value&, const Value&) = default;
  friend std::strong_ordering operator<=>(const Value&, const Value&) = default;

 private:
  using Data = std::variant<Nat, Box<ValuePair>>;
  explicit Value(Data data) : data_(std::move(data)) {}
  Data data_;
};

struct ValuePair {
  Value left;
  Value right;

  friend bool operator==(const ValuePair&, const ValuePair&) = default;
  friend std::strong_ordering operator<=>(const ValuePair&, const ValuePair&) = default;
};

std::string to_string(const Value& value);

// ---------------------------------------------------------------------------
// Expressions

struct Expr;

namespace expr {

struct Lit {
  Nat value;
  friend bool operator==(const Lit&, const Lit&) = default;
  friend std::strong_ordering operator<=>(const Lit&, const Lit&) = default;
};
struct Var {
  VarName name;
  friend bool operator==(const Var&, const Var&) = default;
  friend std::strong_ordering operator<=>(const Var&, const Var&) = default;
};
struct Succ {
  Box<Expr> arg;
  friend bool operator==(const Succ&, const Succ&) = default;
  friend std::strong_ordering operator<=>(const Succ&, const Succ&) = default;
};
struct Plus {
  Box<Expr> lhs;
  Box<Expr> rhs;
  friend bool operator==(const Plus&, const Plus&) = default;
  friend std::strong_ordering operator<=>(const Plus&, const Plus&) = default;
};
struct Pair {
  Box<Expr> first;
  Box<Expr> second;
  friend bool operator==(const Pair&, const Pair&) = default;
  friend std::strong_ordering operator<=>(const Pair&, const Pair&) = default;
};
struct Fst {
  Box<Expr> arg;
  friend bool operator==(const Fst&, const Fst&) = default;
  friend std::strong_ordering operator<=>(const Fst&, const Fst&) = default;
};
struct Snd {
  Box<Expr> arg;
  friend bool operator==(const Snd&, const Snd&) = default;
  friend std::strong_ordering operator<=>(const Snd&, const Snd&) = default;
};

}  // namespace expr

struct Expr {
  using Node = std::variant<expr::Lit, expr::Var, expr::Succ, expr::Plus,
                            expr::Pair, expr::Fst, expr::Snd>;
  Node node;

  friend bool operator==(const Expr&, const Expr&) = default;
  friend std::strong_ordering operator<=>(const Expr&, const Expr&) = default;
};

namespace expr {
Expr lit(Nat value);
Expr var(VarName name);
Expr succ(Expr arg);
Expr plus(Expr lhs, Expr rhs);
Expr pair(Expr first, Expr second);
Expr fst(Expr arg);
Expr snd(Expr arg);
}  // namespace expr

struct BExpr;

namespace bexpr {

struct Eq {
  Expr lhs;
  Expr rhs;
  friend bool operator==(const Eq&, const Eq&) = default;
  friend std::strong_ordering operator<=>(const Eq&, const Eq&) = default;
};
struct Leq {
  Expr lhs;
  Expr rhs;
  friend bool operator==(const Leq&, const Leq&) = default;
  friend std::strong_ordering operator<=>(const Leq&, const Leq&) = default;
};
struct Not {
  Box<BExpr> arg;
  friend bool operator==(const Not&, const Not&) = default;
  friend std::strong_ordering operator<=>(const Not&, const Not&) = default;
};
struct And {
  Box<BExpr> lhs;
  Box<BExpr> rhs;
  friend bool operator==(const And&, const And&) = default;
  friend std::strong_ordering operator<=>(const And&, const And&) = default;
};
struct True {
  friend bool operator==(const True&, const True&) = default;
  friend std::strong_ordering operator<=>(const True&, const True&) = default;
};
struct False {
  friend bool operator==(const False&, const False&) = default;
  friend std::strong_ordering operator<=>(const False&, const False&) = default;
};

}  // namespace bexpr

struct BExpr {
  using Node = std::variant<bexpr::Eq, bexpr::Leq, bexpr::Not, bexpr::And,
                            bexpr::True, bexpr::False>;
  Node node;

  friend bool operator==(const BExpr&, const BExpr&) = default;
  friend std::strong_ordering operator<=>(const BExpr&, const BExpr&) = default;
};

namespace bexpr {
BExpr eq(Expr lhs, Expr rhs);
BExpr leq(Expr lhs, Expr rhs);
BExpr negate(BExpr arg);
BExpr conj(BExpr lhs, BExpr rhs);
BExpr truth();
BExpr falsity();
}  // namespace bexpr

/// Total variable environment of a single process.
using Env = std::function<Value(const VarName&)>;

Value eval_expr(const Expr& e, const Env& env);
bool eval_bexpr(const BExpr& b, const Env& env);

// ---------------------------------------------------------------------------
// State

/// Memory of all processes: a total map (process, variable) -> value.
///
/// Unmapped keys read as natural 0. The representation is canonical: no
/// entry ever stores the default, so structural equality is extensional
/// equality.
class State {
 public:
  using Key = std::pair<ProcessName, VarName>;
  using Entries = std::map<Key, Value>;

  State() = default;
  /// Builds a state from arbitrary entries, pruning explicit defaults.
  static State from_entries(const Entries& entries);
  static const Value& default_value();

  const Value& lookup(const ProcessName& p, const VarName& x) const;
  State updated(const ProcessName& p, const VarName& x, Value v) const;
  const Entries& entries() const { return entries_; }
  /// Environment of process `p` over this state.
  Env env_of(const ProcessName& p) const;

  friend bool operator==(const State&, const State&) = default;
  friend std::strong_ordering operator<=>(const State& a, const State& b) {
    return a.entries_ <=> b.entries_;
  }

 private:
  Entries entries_;
};

State state_update(const State& s, const ProcessName& p, const VarName& x, Value v);
bool state_eq(const State& a, const State& b);

Value eval_on_state(const Expr& e, const State& s, const ProcessName& p);
bool eval_on_state(const BExpr& b, const State& s, const ProcessName& p);

}  // namespace chorus

#endif  // CHORUS_FOUNDATION_HPP_
