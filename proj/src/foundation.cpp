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

#include "chorus/foundation.hpp"

#include "chorus/overloaded.hpp"

namespace chorus {

std::string_view to_string(SelLabel label) {
  return label == SelLabel::kLeft ? "left" : "right";
}

Value Value::pair(Value left, Value right) {
  return Value(Data(Box<ValuePair>(ValuePair{std::move(left), std::move(right)})));
}

Nat Value::numeric() const {
  const Value* v = this;
  while (v->is_pair()) v = &std::get<Box<ValuePair>>(v->data_)->left;
  return std::get<Nat>(v->data_);
}

const Value& Value::first() const {
  if (!is_pair()) return *this;
  return std::get<Box<ValuePair>>(data_)->left;
}

const Value& Value::second() const {
  if (!is_pair()) return *this;
  return std::get<Box<ValuePair>>(data_)->right;
}

std::string to_string(const Value& value) {
  if (!value.is_pair()) return std::to_string(value.numeric());
  return "(" + to_string(value.first()) + "," + to_string(value.second()) + ")";
}

namespace expr {
Expr lit(Nat value) { return Expr{Lit{value}}; }
Expr var(VarName name) { return Expr{Var{std::move(name)}}; }
Expr succ(Expr arg) { return Expr{Succ{std::move(arg)}}; }
Expr plus(Expr lhs, Expr rhs) { return Expr{Plus{std::move(lhs), std::move(rhs)}}; }
Expr pair(Expr first, Expr second) {
  return Expr{Pair{std::move(first), std::move(second)}};
}
Expr fst(Expr arg) { return Expr{Fst{std::move(arg)}}; }
Expr snd(Expr arg) { return Expr{Snd{std::move(arg)}}; }
}  // namespace expr

namespace bexpr {
BExpr eq(Expr lhs, Expr rhs) { return BExpr{Eq{std::move(lhs), std::move(rhs)}}; }
BExpr leq(Expr lhs, Expr rhs) { return BExpr{Leq{std::move(lhs), std::move(rhs)}}; }
BExpr negate(BExpr arg) { return BExpr{Not{std::move(arg)}}; }
BExpr conj(BExpr lhs, BExpr rhs) { return BExpr{And{std::move(lhs), std::move(rhs)}}; }
BExpr truth() { return BExpr{True{}}; }
BExpr falsity() { return BExpr{False{}}; }
}  // namespace bexpr

Value eval_expr(const Expr& e, const Env& env) {
  return std::visit(
      overloaded{
          [](const expr::Lit& n) { return Value::nat(n.value); },
          [&](const expr::Var& v) { return env(v.name); },
          [&](const expr::Succ& s) {
            return Value::nat(eval_expr(*s.arg, env).numeric() + 1);
          },
          [&](const expr::Plus& p) {
            return Value::nat(eval_expr(*p.lhs, env).numeric() +
                              eval_expr(*p.rhs, env).numeric());
          },
          [&](const expr::Pair& p) {
            return Value::pair(eval_expr(*p.first, env), eval_expr(*p.second, env));
          },
          [&](const expr::Fst& f) { return eval_expr(*f.arg, env).first(); },
          [&](const expr::Snd& s) { return eval_expr(*s.arg, env).second(); },
      },
      e.node);
}

bool eval_bexpr(const BExpr& b, const Env& env) {
  return std::visit(
      overloaded{
          [&](const bexpr::Eq& c) { return eval_expr(c.lhs, env) == eval_expr(c.rhs, env); },
          [&](const bexpr::Leq& c) {
            return eval_expr(c.lhs, env).numeric() <= eval_expr(c.rhs, env).numeric();
          },
          [&](const bexpr::Not& n) { return !eval_bexpr(*n.arg, env); },
          [&](const bexpr::And& a) { return eval_bexpr(*a.lhs, env) && eval_bexpr(*a.rhs, env); },
          [](const bexpr::True&) { return true; },
          [](const bexpr::False&) { return false; },
      },
      b.node);
}

const Value& State::default_value() {
  static const Value kZero = Value::nat(0);
  return kZero;
}

State State::from_entries(const Entries& entries) {
  State s;
  for (const auto& [key, value] : entries) {
    if (value != default_value()) s.entries_.emplace(key, value);
  }
  return s;
}

const Value& State::lookup(const ProcessName& p, const VarName& x) const {
  auto it = entries_.find(Key{p, x});
  return it == entries_.end() ? default_value() : it->second;
}

State State::updated(const ProcessName& p, const VarName& x, Value v) const {
  State next = *this;
  if (v == default_value()) {
    next.entries_.erase(Key{p, x});
  } else {
    next.entries_.insert_or_assign(Key{p, x}, std::move(v));
  }
  return next;
}

Env State::env_of(const ProcessName& p) const {
  return [this, p](const VarName& x) { return lookup(p, x); };
}

State state_update(const State& s, const ProcessName& p, const VarName& x, Value v) {
  return s.updated(p, x, std::move(v));
}

bool state_eq(const State& a, const State& b) { return a == b; }

Value eval_on_state(const Expr& e, const State& s, const ProcessName& p) {
  return eval_expr(e, s.env_of(p));
}

bool eval_on_state(const BExpr& b, const State& s, const ProcessName& p) {
  return eval_bexpr(b, s.env_of(p));
}

}  // namespace chorus
