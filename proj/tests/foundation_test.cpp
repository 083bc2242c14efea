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

#include <gtest/gtest.h>

#include "chorus/foundation.hpp"

namespace chorus {
namespace {

using namespace expr;   // NOLINT(build/namespaces)
using namespace bexpr;  // NOLINT(build/namespaces)

TEST(ValueTest, PairsCompareStructurally) {
  const Value a = Value::pair(Value::nat(1), Value::nat(2));
  EXPECT_EQ(a, Value::pair(Value::nat(1), Value::nat(2)));
  EXPECT_NE(a, Value::pair(Value::nat(2), Value::nat(1)));
  EXPECT_NE(a, Value::nat(1));
  EXPECT_EQ(to_string(a), "(1,2)");
}

TEST(ValueTest, NumericReadsTheLeftmostLeaf) {
  const Value v = Value::pair(Value::pair(Value::nat(3), Value::nat(4)), Value::nat(5));
  EXPECT_EQ(v.numeric(), 3u);
  EXPECT_EQ(Value::nat(9).numeric(), 9u);
}

TEST(EvalTest, ArithmeticAndProjections) {
  State s = State().updated("p", "x", Value::pair(Value::nat(4), Value::nat(5)));
  EXPECT_EQ(eval_on_state(fst(var("x")), s, "p"), Value::nat(4));
  EXPECT_EQ(eval_on_state(snd(var("x")), s, "p"), Value::nat(5));
  EXPECT_EQ(eval_on_state(succ(fst(var("x"))), s, "p"), Value::nat(5));
  EXPECT_EQ(eval_on_state(plus(lit(2), lit(3)), s, "p"), Value::nat(5));
  // Projections of a number return the number.
  EXPECT_EQ(eval_on_state(fst(lit(7)), s, "p"), Value::nat(7));
  EXPECT_EQ(eval_on_state(snd(lit(7)), s, "p"), Value::nat(7));
}

TEST(EvalTest, VariablesAreLocalToTheEvaluatingProcess) {
  State s = State().updated("p", "x", Value::nat(3));
  EXPECT_EQ(eval_on_state(var("x"), s, "p"), Value::nat(3));
  EXPECT_EQ(eval_on_state(var("x"), s, "q"), Value::nat(0));
}

TEST(EvalTest, BooleanConnectives) {
  State s = State().updated("p", "x", Value::nat(2));
  EXPECT_TRUE(eval_on_state(eq(var("x"), lit(2)), s, "p"));
  EXPECT_TRUE(eval_on_state(leq(var("x"), lit(2)), s, "p"));
  EXPECT_FALSE(eval_on_state(leq(lit(3), var("x")), s, "p"));
  EXPECT_TRUE(eval_on_state(conj(truth(), negate(falsity())), s, "p"));
  EXPECT_FALSE(eval_on_state(conj(truth(), falsity()), s, "p"));
  EXPECT_TRUE(eval_on_state(eq(pair(lit(1), lit(2)), pair(lit(1), lit(2))), s, "p"));
}

TEST(StateTest, DefaultsArePruned) {
  State s = State().updated("p", "x", Value::nat(3)).updated("p", "x", Value::nat(0));
  EXPECT_EQ(s, State());
  EXPECT_TRUE(s.entries().empty());
  EXPECT_TRUE(state_eq(State::from_entries({{{"p", "y"}, Value::nat(0)}}), State()));
}

TEST(StateTest, UpdateOverwritesOneKey) {
  State s = state_update(State(), "p", "x", Value::nat(1));
  s = state_update(s, "q", "x", Value::nat(2));
  s = state_update(s, "p", "x", Value::nat(5));
  EXPECT_EQ(s.lookup("p", "x"), Value::nat(5));
  EXPECT_EQ(s.lookup("q", "x"), Value::nat(2));
  EXPECT_EQ(s.entries().size(), 2u);
}

TEST(StateTest, InsertionOrderDoesNotMatter) {
  State a = State().updated("p", "x", Value::nat(1)).updated("q", "y", Value::nat(2));
  State b = State().updated("q", "y", Value::nat(2)).updated("p", "x", Value::nat(1));
  EXPECT_TRUE(state_eq(a, b));
}

}  // namespace
}  // namespace chorus
