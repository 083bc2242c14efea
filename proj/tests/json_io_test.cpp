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

#include "chorus/json_io.hpp"

namespace chorus {
namespace {

TEST(JsonTest, ValuesRoundTrip) {
  const Value v = Value::pair(Value::nat(1), Value::pair(Value::nat(2), Value::nat(3)));
  EXPECT_EQ(value_to_json(v).dump(), "[1,[2,3]]");
  EXPECT_EQ(value_from_json(value_to_json(v)), v);
  EXPECT_THROW(value_from_json(Json::parse("-1")), JsonFormatError);
  EXPECT_THROW(value_from_json(Json::parse("[1,2,3]")), JsonFormatError);
  EXPECT_THROW(value_from_json(Json::parse("\"1\"")), JsonFormatError);
}

TEST(JsonTest, StatesRoundTrip) {
  const State s = State().updated("ip", "x", Value::nat(7)).updated("c", "t", Value::nat(0));
  EXPECT_EQ(state_to_json(s).dump(), R"({"ip.x":7})");
  EXPECT_EQ(state_from_json(Json::parse(R"({"ip.x": 7, "c.t": 0})")), s);
  EXPECT_THROW(state_from_json(Json::parse(R"({"nodot": 1})")), JsonFormatError);
  EXPECT_THROW(state_from_json(Json::parse("[]")), JsonFormatError);
}

TEST(JsonTest, Labels) {
  EXPECT_EQ(label_to_json(label::t_com("c", Value::nat(5), "ip")).dump(),
            R"({"kind":"com","from":"c","to":"ip","value":5})");
  EXPECT_EQ(label_to_json(label::t_sel("ip", "s", SelLabel::kLeft)).dump(),
            R"({"kind":"sel","from":"ip","to":"s","sel":"left"})");
  EXPECT_EQ(label_to_json(label::t_tau("ip")).dump(), R"({"kind":"tau","at":"ip"})");
  EXPECT_EQ(rich_to_json(label::call("X", "p")).dump(),
            R"({"kind":"call","target":{"procedure":"X"},"at":"p"})");
  EXPECT_EQ(rich_to_json(label::sp_call({"X", "p"}, "p")).dump(),
            R"({"kind":"call","target":{"procedure":"X","process":"p"},"at":"p"})");
  EXPECT_EQ(rich_to_json(label::com("c", Value::nat(5), "ip", "x")).dump(),
            R"({"kind":"com","from":"c","to":"ip","value":5,"var":"x"})");
}

TEST(JsonTest, Reports) {
  VerifyReport r{"complete", false, 3, {TraceEntry{label::t_tau("p"), label::cond("p"), std::nullopt}}, "no match"};
  const Json j = report_to_json(r);
  EXPECT_EQ(j["property"], "complete");
  EXPECT_EQ(j["passed"], false);
  EXPECT_EQ(j["nodes_explored"], 3);
  ASSERT_EQ(j["counterexample"].size(), 1u);
  EXPECT_EQ(j["counterexample"][0]["cc"]["kind"], "cond");
  EXPECT_FALSE(j["counterexample"][0].contains("sp"));
  EXPECT_FALSE(report_to_json(VerifyReport{"sound", true, 1, {}, ""}).contains("counterexample"));
}

}  // namespace
}  // namespace chorus
