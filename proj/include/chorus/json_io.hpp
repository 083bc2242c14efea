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

// JSON encodings of values, stores, labels and reports.
//
// A value is a number or a two-element array. A store is an object keyed
// "process.variable"; the process name ends at the first '.'.

#ifndef CHORUS_JSON_IO_HPP_
#define CHORUS_JSON_IO_HPP_

#include <stdexcept>

#include "chorus/labels.hpp"
#include "chorus/verify.hpp"
#include "json.hpp"

namespace chorus {

using Json = nlohmann::ordered_json;

class JsonFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Json value_to_json(const Value& v);
Value value_from_json(const Json& j);

Json state_to_json(const State& s);
State state_from_json(const Json& j);

Json label_to_json(const TransitionLabel& tl);
Json rich_to_json(const RichLabel& rl);
Json rich_to_json(const SPRichLabel& rl);

Json report_to_json(const VerifyReport& r);

}  // namespace chorus

#endif  // CHORUS_JSON_IO_HPP_
