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

#include "chorus/json_io.hpp"

#include "chorus/overloaded.hpp"

namespace chorus {

Json value_to_json(const Value& v) {
  if (!v.is_pair()) return v.numeric();
  return Json::array({value_to_json(v.first()), value_to_json(v.second())});
}

Value value_from_json(const Json& j) {
  if (j.is_number_unsigned()) return Value::nat(j.get<Nat>());
  if (j.is_number_integer()) {
    if (j.get<std::int64_t>() < 0) throw JsonFormatError("values are natural numbers");
    return Value::nat(static_cast<Nat>(j.get<std::int64_t>()));
  }
  if (j.is_array() && j.size() == 2) {
    return Value::pair(value_from_json(j[0]), value_from_json(j[1]));
  }
  throw JsonFormatError("a value is a natural number or a two-element array, got " + j.dump());
}

Json state_to_json(const State& s) {
  Json out = Json::object();
  for (const auto& [key, v] : s.entries()) {
    out[key.first.str() + "." + key.second.str()] = value_to_json(v);
  }
  return out;
}

State state_from_json(const Json& j) {
  if (!j.is_object()) throw JsonFormatError("a state is a JSON object");
  State::Entries entries;
  for (const auto& [key, v] : j.items()) {
    const auto dot = key.find('.');
    if (dot == std::string::npos || dot == 0 || dot + 1 == key.size()) {
      throw JsonFormatError("state keys have the form \"process.variable\", got \"" + key + "\"");
    }
    entries[{ProcessName(key.substr(0, dot)), VarName(key.substr(dot + 1))}] = value_from_json(v);
  }
  return State::from_entries(entries);
}

Json label_to_json(const TransitionLabel& tl) {
  return std::visit(
      overloaded{
          [](const observable::Com& c) {
            return Json{{"kind", "com"},
                        {"from", c.from.str()},
                        {"to", c.to.str()},
                        {"value", value_to_json(c.value)}};
          },
          [](const observable::Sel& c) {
            return Json{{"kind", "sel"},
                        {"from", c.from.str()},
                        {"to", c.to.str()},
                        {"sel", std::string(to_string(c.label))}};
          },
          [](const observable::Tau& c) { return Json{{"kind", "tau"}, {"at", c.at.str()}}; },
      },
      tl.kind);
}

namespace {

Json call_target(const ProcName& x) { return Json{{"procedure", x.str()}}; }
Json call_target(const TargetProcName& x) {
  return Json{{"procedure", x.procedure.str()}, {"process", x.process.str()}};
}

template <class Target>
Json rich_json(const BasicRichLabel<Target>& rl) {
  return std::visit(
      overloaded{
          [](const rich::Com& c) {
            return Json{{"kind", "com"},
                        {"from", c.from.str()},
                        {"to", c.to.str()},
                        {"value", value_to_json(c.value)},
                        {"var", c.var.str()}};
          },
          [](const rich::Sel& c) {
            return Json{{"kind", "sel"},
                        {"from", c.from.str()},
                        {"to", c.to.str()},
                        {"sel", std::string(to_string(c.label))}};
          },
          [](const rich::Cond& c) { return Json{{"kind", "cond"}, {"at", c.at.str()}}; },
          [](const rich::Call<Target>& c) {
            Json out{{"kind", "call"}};
            out["target"] = call_target(c.procedure);
            out["at"] = c.at.str();
            return out;
          },
      },
      rl.kind);
}

}  // namespace

Json rich_to_json(const RichLabel& rl) { return rich_json(rl); }
Json rich_to_json(const SPRichLabel& rl) { return rich_json(rl); }

Json report_to_json(const VerifyReport& r) {
  Json trace = Json::array();
  for (const TraceEntry& e : r.trace) {
    Json entry{{"label", label_to_json(e.label)}};
    if (e.cc) entry["cc"] = rich_to_json(*e.cc);
    if (e.sp) entry["sp"] = rich_to_json(*e.sp);
    trace.push_back(std::move(entry));
  }
  Json out{{"property", r.property},
           {"passed", r.passed},
           {"nodes_explored", r.nodes_explored}};
  if (!r.passed) out["counterexample"] = std::move(trace);
  if (!r.message.empty()) out["message"] = r.message;
  return out;
}

}  // namespace chorus
