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

#include "chorus/labels.hpp"

#include "chorus/overloaded.hpp"

namespace chorus {

namespace label {

RichLabel com(ProcessName p, Value v, ProcessName q, VarName x) {
  return {rich::Com{std::move(p), std::move(v), std::move(q), std::move(x)}};
}
RichLabel sel(ProcessName p, ProcessName q, SelLabel l) {
  return {rich::Sel{std::move(p), std::move(q), l}};
}
RichLabel cond(ProcessName p) { return {rich::Cond{std::move(p)}}; }
RichLabel call(ProcName x, ProcessName p) {
  return {rich::Call<ProcName>{std::move(x), std::move(p)}};
}

SPRichLabel sp_com(ProcessName p, Value v, ProcessName q, VarName x) {
  return {rich::Com{std::move(p), std::move(v), std::move(q), std::move(x)}};
}
SPRichLabel sp_sel(ProcessName p, ProcessName q, SelLabel l) {
  return {rich::Sel{std::move(p), std::move(q), l}};
}
SPRichLabel sp_cond(ProcessName p) { return {rich::Cond{std::move(p)}}; }
SPRichLabel sp_call(TargetProcName x, ProcessName p) {
  return {rich::Call<TargetProcName>{std::move(x), std::move(p)}};
}

TransitionLabel t_com(ProcessName p, Value v, ProcessName q) {
  return {observable::Com{std::move(p), std::move(v), std::move(q)}};
}
TransitionLabel t_sel(ProcessName p, ProcessName q, SelLabel l) {
  return {observable::Sel{std::move(p), std::move(q), l}};
}
TransitionLabel t_tau(ProcessName p) { return {observable::Tau{std::move(p)}}; }

}  // namespace label

std::string to_string(const TransitionLabel& tl) {
  return std::visit(
      overloaded{
          [](const observable::Com& c) {
            return "com(" + c.from.str() + "," + to_string(c.value) + "," + c.to.str() + ")";
          },
          [](const observable::Sel& s) {
            return "sel(" + s.from.str() + "," + s.to.str() + "," +
                   std::string(to_string(s.label)) + ")";
          },
          [](const observable::Tau& t) { return "tau(" + t.at.str() + ")"; },
      },
      tl.kind);
}

std::string to_string(const TargetProcName& x) {
  return x.procedure.str() + "@" + x.process.str();
}

namespace {

std::string call_target(const ProcName& x) { return x.str(); }
std::string call_target(const TargetProcName& x) { return to_string(x); }

template <class Target>
std::string rich_to_string(const BasicRichLabel<Target>& rl) {
  return std::visit(
      overloaded{
          [](const rich::Com& c) {
            return "com(" + c.from.str() + "," + to_string(c.value) + "," + c.to.str() + "," +
                   c.var.str() + ")";
          },
          [](const rich::Sel& s) {
            return "sel(" + s.from.str() + "," + s.to.str() + "," +
                   std::string(to_string(s.label)) + ")";
          },
          [](const rich::Cond& c) { return "cond(" + c.at.str() + ")"; },
          [](const rich::Call<Target>& c) {
            return "call(" + call_target(c.procedure) + "," + c.at.str() + ")";
          },
      },
      rl.kind);
}

}  // namespace

std::string to_string(const RichLabel& rl) { return rich_to_string(rl); }
std::string to_string(const SPRichLabel& rl) { return rich_to_string(rl); }

}  // namespace chorus
