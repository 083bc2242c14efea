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

#include "chorus/sp_semantics.hpp"

#include <set>

#include "chorus/overloaded.hpp"

namespace chorus {

namespace {

using Step = std::optional<NetStep>;

Step com_step(const Network& n, const State& s, const rich::Com& r) {
  if (r.from == r.to) return {};
  const auto* snd = std::get_if<beh::Send>(&n.at(r.from).node);
  const auto* rcv = std::get_if<beh::Recv>(&n.at(r.to).node);
  if (snd == nullptr || rcv == nullptr) return {};
  if (snd->to != r.to || rcv->from != r.from || rcv->var != r.var) return {};
  Value v = eval_on_state(snd->expr, s, r.from);
  if (v != r.value) return {};
  return NetStep{n.with(r.from, *snd->cont).with(r.to, *rcv->cont),
                 s.updated(r.to, r.var, std::move(v))};
}

Step sel_step(const Network& n, const State& s, const rich::Sel& r) {
  if (r.from == r.to) return {};
  const auto* chs = std::get_if<beh::Choose>(&n.at(r.from).node);
  const auto* brn = std::get_if<beh::Branch>(&n.at(r.to).node);
  if (chs == nullptr || brn == nullptr) return {};
  if (chs->to != r.to || chs->label != r.label || brn->from != r.from) return {};
  const auto& slot = brn->slot(r.label);
  if (!slot) return {};
  return NetStep{n.with(r.from, *chs->cont).with(r.to, *slot->body), s};
}

}  // namespace

std::optional<NetStep> sp_step(const DefSetB& defs, const Network& n, const State& s,
                               const SPRichLabel& rl) {
  return std::visit(
      overloaded{
          [&](const rich::Com& r) { return com_step(n, s, r); },
          [&](const rich::Sel& r) { return sel_step(n, s, r); },
          [&](const rich::Cond& r) -> Step {
            const auto* k = std::get_if<beh::Cond>(&n.at(r.at).node);
            if (k == nullptr) return {};
            const bool taken = eval_on_state(k->guard, s, r.at);
            return NetStep{n.with(r.at, taken ? *k->then_branch : *k->else_branch), s};
          },
          [&](const rich::Call<TargetProcName>& r) -> Step {
            const auto* k = std::get_if<beh::Call>(&n.at(r.at).node);
            if (k == nullptr || k->procedure != r.procedure) return {};
            return NetStep{n.with(r.at, defs.at(r.procedure)), s};
          },
      },
      rl.kind);
}

std::vector<EnabledNetStep> sp_enabled(const DefSetB& defs, const Network& n, const State& s) {
  std::vector<SPRichLabel> labels;
  for (const auto& [p, b] : n.entries()) {
    std::visit(overloaded{
                   [&](const beh::Send& x) {
                     if (const auto* r = std::get_if<beh::Recv>(&n.at(x.to).node)) {
                       labels.push_back(
                           label::sp_com(p, eval_on_state(x.expr, s, p), x.to, r->var));
                     }
                   },
                   [&](const beh::Choose& x) { labels.push_back(label::sp_sel(p, x.to, x.label)); },
                   [&](const beh::Cond&) { labels.push_back(label::sp_cond(p)); },
                   [&](const beh::Call& x) { labels.push_back(label::sp_call(x.procedure, p)); },
                   [](const auto&) {},
               },
               b.node);
  }
  std::vector<EnabledNetStep> out;
  for (auto& rl : labels) {
    if (auto next = sp_step(defs, n, s, rl)) {
      out.push_back(EnabledNetStep{std::move(rl), std::move(next->network), std::move(next->state)});
    }
  }
  return out;
}

std::vector<SPConfiguration> spp_step(const SPConfiguration& conf, const TransitionLabel& tl) {
  std::vector<SPConfiguration> out;
  for (auto& step : sp_enabled(conf.program.procedures, conf.program.network, conf.state)) {
    if (forget(step.label) != tl) continue;
    out.push_back(SPConfiguration{SPProgram{conf.program.procedures, std::move(step.network)},
                                  std::move(step.state)});
  }
  return out;
}

std::vector<SPConfiguration> spp_multistep(const SPConfiguration& conf,
                                           std::span<const TransitionLabel> tls) {
  std::vector<SPConfiguration> frontier{conf};
  for (const auto& tl : tls) {
    std::vector<SPConfiguration> next;
    std::set<SPConfiguration> seen;
    for (const auto& c : frontier) {
      for (auto& succ : spp_step(c, tl)) {
        if (seen.insert(succ).second) next.push_back(std::move(succ));
      }
    }
    frontier = std::move(next);
  }
  return frontier;
}

}  // namespace chorus
