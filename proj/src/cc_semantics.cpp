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

#include "chorus/cc_semantics.hpp"

#include <algorithm>
#include <set>

#include "chorus/overloaded.hpp"

namespace chorus {

namespace {

bool disjoint(const ProcessSet& involved, const std::vector<ProcessName>& ps) {
  return std::none_of(ps.begin(), ps.end(),
                      [&](const ProcessName& p) { return involved.count(p) != 0; });
}

std::vector<ProcessName> without(const std::vector<ProcessName>& ps, const ProcessName& p) {
  std::vector<ProcessName> out;
  std::copy_if(ps.begin(), ps.end(), std::back_inserter(out),
               [&](const ProcessName& q) { return q != p; });
  return out;
}

bool contains(const std::vector<ProcessName>& ps, const ProcessName& p) {
  return std::binary_search(ps.begin(), ps.end(), p);
}

// C_Call_Local / C_Call_Start and C_Call_Enter / C_Call_Finish share a shape:
// `p` leaves `ps`; the runtime term disappears once nobody is left.
Choreography join(const ProcName& x, const std::vector<ProcessName>& ps, const ProcessName& p,
                  const Choreography& body) {
  if (ps.size() == 1) return body;
  return chor::rt_call(x, without(ps, p), body);
}

using Step = std::optional<ChorStep>;

Step head_or_delay(const DefSet& defs, const chor::Interaction& i, const State& s,
                   const RichLabel& rl) {
  const ProcessName& p = eta_sender(i.eta);
  const ProcessName& q = eta_receiver(i.eta);
  const ProcessSet involved = participants(rl);
  if (involved.count(p) != 0 || involved.count(q) != 0) {
    // Only the head rule can fire.
    return std::visit(
        overloaded{
            [&](const Com& com) -> Step {
              const auto* r = std::get_if<rich::Com>(&rl.kind);
              if (r == nullptr || r->from != p || r->to != q || r->var != com.var) return {};
              Value v = eval_on_state(com.expr, s, p);
              if (v != r->value) return {};
              return ChorStep{*i.cont, s.updated(q, com.var, std::move(v))};
            },
            [&](const Sel& sel) -> Step {
              const auto* r = std::get_if<rich::Sel>(&rl.kind);
              if (r == nullptr || r->from != p || r->to != q || r->label != sel.label) return {};
              return ChorStep{*i.cont, s};
            },
        },
        i.eta);
  }
  Step inner = cc_step(defs, *i.cont, s, rl);
  if (!inner) return {};
  return ChorStep{chor::interaction(i.eta, i.ann, std::move(inner->chor)),
                  std::move(inner->state)};
}

}  // namespace

std::optional<ChorStep> cc_step(const DefSet& defs, const Choreography& c, const State& s,
                                const RichLabel& rl) {
  return std::visit(
      overloaded{
          [&](const chor::Interaction& i) { return head_or_delay(defs, i, s, rl); },
          [&](const chor::Cond& k) -> Step {
            if (const auto* r = std::get_if<rich::Cond>(&rl.kind); r && r->at == k.at) {
              const bool taken = eval_on_state(k.guard, s, k.at);
              return ChorStep{taken ? *k.then_branch : *k.else_branch, s};
            }
            if (participants(rl).count(k.at) != 0) return {};
            Step left = cc_step(defs, *k.then_branch, s, rl);
            if (!left) return {};
            Step right = cc_step(defs, *k.else_branch, s, rl);
            if (!right || right->state != left->state) return {};
            return ChorStep{chor::cond(k.at, k.guard, std::move(left->chor), std::move(right->chor)),
                            std::move(left->state)};
          },
          [&](const chor::Call& k) -> Step {
            const auto* r = std::get_if<rich::Call<ProcName>>(&rl.kind);
            if (r == nullptr || r->procedure != k.procedure) return {};
            const Procedure& proc = defs.at(k.procedure);
            if (!contains(proc.params, r->at)) return {};
            return ChorStep{join(k.procedure, proc.params, r->at, proc.body), s};
          },
          [&](const chor::RTCall& k) -> Step {
            const auto* r = std::get_if<rich::Call<ProcName>>(&rl.kind);
            if (r != nullptr && r->procedure == k.procedure && contains(k.pending, r->at)) {
              return ChorStep{join(k.procedure, k.pending, r->at, *k.body), s};
            }
            if (!disjoint(participants(rl), k.pending)) return {};
            Step inner = cc_step(defs, *k.body, s, rl);
            if (!inner) return {};
            return ChorStep{chor::rt_call(k.procedure, k.pending, std::move(inner->chor)),
                            std::move(inner->state)};
          },
          [](const chor::End&) -> Step { return {}; },
      },
      c.node);
}

namespace {

// Over-approximates the enabled labels in enumeration order; cc_step decides.
void candidates(const DefSet& defs, const Choreography& c, const State& s,
                std::vector<RichLabel>& out) {
  std::visit(overloaded{
                 [&](const chor::Interaction& i) {
                   std::visit(overloaded{
                                  [&](const Com& com) {
                                    out.push_back(label::com(com.sender,
                                                             eval_on_state(com.expr, s, com.sender),
                                                             com.receiver, com.var));
                                  },
                                  [&](const Sel& sel) {
                                    out.push_back(label::sel(sel.sender, sel.receiver, sel.label));
                                  },
                              },
                              i.eta);
                   candidates(defs, *i.cont, s, out);
                 },
                 [&](const chor::Cond& k) {
                   out.push_back(label::cond(k.at));
                   candidates(defs, *k.then_branch, s, out);
                   candidates(defs, *k.else_branch, s, out);
                 },
                 [&](const chor::Call& k) {
                   for (const auto& p : defs.vars(k.procedure)) {
                     out.push_back(label::call(k.procedure, p));
                   }
                 },
                 [&](const chor::RTCall& k) {
                   for (const auto& p : k.pending) out.push_back(label::call(k.procedure, p));
                   candidates(defs, *k.body, s, out);
                 },
                 [](const chor::End&) {},
             },
             c.node);
}

}  // namespace

std::vector<EnabledChorStep> cc_enabled(const DefSet& defs, const Choreography& c,
                                        const State& s) {
  std::vector<RichLabel> labels;
  candidates(defs, c, s, labels);
  std::set<RichLabel> seen;
  std::vector<EnabledChorStep> out;
  for (auto& rl : labels) {
    if (!seen.insert(rl).second) continue;
    if (auto next = cc_step(defs, c, s, rl)) {
      out.push_back(EnabledChorStep{rl, std::move(next->chor), std::move(next->state)});
    }
  }
  return out;
}

std::vector<CCConfiguration> ccp_step(const CCConfiguration& conf, const TransitionLabel& tl) {
  std::vector<CCConfiguration> out;
  for (auto& step : cc_enabled(conf.program.procedures, conf.program.main, conf.state)) {
    if (forget(step.label) != tl) continue;
    out.push_back(CCConfiguration{CCProgram{conf.program.procedures, std::move(step.chor)},
                                  std::move(step.state)});
  }
  return out;
}

std::vector<CCConfiguration> ccp_multistep(const CCConfiguration& conf,
                                           std::span<const TransitionLabel> tls) {
  std::vector<CCConfiguration> frontier{conf};
  for (const auto& tl : tls) {
    std::vector<CCConfiguration> next;
    std::set<CCConfiguration> seen;
    for (const auto& c : frontier) {
      for (auto& succ : ccp_step(c, tl)) {
        if (seen.insert(succ).second) next.push_back(std::move(succ));
      }
    }
    frontier = std::move(next);
  }
  return frontier;
}

}  // namespace chorus
