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

#include "chorus/epp.hpp"

#include <algorithm>
#include <set>

#include "chorus/labels.hpp"
#include "chorus/overloaded.hpp"

namespace chorus {

// ---------------------------------------------------------------------------
// Branching order

namespace {

bool more_branches_slot(const std::optional<beh::Offer>& lhs,
                        const std::optional<beh::Offer>& rhs) {
  if (!rhs) return true;
  return lhs && lhs->ann == rhs->ann && more_branches(*lhs->body, *rhs->body);
}

}  // namespace

bool more_branches(const Behaviour& b1, const Behaviour& b2) {
  if (b1.node.index() != b2.node.index()) return false;
  return std::visit(
      overloaded{
          [](const beh::End&) { return true; },
          [&](const beh::Send& x) {
            const auto& y = std::get<beh::Send>(b2.node);
            return x.to == y.to && x.expr == y.expr && x.ann == y.ann &&
                   more_branches(*x.cont, *y.cont);
          },
          [&](const beh::Recv& x) {
            const auto& y = std::get<beh::Recv>(b2.node);
            return x.from == y.from && x.var == y.var && x.ann == y.ann &&
                   more_branches(*x.cont, *y.cont);
          },
          [&](const beh::Choose& x) {
            const auto& y = std::get<beh::Choose>(b2.node);
            return x.to == y.to && x.label == y.label && x.ann == y.ann &&
                   more_branches(*x.cont, *y.cont);
          },
          [&](const beh::Branch& x) {
            const auto& y = std::get<beh::Branch>(b2.node);
            return x.from == y.from && more_branches_slot(x.left, y.left) &&
                   more_branches_slot(x.right, y.right);
          },
          [&](const beh::Cond& x) {
            const auto& y = std::get<beh::Cond>(b2.node);
            return x.guard == y.guard && more_branches(*x.then_branch, *y.then_branch) &&
                   more_branches(*x.else_branch, *y.else_branch);
          },
          [&](const beh::Call& x) { return x == std::get<beh::Call>(b2.node); },
      },
      b1.node);
}

bool more_branches_net(const Network& n1, const Network& n2) {
  ProcessSet all = n1.support();
  all.merge(n2.support());
  return std::all_of(all.begin(), all.end(),
                     [&](const ProcessName& p) { return more_branches(n1.at(p), n2.at(p)); });
}

// ---------------------------------------------------------------------------
// Merge

namespace {

Merged fail(std::string why) { return Merged{std::nullopt, std::move(why)}; }
Merged ok(Behaviour b) { return Merged{std::move(b), {}}; }

const char* constructor_name(const Behaviour& b) {
  static constexpr const char* kNames[] = {"end", "send", "receive", "selection",
                                           "branching", "conditional", "call"};
  return kNames[b.node.index()];
}

using OptOffer = std::optional<beh::Offer>;

// Each slot independently: absent on both sides, present on one side, or
// present on both with the same annotation.
std::optional<OptOffer> merge_slot(const OptOffer& a, const OptOffer& b, std::string& why) {
  if (!a) return b;
  if (!b) return a;
  if (a->ann != b->ann) {
    why = "offers carry different annotations";
    return std::nullopt;
  }
  Merged m = merge(*a->body, *b->body);
  if (!m) {
    why = std::move(m.mismatch);
    return std::nullopt;
  }
  return OptOffer{beh::offer(std::move(*m.value), a->ann)};
}

template <class Rebuild>
Merged merge_cont(const Behaviour& c1, const Behaviour& c2, Rebuild rebuild) {
  Merged m = merge(c1, c2);
  if (!m) return m;
  return ok(rebuild(std::move(*m.value)));
}

}  // namespace

Merged merge(const Behaviour& b1, const Behaviour& b2) {
  if (b1.node.index() != b2.node.index()) {
    return fail(std::string("cannot merge ") + constructor_name(b1) + " with " +
                constructor_name(b2));
  }
  return std::visit(
      overloaded{
          [](const beh::End&) { return ok(beh::end()); },
          [&](const beh::Send& x) {
            const auto& y = std::get<beh::Send>(b2.node);
            if (x.to != y.to || x.expr != y.expr || x.ann != y.ann) {
              return fail("send actions differ");
            }
            return merge_cont(*x.cont, *y.cont,
                              [&](Behaviour k) { return beh::send(x.to, x.expr, k, x.ann); });
          },
          [&](const beh::Recv& x) {
            const auto& y = std::get<beh::Recv>(b2.node);
            if (x.from != y.from || x.var != y.var || x.ann != y.ann) {
              return fail("receive actions differ");
            }
            return merge_cont(*x.cont, *y.cont,
                              [&](Behaviour k) { return beh::recv(x.from, x.var, k, x.ann); });
          },
          [&](const beh::Choose& x) {
            const auto& y = std::get<beh::Choose>(b2.node);
            if (x.to != y.to || x.label != y.label || x.ann != y.ann) {
              return fail("selections differ");
            }
            return merge_cont(*x.cont, *y.cont,
                              [&](Behaviour k) { return beh::choose(x.to, x.label, k, x.ann); });
          },
          [&](const beh::Branch& x) {
            const auto& y = std::get<beh::Branch>(b2.node);
            if (x.from != y.from) return fail("branchings wait on different processes");
            std::string why;
            auto left = merge_slot(x.left, y.left, why);
            if (!left) return fail(std::move(why));
            auto right = merge_slot(x.right, y.right, why);
            if (!right) return fail(std::move(why));
            return ok(beh::branch(x.from, std::move(*left), std::move(*right)));
          },
          [&](const beh::Cond& x) {
            const auto& y = std::get<beh::Cond>(b2.node);
            if (x.guard != y.guard) return fail("conditionals have different guards");
            Merged t = merge(*x.then_branch, *y.then_branch);
            if (!t) return t;
            Merged e = merge(*x.else_branch, *y.else_branch);
            if (!e) return e;
            return ok(beh::cond(x.guard, std::move(*t.value), std::move(*e.value)));
          },
          [&](const beh::Call& x) {
            if (x != std::get<beh::Call>(b2.node)) return fail("calls differ");
            return ok(b2);
          },
      },
      b1.node);
}

// ---------------------------------------------------------------------------
// Projection

std::string to_string(const ProjectionFailure& f) {
  return "cannot project for " + f.process.str() + " at " + to_string(f.where) + ": " + f.reason;
}

namespace {

bool contains(const std::vector<ProcessName>& ps, const ProcessName& p) {
  return std::binary_search(ps.begin(), ps.end(), p);
}

class Projector {
 public:
  Projector(const DefSet& defs, const ProcessName& p) : defs_(defs), p_(p) {}

  Projected<Behaviour> run(const Choreography& c) {
    std::optional<Behaviour> b = go(c);
    if (!b) return {std::nullopt, std::move(failure_)};
    return {std::move(b), std::nullopt};
  }

 private:
  std::optional<Behaviour> go(const Choreography& c) {
    return std::visit(overloaded{
                          [&](const chor::Interaction& i) { return interaction(i); },
                          [&](const chor::Cond& k) { return conditional(k); },
                          [&](const chor::Call& k) -> std::optional<Behaviour> {
                            if (!contains(defs_.vars(k.procedure), p_)) return beh::end();
                            return beh::call({k.procedure, p_});
                          },
                          [&](const chor::RTCall& k) -> std::optional<Behaviour> {
                            if (contains(k.pending, p_)) return beh::call({k.procedure, p_});
                            return descend(PathStep::kBody, *k.body);
                          },
                          [](const chor::End&) -> std::optional<Behaviour> { return beh::end(); },
                      },
                      c.node);
  }

  std::optional<Behaviour> descend(PathStep step, const Choreography& c) {
    path_.push_back(step);
    std::optional<Behaviour> b = go(c);
    path_.pop_back();
    return b;
  }

  std::optional<Behaviour> interaction(const chor::Interaction& i) {
    std::optional<Behaviour> k = descend(PathStep::kCont, *i.cont);
    if (!k) return k;
    return std::visit(overloaded{
                          [&](const Com& com) {
                            if (com.sender == p_) return beh::send(com.receiver, com.expr, *k, i.ann);
                            if (com.receiver == p_) return beh::recv(com.sender, com.var, *k, i.ann);
                            return *k;
                          },
                          [&](const Sel& sel) {
                            if (sel.sender == p_) return beh::choose(sel.receiver, sel.label, *k, i.ann);
                            if (sel.receiver != p_) return *k;
                            std::optional<beh::Offer> offered = beh::offer(*k, i.ann);
                            if (sel.label == SelLabel::kLeft) {
                              return beh::branch(sel.sender, std::move(offered), std::nullopt);
                            }
                            return beh::branch(sel.sender, std::nullopt, std::move(offered));
                          },
                      },
                      i.eta);
  }

  std::optional<Behaviour> conditional(const chor::Cond& k) {
    std::optional<Behaviour> t = descend(PathStep::kThen, *k.then_branch);
    if (!t) return t;
    std::optional<Behaviour> e = descend(PathStep::kElse, *k.else_branch);
    if (!e) return e;
    if (k.at == p_) return beh::cond(k.guard, std::move(*t), std::move(*e));
    Merged m = merge(*t, *e);
    if (!m) failure_ = ProjectionFailure{p_, Location{std::nullopt, path_}, std::move(m.mismatch)};
    return std::move(m.value);
  }

  const DefSet& defs_;
  const ProcessName& p_;
  Path path_;
  std::optional<ProjectionFailure> failure_;
};

}  // namespace

Projected<Behaviour> bproj(const DefSet& defs, const Choreography& c, const ProcessName& p) {
  return Projector(defs, p).run(c);
}

bool projectable_b(const DefSet& defs, const Choreography& c, const ProcessName& p) {
  return bproj(defs, c, p).ok();
}

bool projectable_c(const DefSet& defs, const Choreography& c, const ProcessSet& ps) {
  return std::all_of(ps.begin(), ps.end(),
                     [&](const ProcessName& p) { return projectable_b(defs, c, p); });
}

namespace {

std::vector<ProcName> defs_check_set(const DefSet& defs, const std::vector<ProcName>& xs) {
  std::set<ProcName> all(xs.begin(), xs.end());
  for (const auto& [x, proc] : defs.explicit_entries()) all.insert(x);
  return {all.begin(), all.end()};
}

}  // namespace

bool projectable_d(const DefSet& defs, const std::vector<ProcName>& xs) {
  return epp_d(defs, xs).ok();
}

bool projectable_p(const CCProgram& p, const std::vector<ProcName>& xs) {
  return projectable_c(p.procedures, p.main, ccp_pn(p)) && projectable_d(p.procedures, xs);
}

bool str_proj(const DefSet& defs, const Choreography& c, const ProcessName& r) {
  return std::visit(
      overloaded{
          [&](const chor::Interaction& i) { return str_proj(defs, *i.cont, r); },
          [&](const chor::Cond& k) {
            return str_proj(defs, *k.then_branch, r) && str_proj(defs, *k.else_branch, r) &&
                   projectable_b(defs, c, r);
          },
          [&](const chor::RTCall& k) {
            if (!str_proj(defs, *k.body, r)) return false;
            return std::all_of(k.pending.begin(), k.pending.end(), [&](const ProcessName& p) {
              Projected<Behaviour> original = bproj(defs, defs.procs(k.procedure), p);
              Projected<Behaviour> current = bproj(defs, *k.body, p);
              return original.ok() && current.ok() && more_branches(*original, *current);
            });
          },
          [](const auto&) { return true; },
      },
      c.node);
}

bool str_proj_p(const CCProgram& p, const std::vector<ProcName>& xs) {
  if (!program_wf(p) || !projectable_d(p.procedures, xs)) return false;
  const ProcessSet ps = ccp_pn(p);
  return std::all_of(ps.begin(), ps.end(),
                     [&](const ProcessName& r) { return str_proj(p.procedures, p.main, r); });
}

Projected<Network> epp_c(const DefSet& defs, const ProcessSet& ps, const Choreography& c) {
  Network::Entries entries;
  for (const ProcessName& p : ps) {
    Projected<Behaviour> b = bproj(defs, c, p);
    if (!b.ok()) return {std::nullopt, std::move(b.failure)};
    entries.emplace(p, std::move(*b.value));
  }
  return {Network::from_entries(entries), std::nullopt};
}

Projected<DefSetB> epp_d(const DefSet& defs, const std::vector<ProcName>& xs) {
  DefSetB out;
  for (const ProcName& x : defs_check_set(defs, xs)) {
    for (const ProcessName& p : defs.vars(x)) {
      Projected<Behaviour> b = bproj(defs, defs.procs(x), p);
      if (!b.ok()) {
        b.failure->where.procedure = x;
        return {std::nullopt, std::move(b.failure)};
      }
      out.define({x, p}, std::move(*b.value));
    }
  }
  return {std::move(out), std::nullopt};
}

Projected<SPProgram> epp(const CCProgram& p, const std::vector<ProcName>& xs) {
  Projected<Network> n = epp_c(p.procedures, ccp_pn(p), p.main);
  if (!n.ok()) return {std::nullopt, std::move(n.failure)};
  Projected<DefSetB> d = epp_d(p.procedures, xs);
  if (!d.ok()) return {std::nullopt, std::move(d.failure)};
  return {SPProgram{std::move(*d.value), std::move(*n.value)}, std::nullopt};
}

}  // namespace chorus
