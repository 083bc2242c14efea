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

#include "chorus/cc_syntax.hpp"

#include <algorithm>

#include "chorus/overloaded.hpp"

namespace chorus {

const ProcessName& eta_sender(const Eta& eta) {
  return std::visit([](const auto& e) -> const ProcessName& { return e.sender; }, eta);
}

const ProcessName& eta_receiver(const Eta& eta) {
  return std::visit([](const auto& e) -> const ProcessName& { return e.receiver; }, eta);
}

std::vector<ProcessName> canonical_processes(std::vector<ProcessName> ps) {
  std::sort(ps.begin(), ps.end());
  ps.erase(std::unique(ps.begin(), ps.end()), ps.end());
  return ps;
}

namespace chor {

Choreography com(ProcessName p, Expr e, ProcessName q, VarName x, Choreography cont, Ann ann) {
  return interaction(Com{std::move(p), std::move(e), std::move(q), std::move(x)}, std::move(ann),
                     std::move(cont));
}

Choreography sel(ProcessName p, ProcessName q, SelLabel l, Choreography cont, Ann ann) {
  return interaction(Sel{std::move(p), std::move(q), l}, std::move(ann), std::move(cont));
}

Choreography interaction(Eta eta, Ann ann, Choreography cont) {
  return Choreography{Interaction{std::move(eta), std::move(ann), std::move(cont)}};
}

Choreography cond(ProcessName p, BExpr b, Choreography then_branch, Choreography else_branch) {
  return Choreography{
      Cond{std::move(p), std::move(b), std::move(then_branch), std::move(else_branch)}};
}

Choreography call(ProcName x) { return Choreography{Call{std::move(x)}}; }

Choreography rt_call(ProcName x, std::vector<ProcessName> pending, Choreography body) {
  return Choreography{
      RTCall{std::move(x), canonical_processes(std::move(pending)), std::move(body)}};
}

Choreography end() { return Choreography{End{}}; }

}  // namespace chor

// ---------------------------------------------------------------------------

const ProcessName& DefSet::default_process() {
  static const ProcessName kDefault{"_"};
  return kDefault;
}

const Procedure& DefSet::default_procedure() {
  static const Procedure kDefault{{default_process()}, chor::end()};
  return kDefault;
}

void DefSet::define(const ProcName& x, std::vector<ProcessName> params, Choreography body) {
  defs_.insert_or_assign(x, Procedure{canonical_processes(std::move(params)), std::move(body)});
}

const Procedure& DefSet::at(const ProcName& x) const {
  auto it = defs_.find(x);
  return it == defs_.end() ? default_procedure() : it->second;
}

ProcessSet DefSet::names(const ProcName& x) const {
  const auto& ps = vars(x);
  return ProcessSet(ps.begin(), ps.end());
}

NamesFn names_of(const DefSet& defs) {
  return [&defs](const ProcName& x) { return defs.names(x); };
}

std::string to_string(const Location& loc) {
  std::string out = loc.procedure ? "procedure " + loc.procedure->str() : std::string("main");
  for (PathStep step : loc.path) {
    switch (step) {
      case PathStep::kCont: out += "/cont"; break;
      case PathStep::kThen: out += "/then"; break;
      case PathStep::kElse: out += "/else"; break;
      case PathStep::kBody: out += "/body"; break;
    }
  }
  return out;
}

std::optional<Choreography> subterm_at(const Choreography& c, const Path& path) {
  const Choreography* cur = &c;
  for (PathStep step : path) {
    const Choreography* next = std::visit(
        overloaded{
            [&](const chor::Interaction& i) -> const Choreography* {
              return step == PathStep::kCont ? &*i.cont : nullptr;
            },
            [&](const chor::Cond& k) -> const Choreography* {
              if (step == PathStep::kThen) return &*k.then_branch;
              if (step == PathStep::kElse) return &*k.else_branch;
              return nullptr;
            },
            [&](const chor::RTCall& r) -> const Choreography* {
              return step == PathStep::kBody ? &*r.body : nullptr;
            },
            [](const auto&) -> const Choreography* { return nullptr; },
        },
        cur->node);
    if (next == nullptr) return std::nullopt;
    cur = next;
  }
  return *cur;
}

namespace {

// Depth-first, left-to-right search for the first node satisfying `pred`.
template <class Pred>
bool find_node(const Choreography& c, Path& path, const Pred& pred) {
  if (pred(c)) return true;
  auto descend = [&](PathStep step, const Choreography& child) {
    path.push_back(step);
    if (find_node(child, path, pred)) return true;
    path.pop_back();
    return false;
  };
  return std::visit(overloaded{
                        [&](const chor::Interaction& i) { return descend(PathStep::kCont, *i.cont); },
                        [&](const chor::Cond& k) {
                          return descend(PathStep::kThen, *k.then_branch) ||
                                 descend(PathStep::kElse, *k.else_branch);
                        },
                        [&](const chor::RTCall& r) { return descend(PathStep::kBody, *r.body); },
                        [](const auto&) { return false; },
                    },
                    c.node);
}

template <class Pred>
bool any_node(const Choreography& c, const Pred& pred) {
  Path path;
  return find_node(c, path, pred);
}

bool is_self_comm(const Choreography& c) {
  const auto* i = std::get_if<chor::Interaction>(&c.node);
  return i != nullptr && eta_sender(i->eta) == eta_receiver(i->eta);
}

bool is_runtime(const Choreography& c) { return std::holds_alternative<chor::RTCall>(c.node); }

bool is_empty_runtime(const Choreography& c) {
  const auto* r = std::get_if<chor::RTCall>(&c.node);
  return r != nullptr && r->pending.empty();
}

bool is_inconsistent(const NamesFn& names, const Choreography& c) {
  const auto* r = std::get_if<chor::RTCall>(&c.node);
  if (r == nullptr) return false;
  const ProcessSet allowed = names(r->procedure);
  return !std::all_of(r->pending.begin(), r->pending.end(),
                      [&](const ProcessName& p) { return allowed.count(p) != 0; });
}

bool contains(const std::vector<ProcName>& xs, const ProcName& x) {
  return std::find(xs.begin(), xs.end(), x) != xs.end();
}

bool subset(const ProcessSet& a, const ProcessSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace

bool initial(const Choreography& c) { return !any_node(c, is_runtime); }

bool no_self_comm(const Choreography& c) { return !any_node(c, is_self_comm); }

bool no_empty_ann(const Choreography& c) { return !any_node(c, is_empty_runtime); }

bool chor_wf(const Choreography& c) { return no_self_comm(c) && no_empty_ann(c); }

bool consistent(const NamesFn& names, const Choreography& c) {
  return !any_node(c, [&](const Choreography& n) { return is_inconsistent(names, n); });
}

ProcessSet ccc_pn(const Choreography& c, const NamesFn& names) {
  ProcessSet out;
  any_node(c, [&](const Choreography& n) {
    std::visit(overloaded{
                   [&](const chor::Interaction& i) {
                     out.insert(eta_sender(i.eta));
                     out.insert(eta_receiver(i.eta));
                   },
                   [&](const chor::Cond& k) { out.insert(k.at); },
                   [&](const chor::Call& k) { out.merge(names(k.procedure)); },
                   [&](const chor::RTCall& r) { out.insert(r.pending.begin(), r.pending.end()); },
                   [](const chor::End&) {},
               },
               n.node);
    return false;
  });
  return out;
}

ProcessSet ccp_pn(const CCProgram& p) {
  ProcessSet out = ccc_pn(p.main, names_of(p.procedures));
  for (const auto& [x, proc] : p.procedures.explicit_entries()) {
    out.insert(proc.params.begin(), proc.params.end());
  }
  return out;
}

std::vector<ProcName> check_set(const CCProgram& p, const std::vector<ProcName>& xs) {
  std::set<ProcName> all(xs.begin(), xs.end());
  for (const auto& [x, proc] : p.procedures.explicit_entries()) all.insert(x);
  return {all.begin(), all.end()};
}

bool well_ann(const CCProgram& p, const ProcName& x) {
  const auto& vars = p.procedures.vars(x);
  if (vars.empty()) return false;
  return subset(ccc_pn(p.procedures.procs(x), names_of(p.procedures)), p.procedures.names(x));
}

namespace {

bool procedure_wf(const CCProgram& p, const ProcName& x) {
  const Choreography& body = p.procedures.procs(x);
  return no_self_comm(body) && initial(body) && well_ann(p, x);
}

}  // namespace

bool program_wf(const CCProgram& p) {
  if (!chor_wf(p.main) || !consistent(names_of(p.procedures), p.main)) return false;
  // Names outside the support share the default definition, which is
  // well-formed by construction.
  for (const auto& [x, proc] : p.procedures.explicit_entries()) {
    if (!procedure_wf(p, x)) return false;
  }
  return true;
}

bool used_procedures_c(const Choreography& c, const std::vector<ProcName>& xs) {
  return !any_node(c, [&](const Choreography& n) {
    if (const auto* k = std::get_if<chor::Call>(&n.node)) return !contains(xs, k->procedure);
    if (const auto* r = std::get_if<chor::RTCall>(&n.node)) return !contains(xs, r->procedure);
    return false;
  });
}

bool used_procedures(const CCProgram& p, const std::vector<ProcName>& xs) {
  if (!used_procedures_c(p.main, xs)) return false;
  for (const auto& x : xs) {
    if (!used_procedures_c(p.procedures.procs(x), xs)) return false;
  }
  for (const auto& [x, proc] : p.procedures.explicit_entries()) {
    if (contains(xs, x)) continue;
    if (!proc.body.is_end() || proc.params.empty()) return false;
  }
  return true;
}

std::string_view to_string(WfClause clause) {
  switch (clause) {
    case WfClause::kNoSelfComm: return "no_self_comm";
    case WfClause::kNoEmptyAnn: return "no_empty_ann";
    case WfClause::kConsistent: return "consistent";
    case WfClause::kInitial: return "initial";
    case WfClause::kWellAnn: return "well_ann";
  }
  return "?";
}

WfReport program_wf_dec(const CCProgram& p, const std::vector<ProcName>& xs) {
  if (!used_procedures(p, xs)) {
    throw UsedProceduresViolated("program calls procedures outside the declared set");
  }
  const NamesFn names = names_of(p.procedures);

  std::optional<WfViolation> found;
  auto report = [&](WfClause clause, std::optional<ProcName> proc, Path path, std::string detail) {
    found = WfViolation{clause, Location{std::move(proc), std::move(path)}, std::move(detail)};
  };

  Path path;
  bool hit = find_node(p.main, path, [&](const Choreography& n) {
    if (is_self_comm(n)) {
      report(WfClause::kNoSelfComm, std::nullopt, path, "interaction with itself");
      return true;
    }
    if (is_empty_runtime(n)) {
      report(WfClause::kNoEmptyAnn, std::nullopt, path, "runtime call with no pending process");
      return true;
    }
    if (is_inconsistent(names, n)) {
      report(WfClause::kConsistent, std::nullopt, path,
             "runtime call lists a process outside its procedure parameters");
      return true;
    }
    return false;
  });
  if (hit) return WfReport{found};

  // The default definition is well-formed by construction (a nonempty
  // parameter list and a terminated body), so only the check set is walked.
  for (const ProcName& x : check_set(p, xs)) {
    const Choreography& body = p.procedures.procs(x);
    path.clear();
    hit = find_node(body, path, [&](const Choreography& n) {
      if (is_self_comm(n)) {
        report(WfClause::kNoSelfComm, x, path, "interaction with itself");
        return true;
      }
      if (is_runtime(n)) {
        report(WfClause::kInitial, x, path, "procedure body contains a runtime call");
        return true;
      }
      return false;
    });
    if (hit) return WfReport{found};
    if (p.procedures.vars(x).empty()) {
      report(WfClause::kWellAnn, x, {}, "empty parameter list");
      return WfReport{found};
    }
    if (!subset(ccc_pn(body, names), p.procedures.names(x))) {
      report(WfClause::kWellAnn, x, {}, "body uses processes outside the parameter list");
      return WfReport{found};
    }
  }
  return WfReport{};
}

}  // namespace chorus
