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

#include "chorus/generator.hpp"

#include <algorithm>
#include <random>
#include <string>

namespace chorus {

namespace {

const char* const kProcessPool[] = {"a", "b", "c", "d", "e", "f", "g", "h"};
const char* const kVarPool[] = {"x", "y", "z"};
constexpr std::size_t kVarCount = 3;

class Generator {
 public:
  explicit Generator(std::uint64_t seed) : rng_(seed) {}

  std::size_t pick(std::size_t n) { return n == 0 ? 0 : static_cast<std::size_t>(rng_() % n); }
  bool chance(std::size_t one_in) { return pick(one_in) == 0; }

  VarName var() { return kVarPool[pick(kVarCount)]; }

  Expr expression(std::size_t depth) {
    if (depth == 0) return chance(2) ? expr::lit(pick(5)) : expr::var(var());
    switch (pick(7)) {
      case 0: return expr::lit(pick(5));
      case 1: return expr::var(var());
      case 2: return expr::succ(expression(depth - 1));
      case 3: return expr::plus(expression(depth - 1), expression(depth - 1));
      case 4: return expr::pair(expression(depth - 1), expression(depth - 1));
      case 5: return expr::fst(expression(depth - 1));
      default: return expr::snd(expression(depth - 1));
    }
  }

  BExpr guard(std::size_t depth) {
    const std::size_t n = depth == 0 ? 3 : 6;
    switch (pick(n)) {
      case 0: return bexpr::eq(expression(1), expression(1));
      case 1: return bexpr::leq(expression(1), expression(1));
      case 2: return chance(2) ? bexpr::truth() : bexpr::falsity();
      case 3: return bexpr::negate(guard(depth - 1));
      default: return bexpr::conj(guard(depth - 1), guard(depth - 1));
    }
  }

  /// A choreography over `ps` calling only `callable`, with at most `budget`
  /// actions counted over all branches.
  Choreography choreography(const std::vector<ProcessName>& ps,
                            const std::vector<ProcName>& callable, std::size_t budget,
                            const DefSet& defs) {
    if (budget == 0) return chor::end();
    const std::size_t reserve = 2 * (ps.size() - 1);
    const bool can_talk = ps.size() >= 2;
    const bool can_branch = budget >= 1 + reserve;
    // Weighted choice; disabled options get weight 0. Chains stop at the
    // budget or at a call, or early when nothing else is possible.
    const std::size_t w_com = can_talk ? 6 : 0;
    const std::size_t w_sel = can_talk ? 1 : 0;
    const std::size_t w_cond = can_branch ? 3 : 0;
    const std::size_t w_call = callable.empty() ? 0 : 2;
    const std::size_t w_end = w_com + w_cond + w_call == 0 ? 1 : 0;
    std::size_t roll = pick(w_com + w_sel + w_cond + w_call + w_end);

    if (roll < w_com) {
      auto [p, q] = two(ps);
      Expr e = expression(pick(3));
      VarName x = var();
      return chor::com(p, std::move(e), q, x, choreography(ps, callable, budget - 1, defs));
    }
    roll -= w_com;
    if (roll < w_sel) {
      auto [p, q] = two(ps);
      SelLabel l = chance(2) ? SelLabel::kLeft : SelLabel::kRight;
      return chor::sel(p, q, l, choreography(ps, callable, budget - 1, defs));
    }
    roll -= w_sel;
    if (roll < w_cond) return conditional(ps, callable, budget - 1 - reserve, defs);
    roll -= w_cond;
    if (roll < w_call) return chor::call(callable[pick(callable.size())]);
    return chor::end();
  }

 private:
  std::pair<ProcessName, ProcessName> two(const std::vector<ProcessName>& ps) {
    std::size_t i = pick(ps.size());
    std::size_t j = pick(ps.size() - 1);
    if (j >= i) ++j;
    return {ps[i], ps[j]};
  }

  Choreography conditional(const std::vector<ProcessName>& ps,
                           const std::vector<ProcName>& callable, std::size_t budget,
                           const DefSet& defs) {
    const ProcessName p = ps[pick(ps.size())];
    BExpr b = guard(pick(3));
    const std::size_t then_budget = pick(budget + 1);
    Choreography then_branch = choreography(ps, callable, then_budget, defs);
    Choreography else_branch = choreography(ps, callable, budget - then_budget, defs);

    const NamesFn names = names_of(defs);
    ProcessSet others = ccc_pn(then_branch, names);
    others.merge(ccc_pn(else_branch, names));
    others.erase(p);
    for (auto it = others.rbegin(); it != others.rend(); ++it) {
      then_branch = chor::sel(p, *it, SelLabel::kLeft, std::move(then_branch));
      else_branch = chor::sel(p, *it, SelLabel::kRight, std::move(else_branch));
    }
    return chor::cond(p, std::move(b), std::move(then_branch), std::move(else_branch));
  }

  std::mt19937_64 rng_;
};

}  // namespace

CCProgram gen_program(std::uint64_t seed, const GenParams& params) {
  Generator g(seed);
  const std::size_t pool = std::min<std::size_t>(params.max_processes, std::size(kProcessPool));
  std::vector<ProcessName> ps;
  if (pool > 0) {
    const std::size_t n = pool == 1 ? 1 : 2 + g.pick(pool - 1);
    for (std::size_t i = 0; i < n; ++i) ps.push_back(kProcessPool[i]);
  }
  CCProgram program;
  if (ps.empty() || params.max_actions == 0) {
    program.main = chor::end();
    return program;
  }

  // Parameters first, so that bodies know which procedures they may call.
  const std::size_t count = g.pick(params.max_procedures + 1);
  std::vector<std::pair<ProcName, std::vector<ProcessName>>> signatures;
  for (std::size_t i = 0; i < count; ++i) {
    std::vector<ProcessName> shuffled = ps;
    for (std::size_t k = shuffled.size(); k > 1; --k) {
      std::swap(shuffled[k - 1], shuffled[g.pick(k)]);
    }
    const std::size_t size = ps.size() == 1 ? 1 : 2 + g.pick(ps.size() - 1);
    shuffled.resize(size);
    signatures.emplace_back(ProcName("X" + std::to_string(i)), canonical_processes(shuffled));
    program.procedures.define(signatures.back().first, signatures.back().second, chor::end());
  }

  auto callable_from = [&](const std::vector<ProcessName>& vars) {
    std::vector<ProcName> out;
    for (const auto& [y, ys] : signatures) {
      if (std::includes(vars.begin(), vars.end(), ys.begin(), ys.end())) out.push_back(y);
    }
    return out;
  };

  DefSet defs = program.procedures;
  for (const auto& [x, vars] : signatures) {
    const std::size_t half = params.max_actions / 2;
    const std::size_t budget = half == 0 ? 0 : 1 + g.pick(half);
    defs.define(x, vars, g.choreography(vars, callable_from(vars), budget, program.procedures));
  }
  program.procedures = defs;
  // Main gets at least half of its budget.
  const std::size_t low = params.max_actions / 2;
  program.main = g.choreography(ps, callable_from(ps), low + g.pick(params.max_actions - low + 1),
                                program.procedures);
  return program;
}

State gen_state(std::uint64_t seed, const CCProgram& p) {
  Generator g(seed ^ 0x5eed5eed5eed5eedULL);
  State::Entries entries;
  for (const ProcessName& q : ccp_pn(p)) {
    for (const char* x : kVarPool) {
      Value v = Value::nat(g.pick(4));
      if (g.chance(5)) v = Value::pair(v, Value::nat(g.pick(4)));
      entries.emplace(State::Key{q, x}, std::move(v));
    }
  }
  return State::from_entries(entries);
}

std::vector<ProcName> declared_procedures(const CCProgram& p) {
  std::vector<ProcName> out;
  for (const auto& [x, proc] : p.procedures.explicit_entries()) out.push_back(x);
  return out;
}

}  // namespace chorus
