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

#include "support/properties.hpp"

#include <deque>
#include <set>
#include <sstream>

#include "chorus/epp.hpp"
#include "chorus/generator.hpp"
#include "chorus/sp_semantics.hpp"
#include "chorus/surface.hpp"
#include "chorus/verify.hpp"
#include "support/oracles.hpp"
#include "support/random_terms.hpp"

namespace chorus::testing {

void SuiteOutcome::check(bool holds, const std::string& what) {
  ++checks;
  if (!holds) failures.push_back(what);
}

std::string SuiteOutcome::summary(std::size_t limit) const {
  std::ostringstream out;
  for (std::size_t i = 0; i < failures.size() && i < limit; ++i) out << failures[i] << "\n";
  if (failures.size() > limit) out << "... " << failures.size() - limit << " more\n";
  return out.str();
}

namespace {

constexpr std::size_t kMaxDepth = 5;
const ProcessName kPids[] = {"p", "q", "r"};

std::string show(const Behaviour& b) { return print_behaviour(b); }

std::string tag(const char* law, std::size_t i, const Behaviour& b1, const Behaviour& b2) {
  return std::string(law) + " #" + std::to_string(i) + ": " + show(b1) + " / " + show(b2);
}

bool same(const Merged& a, const Merged& b) {
  return a.value.has_value() == b.value.has_value() && (!a.value || *a.value == *b.value);
}

Network grow_net(const Network& n, Rng& rng) {
  Network::Entries out;
  for (const auto& [p, b] : n.entries()) out[p] = grow(b, rng, kMaxDepth);
  return Network::from_entries(out);
}

Network prune_net(const Network& n, Rng& rng) {
  Network::Entries out;
  for (const auto& [p, b] : n.entries()) out[p] = prune(b, rng);
  return Network::from_entries(out);
}

}  // namespace

SuiteOutcome merge_algebra_suite(std::uint64_t seed, std::size_t cases) {
  SuiteOutcome out;
  Rng rng(seed);
  for (std::size_t i = 0; i < cases; ++i, ++out.cases) {
    auto [b1, b2] = i % 2 == 0 ? related_pair(rng, kMaxDepth)
                               : std::pair{random_behaviour(rng, kMaxDepth),
                                           random_behaviour(rng, kMaxDepth)};
    const Behaviour b3 = i % 3 == 0 ? random_behaviour(rng, kMaxDepth)
                                    : grow(prune(b1, rng), rng, kMaxDepth);
    out.check(depth(b1) <= kMaxDepth && depth(b2) <= kMaxDepth, tag("depth", i, b1, b2));

    const Merged m12 = merge(b1, b2);
    // Functional and agreeing with the clause table.
    out.check(m12.value.has_value() == mergeable(b1, b2), tag("definedness", i, b1, b2));
    if (m12) out.check(is_merge(b1, b2, *m12.value), tag("merge_unique", i, b1, b2));
    out.check(m12.value.has_value() == m12.mismatch.empty(), tag("diagnostic", i, b1, b2));

    out.check(same(merge(b1, b1), Merged{b1, ""}), tag("idempotent", i, b1, b1));
    out.check(same(m12, merge(b2, b1)), tag("commutative", i, b1, b2));

    const Merged m23 = merge(b2, b3);
    const Merged left = m12 ? merge(*m12.value, b3) : Merged{};
    const Merged right = m23 ? merge(b1, *m23.value) : Merged{};
    out.check(same(left, right), tag("associative", i, b1, b3));

    out.check(more_branches(b1, b2) == (m12 && *m12.value == b1), tag("duality", i, b1, b2));

    if (m12) {
      out.check(more_branches(*m12.value, b1) && more_branches(*m12.value, b2),
                tag("upper_bound", i, b1, b2));
      for (const ProcessName& p : kPids) {
        if (behaviour_wf(p, b1) && behaviour_wf(p, b2)) {
          out.check(behaviour_wf(p, *m12.value), tag("merge_wf", i, b1, b2));
        }
      }
      // Stability: pruning the arguments keeps the merge defined and below.
      const Behaviour b1p = prune(b1, rng);
      const Behaviour b2p = prune(b2, rng);
      const Merged mp = merge(b1p, b2p);
      out.check(mp && more_branches(*m12.value, *mp.value), tag("stability", i, b1p, b2p));
    }

    // Least upper bound: two prunings of one behaviour merge below it.
    const Behaviour top = random_behaviour(rng, kMaxDepth);
    const Behaviour l1 = prune(top, rng);
    const Behaviour l2 = prune(top, rng);
    const Merged lub = merge(l1, l2);
    out.check(lub && more_branches(top, *lub.value), tag("lub", i, l1, l2));
  }
  return out;
}

SuiteOutcome order_laws_suite(std::uint64_t seed, std::size_t cases) {
  SuiteOutcome out;
  Rng rng(seed);
  for (std::size_t i = 0; i < cases; ++i, ++out.cases) {
    const Behaviour b = random_behaviour(rng, kMaxDepth);
    const Behaviour b1 = prune(b, rng);
    const Behaviour b2 = prune(b1, rng);
    const Behaviour other = random_behaviour(rng, kMaxDepth);

    out.check(more_branches(b, b), tag("reflexive", i, b, b));
    out.check(more_branches(b, b1) && more_branches(b1, b2), tag("pruning", i, b, b1));
    out.check(more_branches(b, b2), tag("transitive", i, b, b2));
    for (const auto& [x, y] : {std::pair{b, b1}, std::pair{b1, b}, std::pair{b, other},
                               std::pair{other, b}, std::pair{b1, other}}) {
      out.check(more_branches(x, y) == has_more_branches(x, y), tag("reference", i, x, y));
      if (more_branches(x, y) && more_branches(y, x)) {
        out.check(x == y, tag("antisymmetric", i, x, y));
      }
    }
    const Behaviour g = grow(b, rng, kMaxDepth);
    out.check(more_branches(g, b), tag("growing", i, g, b));

    const Network n = random_network(rng, kMaxDepth);
    const Network n1 = prune_net(n, rng);
    const Network n2 = prune_net(n1, rng);
    const Network m = random_network(rng, kMaxDepth);
    const std::string net = "network #" + std::to_string(i);
    out.check(more_branches_net(n, n), net + " reflexive");
    out.check(more_branches_net(n, n1) && more_branches_net(n1, n2), net + " pruning");
    out.check(more_branches_net(n, n2), net + " transitive");
    for (const auto& [x, y] : {std::pair{n, n1}, std::pair{n, m}, std::pair{m, n}}) {
      if (more_branches_net(x, y) && more_branches_net(y, x)) {
        out.check(network_eq(x, y), net + " antisymmetric");
      }
    }
  }
  return out;
}

SuiteOutcome more_branches_step_suite(std::uint64_t seed, std::size_t cases) {
  SuiteOutcome out;
  Rng rng(seed);
  DefSetB defs;
  for (const char* x : {"X", "Y"}) {
    for (const ProcessName& p : kPids) defs.define({x, p}, random_behaviour(rng, 2));
  }
  while (out.cases < cases) {
    const Network n1 = random_live_network(rng, kMaxDepth);
    const State s = State().updated("p", "x", Value::nat(rng() % 2)).updated("q", "y", Value::nat(rng() % 3));
    auto steps = sp_enabled(defs, n1, s);
    if (steps.empty()) continue;
    const auto& step = steps[rng() % steps.size()];
    const Network n1g = grow_net(n1, rng);
    const std::string what = "case #" + std::to_string(out.cases) + " " + to_string(step.label) +
                             " on " + print_network(n1);
    ++out.cases;
    if (!more_branches_net(n1g, n1)) {
      out.check(false, what + ": grown network is not above");
      continue;
    }
    auto replay = sp_step(defs, n1g, s, step.label);
    out.check(replay && replay->state == step.state && more_branches_net(replay->network, step.network),
              what);
  }
  return out;
}

SuiteOutcome meta_theorem_suite(std::size_t programs, std::size_t depth) {
  SuiteOutcome out;
  const GenParams params{12, 4, 2};
  for (std::uint64_t seed = 0; seed < programs; ++seed, ++out.cases) {
    const CCProgram p = gen_program(seed, params);
    const State s = gen_state(seed, p);
    const std::vector<ProcName> xs = declared_procedures(p);
    const std::string at = "seed " + std::to_string(seed) + ": ";
    out.check(program_wf(p) && projectable_p(p, xs), at + "generated program is not projectable");
    std::vector<VerifyReport> reports;
    try {
      reports.push_back(check_epp_complete(p, xs, s, depth));
      reports.push_back(check_epp_sound(p, xs, s, depth));
    } catch (const NotStronglyProjectable& e) {
      out.check(false, at + e.what());
    }
    reports.push_back(check_determinism(p, s, depth));
    reports.push_back(check_diamond(p, s, depth));
    reports.push_back(check_progress(p, s, depth));
    reports.push_back(check_termination_unique(p, s, depth));
    for (const VerifyReport& r : reports) {
      out.check(r.passed, at + r.property + ": " + r.message);
    }
  }
  return out;
}

SuiteOutcome wf_decision_suite(std::size_t programs) {
  SuiteOutcome out;
  const Mutation kMutations[] = {Mutation::kSelfComm,           Mutation::kEmptyRuntime,
                                 Mutation::kInconsistentRuntime, Mutation::kRuntimeInProcedure,
                                 Mutation::kForeignProcess,      Mutation::kNoParameters,
                                 Mutation::kConsistentRuntime};
  std::mt19937_64 rng(2024);
  auto compare = [&](const CCProgram& p, const std::vector<ProcName>& xs, const std::string& at) {
    const WfVerdict expected = brute_force_wf(p, xs);
    WfReport got;
    try {
      got = program_wf_dec(p, xs);
    } catch (const UsedProceduresViolated& e) {
      out.check(false, at + ": unexpected " + e.what());
      return;
    }
    out.check(got.ok() == expected.ok(), at + ": verdict differs");
    if (!got.ok()) {
      out.check(expected.violates(got.violation->clause),
                at + ": reported clause " + std::string(to_string(got.violation->clause)) +
                    " does not hold");
    }
    out.check(got.ok() == program_wf(p), at + ": disagrees with the direct predicate");
  };
  for (std::uint64_t seed = 0; seed < programs; ++seed) {
    const CCProgram p = gen_program(seed);
    const std::vector<ProcName> xs = declared_procedures(p);
    ++out.cases;
    compare(p, xs, "seed " + std::to_string(seed));
    for (Mutation m : kMutations) {
      auto mutated = mutate(p, m, rng);
      if (!mutated) continue;
      ++out.cases;
      const std::string at = "seed " + std::to_string(seed) + " mutation " +
                             std::to_string(static_cast<int>(m));
      compare(*mutated, xs, at);
      const bool should_hold = m == Mutation::kConsistentRuntime;
      out.check(brute_force_wf(*mutated, xs).ok() == should_hold, at + ": mutation misfired");
    }
  }
  return out;
}

SuiteOutcome deadlock_freedom_suite(std::size_t programs, std::size_t depth) {
  SuiteOutcome out;
  for (std::uint64_t seed = 0; seed < programs; ++seed, ++out.cases) {
    const CCProgram p = gen_program(seed);
    const State s = gen_state(seed, p);
    const std::string at = "seed " + std::to_string(seed);
    const VerifyReport progress = check_progress(p, s, depth);
    out.check(progress.passed, at + ": choreography stuck: " + progress.message);

    auto sp = epp(p, declared_procedures(p));
    if (!sp.ok()) {
      out.check(false, at + ": not projectable");
      continue;
    }
    std::set<std::pair<Network, State>> seen{{sp->network, s}};
    std::deque<std::tuple<Network, State, std::size_t>> queue{{sp->network, s, 0}};
    while (!queue.empty()) {
      auto [n, st, d] = queue.front();
      queue.pop_front();
      auto steps = sp_enabled(sp->procedures, n, st);
      if (steps.empty()) {
        out.check(n.empty(), at + ": network stuck at " + print_network(n));
        continue;
      }
      if (d == depth) continue;
      for (auto& e : steps) {
        if (seen.insert({e.network, e.state}).second) queue.emplace_back(e.network, e.state, d + 1);
      }
    }
  }
  return out;
}


SuiteOutcome projection_invariant_suite(std::size_t programs, std::size_t depth) {
  SuiteOutcome out;
  for (std::uint64_t seed = 0; seed < programs; ++seed, ++out.cases) {
    const CCProgram p = gen_program(seed);
    const State s0 = gen_state(seed, p);
    const std::string at = "seed " + std::to_string(seed);
    auto sp = epp(p, declared_procedures(p));
    if (!sp.ok()) {
      out.check(false, at + ": not projectable");
      continue;
    }
    const DefSet& defs = p.procedures;
    const ProcessSet ps = ccp_pn(p);
    // Every process of the program, not only those that just acted.
    auto invariant = [&](const Choreography& c, const Network& n) {
      ProcessSet all = ps;
      for (const ProcessName& q : n.support()) all.insert(q);
      auto expected = epp_c(defs, all, c);
      return expected.ok() && more_branches_net(n, *expected);
    };
    std::set<std::tuple<Choreography, State, Network>> seen{{p.main, s0, sp->network}};
    std::deque<std::tuple<Choreography, State, Network, std::size_t>> queue{
        {p.main, s0, sp->network, 0}};
    while (!queue.empty()) {
      auto [c, st, n, d] = queue.front();
      queue.pop_front();
      out.check(invariant(c, n), at + ": network below the projection of " + print_chor(c));
      if (d == depth) continue;
      for (const auto& step : cc_enabled(defs, c, st)) {
        auto next = sp_step(sp->procedures, n, st, corresponding(step.label));
        if (!next || next->state != step.state) {
          out.check(false, at + ": network cannot follow " + to_string(step.label));
          continue;
        }
        if (seen.insert({step.chor, step.state, next->network}).second) {
          queue.emplace_back(step.chor, step.state, std::move(next->network), d + 1);
        }
      }
    }
  }
  return out;
}

}  // namespace chorus::testing
