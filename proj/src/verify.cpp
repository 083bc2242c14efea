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

#include "chorus/verify.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <tuple>
#include <utility>

#include "chorus/epp.hpp"
#include "chorus/overloaded.hpp"

namespace chorus {

SPRichLabel corresponding(const RichLabel& rl) {
  return std::visit(overloaded{
                        [](const rich::Com& c) { return SPRichLabel{c}; },
                        [](const rich::Sel& c) { return SPRichLabel{c}; },
                        [](const rich::Cond& c) { return SPRichLabel{c}; },
                        [](const rich::Call<ProcName>& c) {
                          return label::sp_call({c.procedure, c.at}, c.at);
                        },
                    },
                    rl.kind);
}

std::optional<RichLabel> corresponding(const SPRichLabel& rl) {
  return std::visit(overloaded{
                        [](const rich::Com& c) -> std::optional<RichLabel> { return RichLabel{c}; },
                        [](const rich::Sel& c) -> std::optional<RichLabel> { return RichLabel{c}; },
                        [](const rich::Cond& c) -> std::optional<RichLabel> { return RichLabel{c}; },
                        [](const rich::Call<TargetProcName>& c) -> std::optional<RichLabel> {
                          if (c.procedure.process != c.at) return std::nullopt;
                          return label::call(c.procedure.procedure, c.at);
                        },
                    },
                    rl.kind);
}

namespace {

/// Breadth-first search tree with a visited set. Nodes are addressed by
/// insertion index; index 0 is the root.
template <class Key>
class SearchTree {
 public:
  struct Node {
    Key key;
    std::size_t parent;
    std::optional<TraceEntry> edge;
    std::size_t depth;
  };

  explicit SearchTree(Key root) { add(std::move(root), 0, std::nullopt, 0); }

  void add(Key key, std::size_t parent, std::optional<TraceEntry> edge, std::size_t depth) {
    if (!seen_.insert(key).second) return;
    nodes_.push_back(Node{std::move(key), parent, std::move(edge), depth});
  }

  std::size_t size() const { return nodes_.size(); }
  const Node& operator[](std::size_t i) const { return nodes_[i]; }

  std::vector<TraceEntry> path_to(std::size_t i) const {
    std::vector<TraceEntry> out;
    for (; i != 0; i = nodes_[i].parent) out.push_back(*nodes_[i].edge);
    std::reverse(out.begin(), out.end());
    return out;
  }

 private:
  std::vector<Node> nodes_;
  std::set<Key> seen_;
};

VerifyReport failure(std::string property, std::vector<TraceEntry> trace, std::string message,
                     std::size_t explored) {
  return VerifyReport{std::move(property), false, explored, std::move(trace), std::move(message)};
}

TraceEntry cc_entry(const RichLabel& rl) { return TraceEntry{forget(rl), rl, std::nullopt}; }

// ---------------------------------------------------------------------------
// Projection games

using GameKey = std::tuple<Choreography, State, Network>;

/// The processes that moved still have at least the branches of their
/// projection. Bystanders keep their behaviour while their projection can
/// only lose branches, so from an anchored root this gives the invariant
/// for the whole network.
bool anchored(const DefSet& defs, const Choreography& c, const Network& n,
              const ProcessSet& moved) {
  for (const ProcessName& p : moved) {
    Projected<Behaviour> expected = bproj(defs, c, p);
    if (!expected.ok() || !more_branches(n.at(p), *expected)) return false;
  }
  return true;
}

void require_str_proj(const CCProgram& p, const std::vector<ProcName>& xs) {
  if (!str_proj_p(p, xs)) {
    throw NotStronglyProjectable("program is not strongly projectable");
  }
}

SPProgram projection_of(const CCProgram& p, const std::vector<ProcName>& xs) {
  require_str_proj(p, xs);
  return *epp(p, xs);
}

}  // namespace

VerifyReport check_epp_complete(const CCProgram& p, const std::vector<ProcName>& xs,
                                const State& s, std::size_t depth) {
  return check_epp_complete(p, xs, projection_of(p, xs), s, depth);
}

VerifyReport check_epp_complete(const CCProgram& p, const std::vector<ProcName>& xs,
                                const SPProgram& impl, const State& s, std::size_t depth) {
  require_str_proj(p, xs);
  const std::string property = "complete";
  const DefSet& defs = p.procedures;
  SearchTree<GameKey> tree(GameKey{p.main, s, impl.network});
  for (std::size_t i = 0; i < tree.size(); ++i) {
    if (tree[i].depth >= depth) continue;
    const auto [c, state, net] = tree[i].key;
    for (const auto& step : cc_enabled(defs, c, state)) {
      const SPRichLabel sprl = corresponding(step.label);
      TraceEntry entry{forget(step.label), step.label, sprl};
      auto path = [&] {
        auto t = tree.path_to(i);
        t.push_back(entry);
        return t;
      };
      std::optional<NetStep> next = sp_step(impl.procedures, net, state, sprl);
      if (!next || next->state != step.state) {
        return failure(property, path(), "network cannot perform " + to_string(sprl), tree.size());
      }
      if (!anchored(defs, step.chor, next->network, participants(step.label))) {
        return failure(property, path(),
                       "network after " + to_string(sprl) + " lacks branches of the projection",
                       tree.size());
      }
      tree.add(GameKey{step.chor, step.state, std::move(next->network)}, i, std::move(entry),
               tree[i].depth + 1);
    }
  }
  return VerifyReport{property, true, tree.size(), {}, {}};
}

VerifyReport check_epp_sound(const CCProgram& p, const std::vector<ProcName>& xs, const State& s,
                             std::size_t depth) {
  return check_epp_sound(p, xs, projection_of(p, xs), s, depth);
}

VerifyReport check_epp_sound(const CCProgram& p, const std::vector<ProcName>& xs,
                             const SPProgram& impl, const State& s, std::size_t depth) {
  require_str_proj(p, xs);
  const std::string property = "sound";
  const DefSet& defs = p.procedures;
  SearchTree<GameKey> tree(GameKey{p.main, s, impl.network});
  for (std::size_t i = 0; i < tree.size(); ++i) {
    if (tree[i].depth >= depth) continue;
    const auto [c, state, net] = tree[i].key;
    for (const auto& step : sp_enabled(impl.procedures, net, state)) {
      TraceEntry entry{forget(step.label), corresponding(step.label), step.label};
      auto path = [&] {
        auto t = tree.path_to(i);
        t.push_back(entry);
        return t;
      };
      if (!entry.cc) {
        return failure(property, path(),
                       "call " + to_string(step.label) + " enters another process's copy",
                       tree.size());
      }
      std::optional<ChorStep> next = cc_step(defs, c, state, *entry.cc);
      if (!next || next->state != step.state) {
        return failure(property, path(), "choreography cannot perform " + to_string(*entry.cc),
                       tree.size());
      }
      if (!anchored(defs, next->chor, step.network, participants(step.label))) {
        return failure(property, path(),
                       "network after " + to_string(step.label) +
                           " lacks branches of the projection",
                       tree.size());
      }
      tree.add(GameKey{std::move(next->chor), step.state, step.network}, i, std::move(entry),
               tree[i].depth + 1);
    }
  }
  return VerifyReport{property, true, tree.size(), {}, {}};
}

// ---------------------------------------------------------------------------
// Properties of the choreography semantics

namespace {

using ChorKey = std::pair<Choreography, State>;
using Tree = SearchTree<ChorKey>;

/// Inspects one reachable configuration; returns the failing trace suffix and
/// message, or nullopt.
using Inspect = std::function<std::optional<std::pair<std::vector<TraceEntry>, std::string>>(
    const Choreography&, const State&, const std::vector<EnabledChorStep>&)>;

VerifyReport explore(const std::string& property, const CCProgram& p, const State& s,
                     std::size_t depth, const Inspect& inspect) {
  Tree tree(ChorKey{p.main, s});
  for (std::size_t i = 0; i < tree.size(); ++i) {
    const auto [c, state] = tree[i].key;
    std::vector<EnabledChorStep> steps = cc_enabled(p.procedures, c, state);
    if (auto bad = inspect(c, state, steps)) {
      std::vector<TraceEntry> trace = tree.path_to(i);
      trace.insert(trace.end(), bad->first.begin(), bad->first.end());
      return failure(property, std::move(trace), std::move(bad->second), tree.size());
    }
    if (tree[i].depth >= depth) continue;
    for (auto& step : steps) {
      tree.add(ChorKey{std::move(step.chor), std::move(step.state)}, i, cc_entry(step.label),
               tree[i].depth + 1);
    }
  }
  return VerifyReport{property, true, tree.size(), {}, {}};
}

}  // namespace

VerifyReport check_determinism(const CCProgram& p, const State& s, std::size_t depth) {
  const DefSet& defs = p.procedures;
  return explore("determinism", p, s, depth,
                 [&](const Choreography& c, const State& state,
                     const std::vector<EnabledChorStep>& steps)
                     -> std::optional<std::pair<std::vector<TraceEntry>, std::string>> {
                   std::set<RichLabel> labels;
                   std::set<ChorKey> targets;
                   for (const auto& step : steps) {
                     if (!labels.insert(step.label).second) {
                       return std::pair{std::vector{cc_entry(step.label)},
                                        std::string("label enumerated twice")};
                     }
                     std::optional<ChorStep> again = cc_step(defs, c, state, step.label);
                     if (!again || again->chor != step.chor || again->state != step.state) {
                       return std::pair{std::vector{cc_entry(step.label)},
                                        std::string("step is not a function of its label")};
                     }
                     if (!targets.insert(ChorKey{step.chor, step.state}).second) {
                       return std::pair{std::vector{cc_entry(step.label)},
                                        std::string("two labels reach the same configuration")};
                     }
                   }
                   return std::nullopt;
                 });
}

VerifyReport check_diamond(const CCProgram& p, const State& s, std::size_t depth) {
  const DefSet& defs = p.procedures;
  return explore(
      "diamond", p, s, depth,
      [&](const Choreography&, const State&, const std::vector<EnabledChorStep>& steps)
          -> std::optional<std::pair<std::vector<TraceEntry>, std::string>> {
        for (std::size_t i = 0; i < steps.size(); ++i) {
          for (std::size_t j = i + 1; j < steps.size(); ++j) {
            const auto& a = steps[i];
            const auto& b = steps[j];
            std::optional<ChorStep> ab = cc_step(defs, a.chor, a.state, b.label);
            std::optional<ChorStep> ba = cc_step(defs, b.chor, b.state, a.label);
            if (!ab) {
              return std::pair{std::vector{cc_entry(a.label), cc_entry(b.label)},
                               std::string("second label disabled by the first")};
            }
            if (!ba) {
              return std::pair{std::vector{cc_entry(b.label), cc_entry(a.label)},
                               std::string("second label disabled by the first")};
            }
            if (*ab != *ba) {
              return std::pair{std::vector{cc_entry(a.label), cc_entry(b.label)},
                               std::string("the two orders do not converge")};
            }
          }
        }
        return std::nullopt;
      });
}

VerifyReport check_progress(const CCProgram& p, const State& s, std::size_t depth) {
  if (!program_wf(p)) {
    return VerifyReport{"progress", true, 0, {}, "vacuous: program is not well-formed"};
  }
  return explore("progress", p, s, depth,
                 [](const Choreography& c, const State&, const std::vector<EnabledChorStep>& steps)
                     -> std::optional<std::pair<std::vector<TraceEntry>, std::string>> {
                   if (!c.is_end() && steps.empty()) {
                     return std::pair{std::vector<TraceEntry>{},
                                      std::string("stuck before termination")};
                   }
                   return std::nullopt;
                 });
}

VerifyReport check_termination_unique(const CCProgram& p, const State& s, std::size_t depth) {
  std::optional<State> terminal;
  return explore("termination", p, s, depth,
                 [&](const Choreography& c, const State& state, const std::vector<EnabledChorStep>&)
                     -> std::optional<std::pair<std::vector<TraceEntry>, std::string>> {
                   if (!c.is_end()) return std::nullopt;
                   if (!terminal) {
                     terminal = state;
                   } else if (*terminal != state) {
                     return std::pair{std::vector<TraceEntry>{},
                                      std::string("terminated with a different state")};
                   }
                   return std::nullopt;
                 });
}

}  // namespace chorus
