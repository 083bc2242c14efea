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

#include "chorus/sp_syntax.hpp"

#include <algorithm>

#include "chorus/overloaded.hpp"

namespace chorus {

namespace beh {

Behaviour end() { return Behaviour{End{}}; }

Behaviour send(ProcessName to, Expr e, Behaviour cont, Ann ann) {
  return Behaviour{Send{std::move(to), std::move(e), std::move(ann), std::move(cont)}};
}

Behaviour recv(ProcessName from, VarName x, Behaviour cont, Ann ann) {
  return Behaviour{Recv{std::move(from), std::move(x), std::move(ann), std::move(cont)}};
}

Behaviour choose(ProcessName to, SelLabel l, Behaviour cont, Ann ann) {
  return Behaviour{Choose{std::move(to), l, std::move(ann), std::move(cont)}};
}

Behaviour branch(ProcessName from, std::optional<Offer> left, std::optional<Offer> right) {
  return Behaviour{Branch{std::move(from), std::move(left), std::move(right)}};
}

Behaviour cond(BExpr b, Behaviour then_branch, Behaviour else_branch) {
  return Behaviour{Cond{std::move(b), std::move(then_branch), std::move(else_branch)}};
}

Behaviour call(TargetProcName x) { return Behaviour{Call{std::move(x)}}; }

Offer offer(Behaviour body, Ann ann) { return Offer{std::move(ann), std::move(body)}; }

}  // namespace beh

std::size_t depth(const Behaviour& b) {
  return std::visit(
      overloaded{
          [](const beh::End&) -> std::size_t { return 0; },
          [](const beh::Call&) -> std::size_t { return 0; },
          [](const beh::Send& x) { return 1 + depth(*x.cont); },
          [](const beh::Recv& x) { return 1 + depth(*x.cont); },
          [](const beh::Choose& x) { return 1 + depth(*x.cont); },
          [](const beh::Branch& x) {
            std::size_t d = 0;
            if (x.left) d = std::max(d, depth(*x.left->body));
            if (x.right) d = std::max(d, depth(*x.right->body));
            return 1 + d;
          },
          [](const beh::Cond& x) {
            return 1 + std::max(depth(*x.then_branch), depth(*x.else_branch));
          },
      },
      b.node);
}

// ---------------------------------------------------------------------------

namespace {

const Behaviour& end_behaviour() {
  static const Behaviour kEnd = beh::end();
  return kEnd;
}

}  // namespace

Network Network::singleton(const ProcessName& p, Behaviour b) {
  return Network{}.with(p, std::move(b));
}

Network Network::from_entries(const Entries& entries) {
  Network n;
  for (const auto& [p, b] : entries) {
    if (!b.is_end()) n.entries_.emplace(p, b);
  }
  return n;
}

const Behaviour& Network::at(const ProcessName& p) const {
  auto it = entries_.find(p);
  return it == entries_.end() ? end_behaviour() : it->second;
}

Network Network::with(const ProcessName& p, Behaviour b) const {
  Network n = *this;
  if (b.is_end()) {
    n.entries_.erase(p);
  } else {
    n.entries_.insert_or_assign(p, std::move(b));
  }
  return n;
}

ProcessSet Network::support() const {
  ProcessSet out;
  for (const auto& [p, b] : entries_) out.insert(p);
  return out;
}

Network par(const Network& n, const Network& m) {
  Network out = m;
  for (const auto& [p, b] : n.entries()) out = out.with(p, b);
  return out;
}

Network remove(const Network& n, const ProcessName& p) { return n.with(p, beh::end()); }

bool network_eq(const Network& n, const Network& m) { return n == m; }

bool network_disjoint(const Network& n, const Network& m) {
  return std::none_of(n.entries().begin(), n.entries().end(),
                      [&](const auto& entry) { return !m.at(entry.first).is_end(); });
}

bool behaviour_wf(const ProcessName& p, const Behaviour& b) {
  return std::visit(
      overloaded{
          [](const beh::End&) { return true; },
          [](const beh::Call&) { return true; },
          [&](const beh::Send& x) { return x.to != p && behaviour_wf(p, *x.cont); },
          [&](const beh::Recv& x) { return x.from != p && behaviour_wf(p, *x.cont); },
          [&](const beh::Choose& x) { return x.to != p && behaviour_wf(p, *x.cont); },
          [&](const beh::Branch& x) {
            return x.from != p && (!x.left || behaviour_wf(p, *x.left->body)) &&
                   (!x.right || behaviour_wf(p, *x.right->body));
          },
          [&](const beh::Cond& x) {
            return behaviour_wf(p, *x.then_branch) && behaviour_wf(p, *x.else_branch);
          },
      },
      b.node);
}

bool network_wf(const Network& n) {
  return std::all_of(n.entries().begin(), n.entries().end(),
                     [](const auto& entry) { return behaviour_wf(entry.first, entry.second); });
}

// ---------------------------------------------------------------------------

void DefSetB::define(const TargetProcName& x, Behaviour b) {
  if (b.is_end()) {
    entries_.erase(x);
  } else {
    entries_.insert_or_assign(x, std::move(b));
  }
}

const Behaviour& DefSetB::at(const TargetProcName& x) const {
  auto it = entries_.find(x);
  return it == entries_.end() ? end_behaviour() : it->second;
}

}  // namespace chorus
