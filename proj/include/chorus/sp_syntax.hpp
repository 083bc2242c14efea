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

// Stateful Processes: behaviours, networks and programs.

#ifndef CHORUS_SP_SYNTAX_HPP_
#define CHORUS_SP_SYNTAX_HPP_

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <variant>

#include "chorus/box.hpp"
#include "chorus/foundation.hpp"

namespace chorus {

struct Behaviour;

namespace beh {

struct End {
  friend bool operator==(const End&, const End&) = default;
  friend std::strong_ordering operator<=>(const End&, const End&) = default;
};
struct Send {
  ProcessName to;
  Expr expr;
  Ann ann;
  Box<Behaviour> cont;
  friend bool operator==(const Send&, const Send&) = default;
  friend std::strong_ordering operator<=>(const Send&, const Send&) = default;
};
struct Recv {
  ProcessName from;
  VarName var;
  Ann ann;
  Box<Behaviour> cont;
  friend bool operator==(const Recv&, const Recv&) = default;
  friend std::strong_ordering operator<=>(const Recv&, const Recv&) = default;
};
struct Choose {
  ProcessName to;
  SelLabel label;
  Ann ann;
  Box<Behaviour> cont;
  friend bool operator==(const Choose&, const Choose&) = default;
  friend std::strong_ordering operator<=>(const Choose&, const Choose&) = default;
};
/// One offered continuation of a branching term.
struct Offer {
  Ann ann;
  Box<Behaviour> body;
  friend bool operator==(const Offer&, const Offer&) = default;
  friend std::strong_ordering operator<=>(const Offer&, const Offer&) = default;
};
struct Branch {
  ProcessName from;
  std::optional<Offer> left;
  std::optional<Offer> right;

  const std::optional<Offer>& slot(SelLabel l) const {
    return l == SelLabel::kLeft ? left : right;
  }

  friend bool operator==(const Branch&, const Branch&) = default;
  friend std::strong_ordering operator<=>(const Branch&, const Branch&) = default;
};
struct Cond {
  BExpr guard;
  Box<Behaviour> then_branch;
  Box<Behaviour> else_branch;
  friend bool operator==(const Cond&, const Cond&) = default;
  friend std::strong_ordering operator<=>(const Cond&, const Cond&) = default;
};
struct Call {
  TargetProcName procedure;
  friend bool operator==(const Call&, const Call&) = default;
  friend std::strong_ordering operator<=>(const Call&, const Call&) = default;
};

}  // namespace beh

struct Behaviour {
  using Node =
      std::variant<beh::End, beh::Send, beh::Recv, beh::Choose, beh::Branch, beh::Cond, beh::Call>;
  Node node{beh::End{}};

  bool is_end() const { return std::holds_alternative<beh::End>(node); }

  friend bool operator==(const Behaviour&, const Behaviour&) = default;
  friend std::strong_ordering operator<=>(const Behaviour&, const Behaviour&) = default;
};

namespace beh {
Behaviour end();
Behaviour send(ProcessName to, Expr e, Behaviour cont, Ann ann = {});
Behaviour recv(ProcessName from, VarName x, Behaviour cont, Ann ann = {});
Behaviour choose(ProcessName to, SelLabel l, Behaviour cont, Ann ann = {});
Behaviour branch(ProcessName from, std::optional<Offer> left, std::optional<Offer> right);
Behaviour cond(BExpr b, Behaviour then_branch, Behaviour else_branch);
Behaviour call(TargetProcName x);
Offer offer(Behaviour body, Ann ann = {});
}  // namespace beh

/// Height of the syntax tree; branch offers count as children.
std::size_t depth(const Behaviour& b);

// ---------------------------------------------------------------------------
// Networks

/// Total map from processes to behaviours, terminated outside a finite
/// support. No entry is ever stored as `end`.
class Network {
 public:
  using Entries = std::map<ProcessName, Behaviour>;

  Network() = default;

  static Network singleton(const ProcessName& p, Behaviour b);
  static Network from_entries(const Entries& entries);

  const Behaviour& at(const ProcessName& p) const;
  /// Same network with `p` mapped to `b`.
  Network with(const ProcessName& p, Behaviour b) const;
  const Entries& entries() const { return entries_; }
  ProcessSet support() const;
  bool empty() const { return entries_.empty(); }

  friend bool operator==(const Network&, const Network&) = default;
  friend std::strong_ordering operator<=>(const Network& a, const Network& b) {
    return a.entries_ <=> b.entries_;
  }

 private:
  Entries entries_;
};

/// Parallel composition: `n` wherever it is not terminated, `m` elsewhere.
Network par(const Network& n, const Network& m);
Network remove(const Network& n, const ProcessName& p);
bool network_eq(const Network& n, const Network& m);
bool network_disjoint(const Network& n, const Network& m);

/// No action of `b` names `p` as its peer.
bool behaviour_wf(const ProcessName& p, const Behaviour& b);
bool network_wf(const Network& n);

/// Projected procedure definitions; terminated outside the explicit support.
class DefSetB {
 public:
  using Entries = std::map<TargetProcName, Behaviour>;

  void define(const TargetProcName& x, Behaviour b);
  const Behaviour& at(const TargetProcName& x) const;
  const Entries& entries() const { return entries_; }

  friend bool operator==(const DefSetB&, const DefSetB&) = default;
  friend std::strong_ordering operator<=>(const DefSetB& a, const DefSetB& b) {
    return a.entries_ <=> b.entries_;
  }

 private:
  Entries entries_;
};

struct SPProgram {
  DefSetB procedures;
  Network network;
  friend bool operator==(const SPProgram&, const SPProgram&) = default;
  friend std::strong_ordering operator<=>(const SPProgram&, const SPProgram&) = default;
};

}  // namespace chorus

#endif  // CHORUS_SP_SYNTAX_HPP_
