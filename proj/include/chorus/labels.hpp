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

// Transition labels shared by both calculi.
//
// Rich labels carry everything needed to identify a transition (the stored
// variable, the procedure being entered); observable labels only carry what
// an outside observer sees. `forget` maps the former onto the latter.

#ifndef CHORUS_LABELS_HPP_
#define CHORUS_LABELS_HPP_

#include <compare>
#include <string>
#include <variant>

#include "chorus/foundation.hpp"

namespace chorus {

namespace rich {

struct Com {
  ProcessName from;
  Value value;
  ProcessName to;
  VarName var;
  friend bool operator==(const Com&, const Com&) = default;
  friend std::strong_ordering operator<=>(const Com&, const Com&) = default;
};
struct Sel {
  ProcessName from;
  ProcessName to;
  SelLabel label;
  friend bool operator==(const Sel&, const Sel&) = default;
  friend std::strong_ordering operator<=>(const Sel&, const Sel&) = default;
};
struct Cond {
  ProcessName at;
  friend bool operator==(const Cond&, const Cond&) = default;
  friend std::strong_ordering operator<=>(const Cond&, const Cond&) = default;
};
template <class Target>
struct Call {
  Target procedure;
  ProcessName at;
  friend bool operator==(const Call&, const Call&) = default;
  friend std::strong_ordering operator<=>(const Call&, const Call&) = default;
};

}  // namespace rich

/// Rich label, parameterised on the procedure-name type of the calculus.
template <class Target>
struct BasicRichLabel {
  using Kind = std::variant<rich::Com, rich::Sel, rich::Cond, rich::Call<Target>>;
  Kind kind;

  friend bool operator==(const BasicRichLabel&, const BasicRichLabel&) = default;
  friend std::strong_ordering operator<=>(const BasicRichLabel&, const BasicRichLabel&) = default;
};

using RichLabel = BasicRichLabel<ProcName>;
using SPRichLabel = BasicRichLabel<TargetProcName>;

namespace observable {

struct Com {
  ProcessName from;
  Value value;
  ProcessName to;
  friend bool operator==(const Com&, const Com&) = default;
  friend std::strong_ordering operator<=>(const Com&, const Com&) = default;
};
struct Sel {
  ProcessName from;
  ProcessName to;
  SelLabel label;
  friend bool operator==(const Sel&, const Sel&) = default;
  friend std::strong_ordering operator<=>(const Sel&, const Sel&) = default;
};
struct Tau {
  ProcessName at;
  friend bool operator==(const Tau&, const Tau&) = default;
  friend std::strong_ordering operator<=>(const Tau&, const Tau&) = default;
};

}  // namespace observable

struct TransitionLabel {
  using Kind = std::variant<observable::Com, observable::Sel, observable::Tau>;
  Kind kind;

  friend bool operator==(const TransitionLabel&, const TransitionLabel&) = default;
  friend std::strong_ordering operator<=>(const TransitionLabel&, const TransitionLabel&) = default;
};

namespace label {
RichLabel com(ProcessName p, Value v, ProcessName q, VarName x);
RichLabel sel(ProcessName p, ProcessName q, SelLabel l);
RichLabel cond(ProcessName p);
RichLabel call(ProcName x, ProcessName p);
SPRichLabel sp_com(ProcessName p, Value v, ProcessName q, VarName x);
SPRichLabel sp_sel(ProcessName p, ProcessName q, SelLabel l);
SPRichLabel sp_cond(ProcessName p);
SPRichLabel sp_call(TargetProcName x, ProcessName p);
TransitionLabel t_com(ProcessName p, Value v, ProcessName q);
TransitionLabel t_sel(ProcessName p, ProcessName q, SelLabel l);
TransitionLabel t_tau(ProcessName p);
}  // namespace label

template <class Target>
TransitionLabel forget(const BasicRichLabel<Target>& rl) {
  struct Visitor {
    TransitionLabel operator()(const rich::Com& c) const {
      return {observable::Com{c.from, c.value, c.to}};
    }
    TransitionLabel operator()(const rich::Sel& s) const {
      return {observable::Sel{s.from, s.to, s.label}};
    }
    TransitionLabel operator()(const rich::Cond& c) const { return {observable::Tau{c.at}}; }
    TransitionLabel operator()(const rich::Call<Target>& c) const {
      return {observable::Tau{c.at}};
    }
  };
  return std::visit(Visitor{}, rl.kind);
}

/// Processes taking part in a transition.
template <class Target>
ProcessSet participants(const BasicRichLabel<Target>& rl) {
  struct Visitor {
    ProcessSet operator()(const rich::Com& c) const { return {c.from, c.to}; }
    ProcessSet operator()(const rich::Sel& s) const { return {s.from, s.to}; }
    ProcessSet operator()(const rich::Cond& c) const { return {c.at}; }
    ProcessSet operator()(const rich::Call<Target>& c) const { return {c.at}; }
  };
  return std::visit(Visitor{}, rl.kind);
}

/// Canonical text: `com(p,v,q)`, `sel(p,q,left)`, `tau(p)`.
std::string to_string(const TransitionLabel& tl);
/// `com(p,v,q,x)`, `sel(p,q,l)`, `cond(p)`, `call(X,p)` / `call(X@q,p)`.
std::string to_string(const RichLabel& rl);
std::string to_string(const SPRichLabel& rl);
std::string to_string(const TargetProcName& x);

}  // namespace chorus

#endif  // CHORUS_LABELS_HPP_
