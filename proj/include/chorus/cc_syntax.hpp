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

// Core Choreographies: syntax trees, programs and well-formedness.

#ifndef CHORUS_CC_SYNTAX_HPP_
#define CHORUS_CC_SYNTAX_HPP_

#include <compare>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "chorus/box.hpp"
#include "chorus/foundation.hpp"

namespace chorus {

struct Com {
  ProcessName sender;
  Expr expr;
  ProcessName receiver;
  VarName var;
  friend bool operator==(const Com&, const Com&) = default;
  friend std::strong_ordering operator<=>(const Com&, const Com&) = default;
};

struct Sel {
  ProcessName sender;
  ProcessName receiver;
  SelLabel label;
  friend bool operator==(const Sel&, const Sel&) = default;
  friend std::strong_ordering operator<=>(const Sel&, const Sel&) = default;
};

using Eta = std::variant<Com, Sel>;

const ProcessName& eta_sender(const Eta& eta);
const ProcessName& eta_receiver(const Eta& eta);

struct Choreography;

namespace chor {

struct Interaction {
  Eta eta;
  Ann ann;
  Box<Choreography> cont;
  friend bool operator==(const Interaction&, const Interaction&) = default;
  friend std::strong_ordering operator<=>(const Interaction&, const Interaction&) = default;
};
struct Cond {
  ProcessName at;
  BExpr guard;
  Box<Choreography> then_branch;
  Box<Choreography> else_branch;
  friend bool operator==(const Cond&, const Cond&) = default;
  friend std::strong_ordering operator<=>(const Cond&, const Cond&) = default;
};
struct Call {
  ProcName procedure;
  friend bool operator==(const Call&, const Call&) = default;
  friend std::strong_ordering operator<=>(const Call&, const Call&) = default;
};
/// Runtime term: `procedure` has started, `pending` have not joined yet.
/// `pending` is kept sorted and duplicate-free.
struct RTCall {
  ProcName procedure;
  std::vector<ProcessName> pending;
  Box<Choreography> body;
  friend bool operator==(const RTCall&, const RTCall&) = default;
  friend std::strong_ordering operator<=>(const RTCall&, const RTCall&) = default;
};
struct End {
  friend bool operator==(const End&, const End&) = default;
  friend std::strong_ordering operator<=>(const End&, const End&) = default;
};

}  // namespace chor

struct Choreography {
  using Node = std::variant<chor::Interaction, chor::Cond, chor::Call, chor::RTCall, chor::End>;
  Node node{chor::End{}};

  bool is_end() const { return std::holds_alternative<chor::End>(node); }

  friend bool operator==(const Choreography&, const Choreography&) = default;
  friend std::strong_ordering operator<=>(const Choreography&, const Choreography&) = default;
};

/// Sorts and deduplicates a process list.
std::vector<ProcessName> canonical_processes(std::vector<ProcessName> ps);

namespace chor {
Choreography com(ProcessName p, Expr e, ProcessName q, VarName x, Choreography cont,
                 Ann ann = {});
Choreography sel(ProcessName p, ProcessName q, SelLabel l, Choreography cont, Ann ann = {});
Choreography interaction(Eta eta, Ann ann, Choreography cont);
Choreography cond(ProcessName p, BExpr b, Choreography then_branch, Choreography else_branch);
Choreography call(ProcName x);
Choreography rt_call(ProcName x, std::vector<ProcessName> pending, Choreography body);
Choreography end();
}  // namespace chor

// ---------------------------------------------------------------------------
// Programs

struct Procedure {
  std::vector<ProcessName> params;  // sorted, duplicate-free
  Choreography body;
  friend bool operator==(const Procedure&, const Procedure&) = default;
  friend std::strong_ordering operator<=>(const Procedure&, const Procedure&) = default;
};

/// Total map from procedure names to definitions.
///
/// Names outside the explicit support map to `(<_>, end)`: a single reserved
/// process that cannot be written in source text, and a terminated body.
class DefSet {
 public:
  static const ProcessName& default_process();
  static const Procedure& default_procedure();

  void define(const ProcName& x, std::vector<ProcessName> params, Choreography body);

  const Procedure& at(const ProcName& x) const;
  const std::vector<ProcessName>& vars(const ProcName& x) const { return at(x).params; }
  const Choreography& procs(const ProcName& x) const { return at(x).body; }
  ProcessSet names(const ProcName& x) const;
  bool is_explicit(const ProcName& x) const { return defs_.count(x) != 0; }
  const std::map<ProcName, Procedure>& explicit_entries() const { return defs_; }

  friend bool operator==(const DefSet&, const DefSet&) = default;
  friend std::strong_ordering operator<=>(const DefSet& a, const DefSet& b) {
    return a.defs_ <=> b.defs_;
  }

 private:
  std::map<ProcName, Procedure> defs_;
};

struct CCProgram {
  DefSet procedures;
  Choreography main;
  friend bool operator==(const CCProgram&, const CCProgram&) = default;
  friend std::strong_ordering operator<=>(const CCProgram&, const CCProgram&) = default;
};

using NamesFn = std::function<ProcessSet(const ProcName&)>;

NamesFn names_of(const DefSet& defs);

// ---------------------------------------------------------------------------
// Locations inside programs, used by diagnostics and source spans.

enum class PathStep { kCont, kThen, kElse, kBody };

using Path = std::vector<PathStep>;

struct Location {
  std::optional<ProcName> procedure;  // nullopt = main
  Path path;
  friend bool operator==(const Location&, const Location&) = default;
  friend std::strong_ordering operator<=>(const Location&, const Location&) = default;
};

std::string to_string(const Location& loc);

/// Subterm reached by following `path`; nullopt if the path leaves the tree.
std::optional<Choreography> subterm_at(const Choreography& c, const Path& path);

// ---------------------------------------------------------------------------
// Well-formedness

bool initial(const Choreography& c);
bool no_self_comm(const Choreography& c);
bool no_empty_ann(const Choreography& c);
bool chor_wf(const Choreography& c);
bool consistent(const NamesFn& names, const Choreography& c);

ProcessSet ccc_pn(const Choreography& c, const NamesFn& names);
ProcessSet ccp_pn(const CCProgram& p);

/// Procedure names that a program must be checked against: the explicit
/// support of its definitions together with `xs`.
std::vector<ProcName> check_set(const CCProgram& p, const std::vector<ProcName>& xs);

bool well_ann(const CCProgram& p, const ProcName& x);
/// Well-formedness over the explicit support of the procedure map.
bool program_wf(const CCProgram& p);

/// Direct procedure calls of `c` (including runtime calls) all target `xs`.
bool used_procedures_c(const Choreography& c, const std::vector<ProcName>& xs);
bool used_procedures(const CCProgram& p, const std::vector<ProcName>& xs);

enum class WfClause { kNoSelfComm, kNoEmptyAnn, kConsistent, kInitial, kWellAnn };

std::string_view to_string(WfClause clause);

struct WfViolation {
  WfClause clause;
  Location where;
  std::string detail;
};

struct WfReport {
  std::optional<WfViolation> violation;
  bool ok() const { return !violation.has_value(); }
};

class UsedProceduresViolated : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Decides well-formedness for programs that only use the procedures in `xs`.
/// Throws UsedProceduresViolated when that precondition does not hold.
/// The first violation is reported: main before procedures (in name order),
/// nodes in depth-first, left-to-right order, and at each node the clauses in
/// the order no_self_comm, no_empty_ann, consistent (main) or no_self_comm,
/// initial (procedures). well_ann is checked after a procedure's body walk.
WfReport program_wf_dec(const CCProgram& p, const std::vector<ProcName>& xs);

}  // namespace chorus

#endif  // CHORUS_CC_SYNTAX_HPP_
