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

// Endpoint projection from choreographies to process networks.
//
// Merge and projection are partial. Both are total functions here that
// return an empty value on failure, together with the reason and, for
// projection, the conditional whose branches could not be merged.

#ifndef CHORUS_EPP_HPP_
#define CHORUS_EPP_HPP_

#include <optional>
#include <string>
#include <vector>

#include "chorus/cc_syntax.hpp"
#include "chorus/sp_syntax.hpp"

namespace chorus {

/// Branching order `b1 >> b2`: `b1` offers at least the branches of `b2`.
bool more_branches(const Behaviour& b1, const Behaviour& b2);
/// Pointwise branching order over the union of supports.
bool more_branches_net(const Network& n1, const Network& n2);

struct Merged {
  std::optional<Behaviour> value;
  std::string mismatch;  // empty iff value is set

  explicit operator bool() const { return value.has_value(); }
};

/// Least upper bound in the branching order, when it exists.
Merged merge(const Behaviour& b1, const Behaviour& b2);

struct ProjectionFailure {
  ProcessName process;
  Location where;  // the conditional whose branches do not merge
  std::string reason;
};

std::string to_string(const ProjectionFailure& f);

template <class T>
struct Projected {
  std::optional<T> value;
  std::optional<ProjectionFailure> failure;

  bool ok() const { return value.has_value(); }
  const T& operator*() const { return *value; }
  const T* operator->() const { return &*value; }
};

/// Behaviour of `p` in `c`. Failure locations are relative to `c` and carry
/// no procedure name.
Projected<Behaviour> bproj(const DefSet& defs, const Choreography& c, const ProcessName& p);

bool projectable_b(const DefSet& defs, const Choreography& c, const ProcessName& p);
bool projectable_c(const DefSet& defs, const Choreography& c, const ProcessSet& ps);
/// Every procedure in `xs` and in the explicit support projects for each of
/// its parameters.
bool projectable_d(const DefSet& defs, const std::vector<ProcName>& xs);
bool projectable_p(const CCProgram& p, const std::vector<ProcName>& xs);

/// Projectability that survives execution: runtime calls only differ from
/// their procedure body in ways that pending processes cannot observe.
bool str_proj(const DefSet& defs, const Choreography& c, const ProcessName& r);
bool str_proj_p(const CCProgram& p, const std::vector<ProcName>& xs);

Projected<Network> epp_c(const DefSet& defs, const ProcessSet& ps, const Choreography& c);
Projected<DefSetB> epp_d(const DefSet& defs, const std::vector<ProcName>& xs);
Projected<SPProgram> epp(const CCProgram& p, const std::vector<ProcName>& xs);

}  // namespace chorus

#endif  // CHORUS_EPP_HPP_
