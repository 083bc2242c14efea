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

// Bounded checks of the correspondence between a choreography and its
// projection, and of the basic properties of the choreography semantics.
//
// Every check explores configurations breadth-first up to a depth bound.
// Failures carry the path from the initial configuration, so the trace can be
// fed back to ccp_multistep / spp_multistep.

#ifndef CHORUS_VERIFY_HPP_
#define CHORUS_VERIFY_HPP_

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "chorus/cc_semantics.hpp"
#include "chorus/sp_semantics.hpp"

namespace chorus {

struct TraceEntry {
  TransitionLabel label;
  std::optional<RichLabel> cc;
  std::optional<SPRichLabel> sp;
};

struct VerifyReport {
  std::string property;
  bool passed = true;
  std::size_t nodes_explored = 0;
  /// Path to the failing step; the last entry is the offending transition.
  std::vector<TraceEntry> trace;
  std::string message;
};

class NotStronglyProjectable : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The network-side label matching a choreography label.
SPRichLabel corresponding(const RichLabel& rl);
/// Inverse of `corresponding`; nullopt for calls to another process's copy.
std::optional<RichLabel> corresponding(const SPRichLabel& rl);

/// Every choreography step is matched by the projection.
/// Throws NotStronglyProjectable unless str_proj_p(p, xs).
VerifyReport check_epp_complete(const CCProgram& p, const std::vector<ProcName>& xs,
                                const State& s, std::size_t depth);
/// Same game against an explicitly supplied implementation.
VerifyReport check_epp_complete(const CCProgram& p, const std::vector<ProcName>& xs,
                                const SPProgram& impl, const State& s, std::size_t depth);

/// Every step of the projection is matched by the choreography.
VerifyReport check_epp_sound(const CCProgram& p, const std::vector<ProcName>& xs, const State& s,
                             std::size_t depth);
VerifyReport check_epp_sound(const CCProgram& p, const std::vector<ProcName>& xs,
                             const SPProgram& impl, const State& s, std::size_t depth);

VerifyReport check_determinism(const CCProgram& p, const State& s, std::size_t depth);
VerifyReport check_diamond(const CCProgram& p, const State& s, std::size_t depth);
/// Vacuous unless program_wf(p).
VerifyReport check_progress(const CCProgram& p, const State& s, std::size_t depth);
VerifyReport check_termination_unique(const CCProgram& p, const State& s, std::size_t depth);

}  // namespace chorus

#endif  // CHORUS_VERIFY_HPP_
