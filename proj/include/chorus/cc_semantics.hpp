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

// Labelled transition system of Core Choreographies, in three layers:
// rich-labelled steps of a choreography under a fixed set of definitions,
// observable steps of configurations, and multi-step closure.

#ifndef CHORUS_CC_SEMANTICS_HPP_
#define CHORUS_CC_SEMANTICS_HPP_

#include <compare>
#include <optional>
#include <span>
#include <vector>

#include "chorus/cc_syntax.hpp"
#include "chorus/labels.hpp"

namespace chorus {

struct CCConfiguration {
  CCProgram program;
  State state;
  friend bool operator==(const CCConfiguration&, const CCConfiguration&) = default;
  friend std::strong_ordering operator<=>(const CCConfiguration&, const CCConfiguration&) = default;
};

struct ChorStep {
  Choreography chor;
  State state;
  friend bool operator==(const ChorStep&, const ChorStep&) = default;
};

struct EnabledChorStep {
  RichLabel label;
  Choreography chor;
  State state;
};

/// The unique successor of `(c, s)` under `rl`, or nullopt if `rl` is not
/// enabled. States are canonical, so each rule has exactly one result.
std::optional<ChorStep> cc_step(const DefSet& defs, const Choreography& c, const State& s,
                                const RichLabel& rl);

/// Every enabled transition, duplicate-free. Head rules come first, then
/// delayed transitions in depth-first, left-to-right order.
std::vector<EnabledChorStep> cc_enabled(const DefSet& defs, const Choreography& c,
                                        const State& s);

std::vector<CCConfiguration> ccp_step(const CCConfiguration& conf, const TransitionLabel& tl);
std::vector<CCConfiguration> ccp_multistep(const CCConfiguration& conf,
                                           std::span<const TransitionLabel> tls);

}  // namespace chorus

#endif  // CHORUS_CC_SEMANTICS_HPP_
