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

#ifndef CHORUS_SP_SEMANTICS_HPP_
#define CHORUS_SP_SEMANTICS_HPP_

#include <compare>
#include <optional>
#include <span>
#include <vector>

#include "chorus/labels.hpp"
#include "chorus/sp_syntax.hpp"

namespace chorus {

struct SPConfiguration {
  SPProgram program;
  State state;
  friend bool operator==(const SPConfiguration&, const SPConfiguration&) = default;
  friend std::strong_ordering operator<=>(const SPConfiguration&, const SPConfiguration&) = default;
};

struct NetStep {
  Network network;
  State state;
  friend bool operator==(const NetStep&, const NetStep&) = default;
};

struct EnabledNetStep {
  SPRichLabel label;
  Network network;
  State state;
};

std::optional<NetStep> sp_step(const DefSetB& defs, const Network& n, const State& s,
                               const SPRichLabel& rl);

/// Every enabled transition. Processes are visited in name order; a
/// communication or selection is reported once, under its sender.
std::vector<EnabledNetStep> sp_enabled(const DefSetB& defs, const Network& n, const State& s);

std::vector<SPConfiguration> spp_step(const SPConfiguration& conf, const TransitionLabel& tl);
std::vector<SPConfiguration> spp_multistep(const SPConfiguration& conf,
                                           std::span<const TransitionLabel> tls);

}  // namespace chorus

#endif  // CHORUS_SP_SEMANTICS_HPP_
