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

// Seeded random choreographic programs.
//
// Generated programs are initial, well-formed and projectable: every
// conditional starts both branches with selections from the deciding
// process to every other process occurring in either branch.

#ifndef CHORUS_GENERATOR_HPP_
#define CHORUS_GENERATOR_HPP_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "chorus/cc_syntax.hpp"

namespace chorus {

struct GenParams {
  std::size_t max_actions = 12;  // per choreography; selections included
  std::size_t max_processes = 4;
  std::size_t max_procedures = 2;
};

/// Same seed and parameters, same program.
CCProgram gen_program(std::uint64_t seed, const GenParams& params = {});

/// Random store over the processes of `p` and the generator's variables.
State gen_state(std::uint64_t seed, const CCProgram& p);

/// Names of the explicitly defined procedures.
std::vector<ProcName> declared_procedures(const CCProgram& p);

}  // namespace chorus

#endif  // CHORUS_GENERATOR_HPP_
