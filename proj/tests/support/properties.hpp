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

// Property suites shared by the unit tests and the acceptance runner. Each
// suite is deterministic in its seed and reports every failing case.

#ifndef CHORUS_TESTS_SUPPORT_PROPERTIES_HPP_
#define CHORUS_TESTS_SUPPORT_PROPERTIES_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace chorus::testing {

struct SuiteOutcome {
  std::size_t cases = 0;
  std::size_t checks = 0;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
  void check(bool holds, const std::string& what);
  /// First few failures, one per line.
  std::string summary(std::size_t limit = 5) const;
};

/// Merge laws on `cases` seeded behaviour pairs and triples of depth <= 5.
SuiteOutcome merge_algebra_suite(std::uint64_t seed, std::size_t cases);

/// Reflexivity, transitivity and antisymmetry of the branching order on
/// behaviours and networks, plus agreement with the reference relation.
SuiteOutcome order_laws_suite(std::uint64_t seed, std::size_t cases);

/// A network with more branches can replay every step of one with fewer,
/// ending with more branches again.
SuiteOutcome more_branches_step_suite(std::uint64_t seed, std::size_t cases);

/// Generated programs at the given depth: completeness, soundness,
/// determinism, diamond, progress and unique termination.
SuiteOutcome meta_theorem_suite(std::size_t programs, std::size_t depth);

/// The well-formedness decision agrees with brute-force evaluation on
/// generated programs and on mutated copies of them.
SuiteOutcome wf_decision_suite(std::size_t programs);

/// No reachable configuration of a generated program, or of its projection,
/// is stuck before termination.
SuiteOutcome deadlock_freedom_suite(std::size_t programs, std::size_t depth);

/// Along every joint run, the network has at least the branches of the
/// projection of the current choreography.
SuiteOutcome projection_invariant_suite(std::size_t programs, std::size_t depth);

}  // namespace chorus::testing

#endif  // CHORUS_TESTS_SUPPORT_PROPERTIES_HPP_
