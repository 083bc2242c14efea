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

// Hand-built reference terms shared by the test suites.

#ifndef CHORUS_TESTS_SUPPORT_FIXTURES_HPP_
#define CHORUS_TESTS_SUPPORT_FIXTURES_HPP_

#include <string>

#include "chorus/cc_syntax.hpp"
#include "chorus/sp_syntax.hpp"

namespace chorus::testing {

// Authentication: c sends credentials to ip, ip checks them against its
// secret and tells s and c the outcome; on success s sends c a token.
Choreography auth_then();
Choreography auth_else();
Choreography auth_guarded();  // the conditional after the first communication
Choreography auth_chor();
CCProgram auth_program();

Behaviour auth_bc();
Behaviour auth_bs();
Behaviour auth_bip_guarded();
Behaviour auth_bip();
Network auth_network();

/// Credentials 7, token 42; `secret` decides the branch.
State auth_state(Nat secret);
inline State auth_accept() { return auth_state(7); }
inline State auth_reject() { return auth_state(8); }

// FileTransfer: s sends (file, check) until c confirms succ(file) == check.
Choreography file_transfer_body();
CCProgram file_transfer_program();
inline const ProcName kFileTransfer = "FileTransfer";

/// c and ip each wait for the other.
Network deadlocked_network();

/// Path of a sample file in the source tree.
std::string sample_path(const std::string& name);
std::string read_sample(const std::string& name);

}  // namespace chorus::testing

#endif  // CHORUS_TESTS_SUPPORT_FIXTURES_HPP_
