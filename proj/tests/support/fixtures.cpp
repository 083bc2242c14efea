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

#include "support/fixtures.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace chorus::testing {

using namespace chorus::expr;   // NOLINT(build/namespaces)
using namespace chorus::bexpr;  // NOLINT(build/namespaces)

namespace {
BExpr auth_check() { return eq(var("x"), var("secret")); }
}  // namespace

Choreography auth_then() {
  return chor::sel("ip", "s", SelLabel::kLeft,
                   chor::sel("ip", "c", SelLabel::kLeft,
                             chor::com("s", var("token"), "c", "t", chor::end())));
}

Choreography auth_else() {
  return chor::sel("ip", "s", SelLabel::kRight,
                   chor::sel("ip", "c", SelLabel::kRight, chor::end()));
}

Choreography auth_guarded() { return chor::cond("ip", auth_check(), auth_then(), auth_else()); }

Choreography auth_chor() { return chor::com("c", var("credentials"), "ip", "x", auth_guarded()); }

CCProgram auth_program() { return CCProgram{DefSet(), auth_chor()}; }

Behaviour auth_bc() {
  return beh::send("ip", var("credentials"),
                   beh::branch("ip", beh::offer(beh::recv("s", "t", beh::end())),
                               beh::offer(beh::end())));
}

Behaviour auth_bs() {
  return beh::branch("ip", beh::offer(beh::send("c", var("token"), beh::end())),
                     beh::offer(beh::end()));
}

Behaviour auth_bip_guarded() {
  return beh::cond(auth_check(),
                   beh::choose("s", SelLabel::kLeft,
                               beh::choose("c", SelLabel::kLeft, beh::end())),
                   beh::choose("s", SelLabel::kRight,
                               beh::choose("c", SelLabel::kRight, beh::end())));
}

Behaviour auth_bip() { return beh::recv("c", "x", auth_bip_guarded()); }

Network auth_network() {
  return Network::from_entries({{"c", auth_bc()}, {"s", auth_bs()}, {"ip", auth_bip()}});
}

State auth_state(Nat secret) {
  return State()
      .updated("c", "credentials", Value::nat(7))
      .updated("ip", "secret", Value::nat(secret))
      .updated("s", "token", Value::nat(42));
}

Choreography file_transfer_body() {
  return chor::com(
      "s", pair(var("file"), var("check")), "c", "x",
      chor::cond("c", eq(succ(fst(var("x"))), snd(var("x"))),
                 chor::sel("c", "s", SelLabel::kLeft, chor::end()),
                 chor::sel("c", "s", SelLabel::kRight, chor::call(kFileTransfer))));
}

CCProgram file_transfer_program() {
  DefSet defs;
  defs.define(kFileTransfer, {"c", "s"}, file_transfer_body());
  return CCProgram{defs, chor::call(kFileTransfer)};
}

Network deadlocked_network() {
  return Network::from_entries(
      {{"c", beh::recv("ip", "y", beh::send("ip", lit(1), beh::end()))},
       {"ip", beh::recv("c", "x", beh::send("c", lit(2), beh::end()))}});
}

std::string sample_path(const std::string& name) {
  return std::string(CHORUS_SOURCE_DIR) + "/samples/" + name;
}

std::string read_sample(const std::string& name) {
  std::ifstream f(sample_path(name));
  if (!f) throw std::runtime_error("missing sample " + name);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

}  // namespace chorus::testing
