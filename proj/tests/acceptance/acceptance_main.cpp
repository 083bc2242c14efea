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

// Acceptance runner: one line per criterion, `[PASS]` or `[FAIL]`, with the
// measured time against the criterion's limit. Exits non-zero on any
// failure.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "chorus/cc_semantics.hpp"
#include "chorus/cli.hpp"
#include "chorus/epp.hpp"
#include "chorus/json_io.hpp"
#include "chorus/sp_semantics.hpp"
#include "chorus/surface.hpp"
#include "chorus/verify.hpp"
#include "support/fixtures.hpp"
#include "support/properties.hpp"

namespace chorus::testing {
namespace {

/// Outcome of one criterion: empty `problem` means pass.
struct Verdict {
  std::string problem;
  std::string detail;
};

Verdict from_suite(const SuiteOutcome& out) {
  std::string detail = std::to_string(out.cases) + " cases, " + std::to_string(out.checks) + " checks";
  if (out.ok()) return {"", detail};
  return {std::to_string(out.failures.size()) + " failures:\n" + out.summary(), detail};
}

// ---------------------------------------------------------------------------

Verdict golden_projection() {
  auto sp = epp(auth_program(), {});
  if (!sp.ok()) return {"authentication program is not projectable"};
  if (!network_eq(sp->network, auth_network())) {
    return {"projection differs:\n" + print_network(sp->network)};
  }
  const CCSource src = parse_cc_source(read_sample("authentication.cc"));
  auto from_file = epp(src.program, src.declared);
  if (!from_file.ok() || print_sp(*from_file) != read_sample("authentication.sp")) {
    return {"projection of the sample file differs from the golden file"};
  }
  return {"", "network_eq with c[Bc] | s[Bs] | ip[Bip]"};
}

Verdict golden_traces() {
  const Value v1 = Value::nat(7);
  const Value v2 = Value::nat(42);
  struct Branch {
    State st1;
    std::vector<TransitionLabel> trace;
    State final_state;
  };
  const std::vector<Branch> branches = {
      {auth_accept(),
       {label::t_com("c", v1, "ip"), label::t_tau("ip"), label::t_sel("ip", "s", SelLabel::kLeft),
        label::t_sel("ip", "c", SelLabel::kLeft), label::t_com("s", v2, "c")},
       auth_accept().updated("ip", "x", v1).updated("c", "t", v2)},
      {auth_reject(),
       {label::t_com("c", v1, "ip"), label::t_tau("ip"), label::t_sel("ip", "s", SelLabel::kRight),
        label::t_sel("ip", "c", SelLabel::kRight)},
       auth_reject().updated("ip", "x", v1)},
  };
  for (const Branch& b : branches) {
    CCConfiguration cc{auth_program(), b.st1};
    SPConfiguration sp{SPProgram{DefSetB(), auth_network()}, b.st1};
    for (std::size_t i = 0; i < b.trace.size(); ++i) {
      auto next_cc = ccp_step(cc, b.trace[i]);
      auto next_sp = spp_step(sp, b.trace[i]);
      if (next_cc.size() != 1 || next_sp.size() != 1) {
        return {"step " + std::to_string(i + 1) + " (" + to_string(b.trace[i]) +
                ") does not replay uniquely on both sides"};
      }
      // Both sides offer the same observable labels at every step.
      std::set<TransitionLabel> lc, ls;
      for (const auto& e : cc_enabled(cc.program.procedures, cc.program.main, cc.state)) lc.insert(forget(e.label));
      for (const auto& e : sp_enabled(sp.program.procedures, sp.program.network, sp.state)) ls.insert(forget(e.label));
      if (lc != ls) return {"enabled labels differ before step " + std::to_string(i + 1)};
      cc = next_cc[0];
      sp = next_sp[0];
      if (cc.state != sp.state) return {"states diverge after step " + std::to_string(i + 1)};
    }
    if (!cc.program.main.is_end() || !sp.program.network.empty() || cc.state != b.final_state) {
      return {"trace does not end in the terminated configuration with the expected state"};
    }
  }
  return {"", "accepting and rejecting runs, 5 and 4 steps"};
}

Verdict file_transfer_joins() {
  const CCProgram ft = file_transfer_program();
  const State st = State().updated("s", "file", Value::nat(3));
  auto steps = cc_enabled(ft.procedures, ft.main, st);
  if (steps.size() != 2 || steps[0].label != label::call(kFileTransfer, "c") ||
      steps[1].label != label::call(kFileTransfer, "s")) {
    return {"expected exactly call(FileTransfer,c) and call(FileTransfer,s)"};
  }
  auto cs = cc_step(ft.procedures, steps[0].chor, steps[0].state, label::call(kFileTransfer, "s"));
  auto sc = cc_step(ft.procedures, steps[1].chor, steps[1].state, label::call(kFileTransfer, "c"));
  if (!cs || !sc || !(*cs == *sc) || cs->chor != file_transfer_body() || cs->state != st) {
    return {"join orders do not converge to (body, st)"};
  }
  return {"", "both orders reach the procedure body"};
}

Verdict negative_controls() {
  // (a) Swapped branch slots in the service's projection.
  SPProgram bad = *epp(auth_program(), {}).value;
  const auto& b = std::get<beh::Branch>(bad.network.at("s").node);
  bad.network = bad.network.with("s", beh::branch(b.from, b.right, b.left));
  const VerifyReport r = check_epp_complete(auth_program(), {}, bad, auth_accept(), 10);
  if (r.passed || r.trace.empty()) return {"(a) corrupted projection was not caught"};
  std::vector<TransitionLabel> labels;
  for (const auto& e : r.trace) labels.push_back(e.label);
  if (ccp_multistep(CCConfiguration{auth_program(), auth_accept()}, labels).empty()) {
    return {"(a) counterexample does not replay on the choreography"};
  }
  labels.pop_back();
  if (spp_multistep(SPConfiguration{bad, auth_accept()}, labels).empty()) {
    return {"(a) counterexample prefix does not replay on the network"};
  }

  auto cli = [](std::vector<std::string> args, std::string& out) {
    std::istringstream in;
    std::ostringstream o, e;
    args.insert(args.begin(), "chorus");
    const int code = run_cli(args, in, o, e);
    out = o.str();
    return code;
  };
  auto temp = [](const std::string& name, const std::string& text) {
    const auto path = std::filesystem::temp_directory_path() / ("chorus_acceptance_" + name);
    std::ofstream(path) << text;
    return path.string();
  };

  // (b) Self-communication.
  std::string out;
  const std::string self = temp("self.cc", "main {\n  p.x -> q.y;\n  q.y -> q.z;\n  end\n}\n");
  if (cli({"check", self, "--format", "json"}, out) != kExitFailed ||
      Json::parse(out)["clause"] != "no_self_comm") {
    return {"(b) check did not report no_self_comm: " + out};
  }

  // (c) Unmended conditional, at line 3.
  const std::string unmended =
      temp("unmended.cc", "main {\n  r.v -> p.z;\n  if p.z == 0 then {\n    q.e -> p.y;\n    end\n"
                          "  } else {\n    end\n  }\n}\n");
  if (cli({"project", unmended, "--format", "json"}, out) != kExitFailed) {
    return {"(c) unmended conditional was projected"};
  }
  const Json j = Json::parse(out);
  if (j["process"] != "q" || j["span"].is_null() || j["span"]["line"] != 3 || j["span"]["column"] != 3) {
    return {"(c) diagnostic lacks the conditional's span: " + out};
  }
  return {"", "counterexample at " + to_string(r.trace.back().label) + "; no_self_comm; span 3:3"};
}

Verdict deadlock_exhibit() {
  if (!sp_enabled(DefSetB(), deadlocked_network(), State()).empty()) {
    return {"mutually receiving network can move"};
  }
  return from_suite(deadlock_freedom_suite(200, 8));
}

// ---------------------------------------------------------------------------

struct Criterion {
  const char* id;
  const char* title;
  double limit_seconds;
  std::function<Verdict()> run;
};

}  // namespace
}  // namespace chorus::testing

int main() {
  using namespace chorus::testing;  // NOLINT(build/namespaces)
  const std::vector<Criterion> criteria = {
      {"AC1", "golden projection of the authentication program", 1, golden_projection},
      {"AC2", "golden traces on choreography and projection", 1, golden_traces},
      {"AC3", "FileTransfer join orders", 1, file_transfer_joins},
      {"AC4", "merge algebra on 1000 seeded cases", 30,
       [] { return from_suite(merge_algebra_suite(1, 1000)); }},
      {"AC5", "branching order laws and step preservation", 30,
       [] {
         Verdict laws = from_suite(order_laws_suite(1, 1000));
         Verdict steps = from_suite(more_branches_step_suite(1, 200));
         return Verdict{laws.problem + steps.problem, laws.detail + "; " + steps.detail};
       }},
      {"AC6", "meta-theorems on 200 generated programs at depth 8", 300,
       [] { return from_suite(meta_theorem_suite(200, 8)); }},
      {"AC7", "negative controls", 3, negative_controls},
      {"AC8", "well-formedness decision against brute force", 30,
       [] { return from_suite(wf_decision_suite(200)); }},
      {"AC9", "deadlock exhibit and deadlock freedom", 60, deadlock_exhibit},
  };

  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v.problem = std::string("exception: ") + e.what();
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (v.problem.empty() && seconds > c.limit_seconds) v.problem = "over the time limit";
    const bool pass = v.problem.empty();
    if (!pass) ++failed;
    std::printf("[%s] %s %s (%.3f s, limit %.0f s)%s%s\n", pass ? "PASS" : "FAIL", c.id, c.title,
                seconds, c.limit_seconds, v.detail.empty() ? "" : ": ", v.detail.c_str());
    if (!pass) std::printf("       %s\n", v.problem.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
