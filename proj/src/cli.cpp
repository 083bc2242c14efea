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

#include "chorus/cli.hpp"

#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "chorus/cc_semantics.hpp"
#include "chorus/epp.hpp"
#include "chorus/json_io.hpp"
#include "chorus/sp_semantics.hpp"
#include "chorus/surface.hpp"
#include "chorus/verify.hpp"

namespace chorus {

namespace {

struct RunConfig {
  std::string input;
  std::string state_path;
  std::uint64_t seed = 0;
  std::size_t depth = 10;
  std::size_t max_steps = 1000;
  std::string format;  // empty: the command's default
  std::string out_path;
  std::string property = "all";
  std::string scheduler = "first";
};

/// Failure that maps to an exit code after its message is printed.
struct CliError {
  int code;
  std::string message;
};

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw CliError{kExitUsage, "cannot read " + path};
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f || !(f << text)) throw CliError{kExitUsage, "cannot write " + path};
}

bool json_format(const RunConfig& cfg, bool json_by_default) {
  return cfg.format.empty() ? json_by_default : cfg.format == "json";
}

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

CCSource load_cc(const RunConfig& cfg) {
  const std::string text = read_file(cfg.input);
  try {
    return parse_cc_source(text);
  } catch (const ParseError& e) {
    throw CliError{kExitUsage, cfg.input + ":" + e.what()};
  }
}

SPProgram load_sp(const RunConfig& cfg) {
  const std::string text = read_file(cfg.input);
  try {
    return parse_sp(text);
  } catch (const ParseError& e) {
    throw CliError{kExitUsage, cfg.input + ":" + e.what()};
  }
}

State load_state(const RunConfig& cfg) {
  if (cfg.state_path.empty()) return State();
  const std::string text = read_file(cfg.state_path);
  try {
    return state_from_json(Json::parse(text));
  } catch (const Json::exception& e) {
    throw CliError{kExitUsage, cfg.state_path + ": " + e.what()};
  } catch (const JsonFormatError& e) {
    throw CliError{kExitUsage, cfg.state_path + ": " + e.what()};
  }
}

std::string position(const CCSource& src, const std::string& file, const Location& loc) {
  auto it = src.spans.find(loc);
  if (it == src.spans.end()) return file;
  return file + ":" + std::to_string(it->second.begin.line) + ":" +
         std::to_string(it->second.begin.column);
}

Json span_json(const CCSource& src, const Location& loc) {
  auto it = src.spans.find(loc);
  if (it == src.spans.end()) return nullptr;
  const Span& s = it->second;
  return Json{{"line", s.begin.line},
              {"column", s.begin.column},
              {"end_line", s.end.line},
              {"end_column", s.end.column}};
}

/// Well-formedness diagnostic, or nullopt.
std::optional<std::pair<std::string, Json>> wf_problem(const CCSource& src,
                                                       const std::string& file) {
  WfReport report;
  try {
    report = program_wf_dec(src.program, src.declared);
  } catch (const UsedProceduresViolated& e) {
    return std::pair{file + ": error: " + e.what(),
                     Json{{"ok", false}, {"clause", "used_procedures"}, {"detail", e.what()}}};
  }
  if (report.ok()) return std::nullopt;
  const WfViolation& v = *report.violation;
  const std::string clause(to_string(v.clause));
  std::string text = position(src, file, v.where) + ": error: " + clause + ": " + v.detail +
                     " (at " + to_string(v.where) + ")";
  Json j{{"ok", false},
         {"clause", clause},
         {"location", to_string(v.where)},
         {"span", span_json(src, v.where)},
         {"detail", v.detail}};
  return std::pair{std::move(text), std::move(j)};
}

// ---------------------------------------------------------------------------

int cmd_check(const RunConfig& cfg, std::ostream& out) {
  const CCSource src = load_cc(cfg);
  const bool json = json_format(cfg, false);
  if (auto problem = wf_problem(src, cfg.input)) {
    if (json) {
      out << problem->second.dump() << "\n";
    } else {
      out << problem->first << "\n";
    }
    return kExitFailed;
  }
  if (json) {
    out << Json{{"ok", true}}.dump() << "\n";
  } else {
    out << cfg.input << ": well-formed\n";
  }
  return kExitOk;
}

std::string manifest_path(const std::string& out_path) {
  std::string base = out_path;
  if (ends_with(base, ".sp")) base.resize(base.size() - 3);
  return base + ".manifest.json";
}

int cmd_project(const RunConfig& cfg, std::ostream& out) {
  const CCSource src = load_cc(cfg);
  const bool json = json_format(cfg, false);
  if (auto problem = wf_problem(src, cfg.input)) {
    out << (json ? problem->second.dump() : problem->first) << "\n";
    return kExitFailed;
  }
  Projected<SPProgram> sp = epp(src.program, src.declared);
  if (!sp.ok()) {
    const ProjectionFailure& f = *sp.failure;
    if (json) {
      out << Json{{"ok", false},
                  {"process", f.process.str()},
                  {"location", to_string(f.where)},
                  {"span", span_json(src, f.where)},
                  {"reason", f.reason}}
                 .dump()
          << "\n";
    } else {
      out << position(src, cfg.input, f.where) << ": error: " << to_string(f) << "\n";
    }
    return kExitFailed;
  }
  const std::string text = print_sp(*sp);
  if (cfg.out_path.empty()) {
    out << text;
    return kExitOk;
  }
  write_file(cfg.out_path, text);
  Json manifest = Json::object();
  for (const auto& [x, b] : sp->procedures.entries()) {
    manifest[to_string(x)] = Json{{"procedure", x.procedure.str()},
                                  {"process", x.process.str()},
                                  {"behaviour", print_behaviour(b)}};
  }
  write_file(manifest_path(cfg.out_path), manifest.dump(2) + "\n");
  return kExitOk;
}

/// Picks one of `n` enabled transitions.
class Scheduler {
 public:
  explicit Scheduler(const RunConfig& cfg)
      : random_(cfg.scheduler == "random"), rng_(cfg.seed) {}
  std::size_t pick(std::size_t n) { return random_ ? static_cast<std::size_t>(rng_() % n) : 0; }

 private:
  bool random_;
  std::mt19937_64 rng_;
};

/// Shared driver of `run` and `simulate`. `next` returns the successor
/// labels; `advance` takes the chosen one and reports it.
template <class Steps, class Apply>
int drive(const RunConfig& cfg, std::ostream& out, State state, Steps steps_of, Apply apply,
          std::function<bool()> terminated) {
  const bool json = json_format(cfg, true);
  Scheduler scheduler(cfg);
  std::size_t step = 0;
  std::string outcome = "bound";
  for (;; ++step) {
    if (terminated()) {
      outcome = "terminated";
      break;
    }
    if (step == cfg.max_steps) break;
    auto steps = steps_of(state);
    if (steps.empty()) {
      outcome = "stuck";
      break;
    }
    auto& chosen = steps[scheduler.pick(steps.size())];
    Json rich = rich_to_json(chosen.label);
    const TransitionLabel tl = forget(chosen.label);
    state = apply(chosen);
    if (json) {
      out << Json{{"step", step + 1},
                  {"label", label_to_json(tl)},
                  {"rich", std::move(rich)},
                  {"state", state_to_json(state)}}
                 .dump()
          << "\n";
    } else {
      out << step + 1 << " " << to_string(tl) << "\n";
    }
  }
  if (json) {
    out << Json{{"outcome", outcome}, {"steps", step}, {"state", state_to_json(state)}}.dump()
        << "\n";
  } else {
    out << outcome << " after " << step << " steps\n";
  }
  return kExitOk;
}

int cmd_run(const RunConfig& cfg, std::ostream& out) {
  const CCSource src = load_cc(cfg);
  const DefSet& defs = src.program.procedures;
  Choreography c = src.program.main;
  return drive(
      cfg, out, load_state(cfg), [&](const State& s) { return cc_enabled(defs, c, s); },
      [&](EnabledChorStep& chosen) {
        c = chosen.chor;
        return chosen.state;
      },
      [&] { return c.is_end(); });
}

int cmd_simulate(const RunConfig& cfg, std::ostream& out) {
  const SPProgram sp = load_sp(cfg);
  Network n = sp.network;
  return drive(
      cfg, out, load_state(cfg),
      [&](const State& s) { return sp_enabled(sp.procedures, n, s); },
      [&](EnabledNetStep& chosen) {
        n = chosen.network;
        return chosen.state;
      },
      [&] { return n.empty(); });
}

int cmd_step(const RunConfig& cfg, std::istream& in, std::ostream& out) {
  const CCSource src = load_cc(cfg);
  const DefSet& defs = src.program.procedures;
  Choreography c = src.program.main;
  State s = load_state(cfg);
  for (;;) {
    out << print_chor(c) << "state " << state_to_json(s).dump() << "\n";
    if (c.is_end()) {
      out << "terminated\n";
      return kExitOk;
    }
    std::vector<EnabledChorStep> steps = cc_enabled(defs, c, s);
    if (steps.empty()) {
      out << "stuck\n";
      return kExitOk;
    }
    for (std::size_t i = 0; i < steps.size(); ++i) {
      out << "  [" << i + 1 << "] " << to_string(steps[i].label) << "\n";
    }
    std::size_t choice = 0;
    for (;;) {
      out << "> " << std::flush;
      std::string line;
      if (!std::getline(in, line) || line == "q" || line == "quit") return kExitOk;
      std::istringstream ss(line);
      if (ss >> choice && choice >= 1 && choice <= steps.size()) break;
      out << "enter a number between 1 and " << steps.size() << ", or q\n";
    }
    c = steps[choice - 1].chor;
    s = steps[choice - 1].state;
  }
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  if (ends_with(cfg.input, ".sp")) {
    throw CliError{kExitUsage, "verify takes a choreography (.cc), not " + cfg.input};
  }
  const CCSource src = load_cc(cfg);
  const CCProgram& p = src.program;
  const State s = load_state(cfg);
  const std::vector<ProcName>& xs = src.declared;

  using Check = std::function<VerifyReport()>;
  const std::vector<std::pair<std::string, Check>> all = {
      {"complete", [&] { return check_epp_complete(p, xs, s, cfg.depth); }},
      {"sound", [&] { return check_epp_sound(p, xs, s, cfg.depth); }},
      {"determinism", [&] { return check_determinism(p, s, cfg.depth); }},
      {"diamond", [&] { return check_diamond(p, s, cfg.depth); }},
      {"progress", [&] { return check_progress(p, s, cfg.depth); }},
      {"termination", [&] { return check_termination_unique(p, s, cfg.depth); }},
  };
  std::vector<VerifyReport> reports;
  for (const auto& [name, check] : all) {
    if (cfg.property != "all" && cfg.property != name) continue;
    try {
      reports.push_back(check());
    } catch (const NotStronglyProjectable& e) {
      reports.push_back(VerifyReport{name, false, 0, {}, e.what()});
    }
  }
  bool passed = true;
  for (const auto& r : reports) passed = passed && r.passed;

  if (json_format(cfg, true)) {
    if (reports.size() == 1) {
      out << report_to_json(reports.front()).dump() << "\n";
    } else {
      Json list = Json::array();
      for (const auto& r : reports) list.push_back(report_to_json(r));
      out << Json{{"passed", passed}, {"reports", std::move(list)}}.dump() << "\n";
    }
  } else {
    for (const auto& r : reports) {
      out << r.property << ": " << (r.passed ? "pass" : "FAIL") << " (" << r.nodes_explored
          << " nodes)";
      if (!r.message.empty()) out << " " << r.message;
      out << "\n";
      for (const auto& e : r.trace) out << "  " << to_string(e.label) << "\n";
    }
  }
  return passed ? kExitOk : kExitFailed;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Choreographies, their projections and their semantics", "chorus"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto input = [&](CLI::App* cmd, const std::string& what) {
    cmd->add_option("file", cfg.input, what)->required();
  };
  auto format = [&](CLI::App* cmd) {
    cmd->add_option("--format", cfg.format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
  };
  auto state = [&](CLI::App* cmd) {
    cmd->add_option("--state", cfg.state_path, "initial store as JSON")
        ->check(CLI::ExistingFile);
  };
  auto scheduling = [&](CLI::App* cmd) {
    cmd->add_option("--scheduler", cfg.scheduler, "first or random")
        ->check(CLI::IsMember({"first", "random"}));
    cmd->add_option("--seed", cfg.seed, "seed of the random scheduler");
    cmd->add_option("--max-steps", cfg.max_steps, "step bound");
  };

  CLI::App* check = app.add_subcommand("check", "check well-formedness of a choreography");
  input(check, "choreography (.cc)");
  format(check);

  CLI::App* project = app.add_subcommand("project", "project a choreography to processes");
  input(project, "choreography (.cc)");
  format(project);
  project->add_option("--out", cfg.out_path, "write the process program here");

  CLI::App* run = app.add_subcommand("run", "execute a choreography");
  input(run, "choreography (.cc)");
  state(run);
  scheduling(run);
  format(run);

  CLI::App* step = app.add_subcommand("step", "execute a choreography interactively");
  input(step, "choreography (.cc)");
  state(step);

  CLI::App* simulate = app.add_subcommand("simulate", "execute a process program");
  input(simulate, "process program (.sp)");
  state(simulate);
  scheduling(simulate);
  format(simulate);

  CLI::App* verify = app.add_subcommand("verify", "bounded checks of a choreography");
  input(verify, "choreography (.cc)");
  state(verify);
  format(verify);
  verify->add_option("--depth", cfg.depth, "exploration depth");
  verify->add_option("--property", cfg.property)
      ->check(CLI::IsMember(
          {"complete", "sound", "determinism", "diamond", "progress", "termination", "all"}));

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (check->parsed()) return cmd_check(cfg, out);
    if (project->parsed()) return cmd_project(cfg, out);
    if (run->parsed()) return cmd_run(cfg, out);
    if (step->parsed()) return cmd_step(cfg, in, out);
    if (simulate->parsed()) return cmd_simulate(cfg, out);
    return cmd_verify(cfg, out);
  } catch (const CliError& e) {
    err << "chorus: " << e.message << "\n";
    return e.code;
  }
}

}  // namespace chorus
