// Copyright 2026 The costmms Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end. Every subcommand parses its arguments, calls the
// C API and prints what it returns.
//
// Exit status: 0 when everything checked passes, 1 when a check fails (the
// report is still printed), 2 on usage or input errors.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "costmms/costmms.h"

namespace {

constexpr int kPass = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;

struct Options {
  std::string input = "-";
  std::string out;
  std::string format = "json";
  std::uint64_t seed = 0;
  std::size_t trials = 100;
  cm_budget budget = cm_default_budget();
  bool timing = false;

  // gen
  std::size_t agents = 3;
  std::size_t goods = 6;
  std::uint64_t max_cost = 10;
  double density = 0.5;
  std::size_t depth = 2;

  std::string sequence;
  std::string mechanism = "prop1";
  std::string allocation;
  bool exhaustive = false;
  bool no_repair = false;
  std::string suite;
};

// Carries a failed C API call out to main.
struct ApiFailure {
  cm_status status;
  std::string message;
};

void check(cm_status status) {
  if (status != CM_OK) throw ApiFailure{status, cm_last_error()};
}

struct StringDeleter {
  void operator()(char* s) const { cm_string_free(s); }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;

struct InstanceDeleter {
  void operator()(cm_instance* p) const { cm_instance_free(p); }
};
using OwnedInstance = std::unique_ptr<cm_instance, InstanceDeleter>;

std::string read_text(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ApiFailure{CM_INVALID_PARAMETER, "cannot open '" + path + "'"};
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text(const Options& opt, const std::string& text) {
  if (opt.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(opt.out, std::ios::binary);
  if (!out) throw ApiFailure{CM_INVALID_PARAMETER, "cannot write '" + opt.out + "'"};
  out << text;
}

OwnedInstance load(const Options& opt) {
  const std::string text = read_text(opt.input);
  cm_instance* raw = nullptr;
  check(cm_instance_from_json(text.c_str(), &raw));
  return OwnedInstance(raw);
}

void require_json(const Options& opt) {
  if (opt.format != "json") {
    throw ApiFailure{CM_INVALID_PARAMETER, "--format csv is only supported by 'experiment'"};
  }
}

std::string line(const OwnedString& s) { return std::string(s.get()) + "\n"; }

int emit_instance(const Options& opt, cm_instance* raw) {
  OwnedInstance inst(raw);
  char* json = nullptr;
  check(cm_instance_to_json(inst.get(), &json));
  write_text(opt, line(OwnedString(json)));
  return kPass;
}

int run_gen(const Options& opt, bool laminar) {
  require_json(opt);
  cm_instance* raw = nullptr;
  if (laminar) {
    check(cm_gen_laminar(opt.agents, opt.goods, opt.max_cost, opt.depth, opt.seed, &raw));
  } else {
    check(cm_gen_random(opt.agents, opt.goods, opt.max_cost, opt.density, opt.seed, &raw));
  }
  return emit_instance(opt, raw);
}

int run_mms(const Options& opt) {
  require_json(opt);
  OwnedInstance inst = load(opt);
  char* json = nullptr;
  check(cm_mms_profile(inst.get(), &opt.budget, &json));
  write_text(opt, line(OwnedString(json)));
  return kPass;
}

int run_solve(const Options& opt, bool laminar) {
  require_json(opt);
  OwnedInstance inst = load(opt);
  char* json = nullptr;
  if (laminar) {
    check(cm_solve_laminar(inst.get(), &opt.budget, opt.no_repair ? 0 : 1, &json));
  } else {
    check(cm_solve_three_agent(inst.get(), &opt.budget, &json));
  }
  write_text(opt, line(OwnedString(json)));
  return kPass;
}

int run_mechanism(const Options& opt, const std::string& name) {
  require_json(opt);
  OwnedInstance inst = load(opt);
  char* alloc = nullptr;
  char* trace = nullptr;
  check(cm_run_mechanism(inst.get(), name.c_str(), &alloc, &trace));
  OwnedString owned_alloc(alloc), owned_trace(trace);
  write_text(opt, std::string(trace) + line(owned_alloc));
  return kPass;
}

int run_check(const Options& opt, const std::string& what) {
  require_json(opt);
  OwnedInstance inst = load(opt);
  int pass = 0;
  char* report = nullptr;
  if (what == "mms" || what == "po") {
    if (opt.allocation.empty()) throw ApiFailure{CM_INVALID_PARAMETER, "--allocation is required"};
    const std::string alloc = read_text(opt.allocation);
    if (what == "mms") {
      check(cm_check_mms(inst.get(), alloc.c_str(), &opt.budget, &pass, &report));
    } else {
      check(cm_check_po(inst.get(), alloc.c_str(), &pass, &report));
    }
  } else if (what == "sp") {
    check(cm_check_sp(inst.get(), opt.mechanism.c_str(), opt.exhaustive ? 1 : 0, &opt.budget,
                      &pass, &report));
  } else {
    check(cm_check_laminar(inst.get(), &pass, &report));
  }
  write_text(opt, line(OwnedString(report)));
  return pass ? kPass : kCheckFailed;
}

int run_replicate(const Options& opt) {
  require_json(opt);
  int pass = 0;
  char* report = nullptr;
  check(cm_replicate_prop3(&pass, &report));
  write_text(opt, line(OwnedString(report)));
  return pass ? kPass : kCheckFailed;
}

int run_experiment(const Options& opt) {
  if (opt.format != "json" && opt.format != "csv") {
    throw ApiFailure{CM_INVALID_PARAMETER, "--format must be json or csv"};
  }
  cm_experiment_config config{opt.seed, opt.trials, opt.budget, opt.format == "csv" ? 1 : 0,
                              opt.timing ? 1 : 0};
  int pass = 0;
  char* report = nullptr;
  check(cm_run_experiment(opt.suite.c_str(), &config, &pass, &report));
  write_text(opt, OwnedString(report).get());
  return pass ? kPass : kCheckFailed;
}

void add_input(CLI::App* app, Options& opt) {
  app->add_option("input", opt.input, "Instance JSON file, or - for standard input");
}

}  // namespace

int main(int argc, char** argv) {
  Options opt;
  int status = kPass;
  CLI::App app{"Maximin share allocation under cost utilities"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--seed", opt.seed, "Random seed");
  app.add_option("--trials", opt.trials, "Number of experiment trials");
  app.add_option("--budget-goods", opt.budget.max_goods, "Largest good set searched exactly");
  app.add_option("--budget-agents", opt.budget.max_agents, "Largest bundle count searched");
  app.add_option("--budget-nodes", opt.budget.node_limit, "Search node limit");
  app.add_option("--format", opt.format, "Report format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--out", opt.out, "Write output to this file");

  std::function<int()> action;

  CLI::App* gen = app.add_subcommand("gen", "Generate a seeded instance");
  gen->require_subcommand(1);
  for (const bool laminar : {false, true}) {
    CLI::App* sub = gen->add_subcommand(laminar ? "laminar" : "random",
                                        laminar ? "Random laminar approvals"
                                                : "Independent random approvals");
    sub->add_option("-n,--agents", opt.agents, "Number of agents");
    sub->add_option("-m,--goods", opt.goods, "Number of goods");
    sub->add_option("--max-cost", opt.max_cost, "Largest good cost");
    if (laminar) {
      sub->add_option("--depth", opt.depth, "Levels of nesting");
    } else {
      sub->add_option("--density", opt.density, "Approval probability");
    }
    sub->callback([&, laminar] { action = [&, laminar] { return run_gen(opt, laminar); }; });
  }

  CLI::App* mms = app.add_subcommand("mms", "Maximin share of every agent");
  add_input(mms, opt);
  mms->callback([&] { action = [&] { return run_mms(opt); }; });

  CLI::App* solve = app.add_subcommand("solve", "Compute an MMS allocation");
  solve->require_subcommand(1);
  CLI::App* three = solve->add_subcommand("three-agent", "Exactly three agents");
  add_input(three, opt);
  three->callback([&] { action = [&] { return run_solve(opt, false); }; });
  CLI::App* laminar = solve->add_subcommand("laminar", "Laminar approval sets");
  add_input(laminar, opt);
  laminar->add_flag("--no-repair", opt.no_repair, "Skip the Pareto repair pass");
  laminar->callback([&] { action = [&] { return run_solve(opt, true); }; });

  CLI::App* mech = app.add_subcommand("mechanism", "Run a picking sequence with trace");
  mech->require_subcommand(1);
  for (const char* name : {"prop1", "prop2"}) {
    CLI::App* sub = mech->add_subcommand(name, std::string("The ") + name + " sequence");
    add_input(sub, opt);
    sub->callback([&, name] { action = [&, name] { return run_mechanism(opt, name); }; });
  }
  CLI::App* seq = mech->add_subcommand("seq", "An explicit sequence");
  add_input(seq, opt);
  seq->add_option("--sequence", opt.sequence, "1-based agent numbers, comma separated")->required();
  seq->callback([&] { action = [&] { return run_mechanism(opt, "seq:" + opt.sequence); }; });

  CLI::App* chk = app.add_subcommand("check", "Verify a property");
  chk->require_subcommand(1);
  for (const char* what : {"mms", "po", "sp", "laminar"}) {
    CLI::App* sub = chk->add_subcommand(what, std::string("Check ") + what);
    add_input(sub, opt);
    if (std::string(what) == "mms" || std::string(what) == "po") {
      sub->add_option("--allocation", opt.allocation, "Allocation JSON file")->required();
    }
    if (std::string(what) == "sp") {
      sub->add_option("--mechanism", opt.mechanism, "prop1, prop2 or seq:<csv>");
      sub->add_flag("--exhaustive", opt.exhaustive,
                    "Audit every approval profile over the instance's goods");
    }
    sub->callback([&, what] { action = [&, what] { return run_check(opt, what); }; });
  }

  CLI::App* rep = app.add_subcommand("replicate", "Rebuild an impossibility certificate");
  rep->require_subcommand(1);
  CLI::App* prop3 = rep->add_subcommand("prop3", "Two agents, five goods");
  prop3->callback([&] { action = [&] { return run_replicate(opt); }; });

  CLI::App* exp = app.add_subcommand("experiment", "Run a seeded experiment suite");
  exp->add_option("suite", opt.suite, "thm1, thm2, prop1-sp, prop2, prop3 or oracle-props")
      ->required();
  exp->add_flag("--timing", opt.timing, "Add a runtime column");
  exp->callback([&] { action = [&] { return run_experiment(opt); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    status = action();
  } catch (const ApiFailure& f) {
    std::cerr << "error: " << cm_status_name(f.status) << ": " << f.message << '\n';
    return kUsage;
  }
  return status;
}
