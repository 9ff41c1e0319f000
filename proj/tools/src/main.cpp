// Copyright 2026 The qsynth Authors
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

#include <iostream>

#include "CLI11.hpp"
#include "qsynth/cli/commands.hpp"

int main(int argc, char** argv) {
  using namespace qsynth::cli;
  CLI::App app{"qsynth: time-optimal two-qubit synthesis for a fast/slow spin pair"};
  app.require_subcommand(1);

  Options opt;
  double omega = 0.0;
  double j = 0.0;

  auto add_gate_in = [&](CLI::App* sub) { sub->add_option("--in", opt.in, "gate JSON file")->required(); };
  auto add_drive = [&](CLI::App* sub) {
    sub->add_option("--b1", opt.b1, "beta-branch drive amplitude")->capture_default_str();
    sub->add_option("--b2", opt.b2, "alpha-branch drive amplitude")->capture_default_str();
  };
  auto add_rates = [&](CLI::App* sub) {
    sub->add_option("--omega-r-i", omega, "nuclear Rabi frequency (rad/s)");
    sub->add_option("--j", j, "coupling J (rad/s)");
  };

  auto* decompose = app.add_subcommand("decompose", "print K1, K2 and canonical angles");
  add_gate_in(decompose);
  add_drive(decompose);
  add_rates(decompose);

  auto* mintime = app.add_subcommand("mintime", "minimal slow-drive time and schedule");
  add_gate_in(mintime);
  add_drive(mintime);
  add_rates(mintime);

  auto* compile = app.add_subcommand("compile", "emit a pulse program for a gate");
  add_gate_in(compile);
  add_drive(compile);
  add_rates(compile);
  compile->add_option("--out", opt.out, "program JSON file (stdout if omitted)");
  compile->add_option("--tol", opt.tol, "self-check tolerance")->capture_default_str();
  compile->add_flag("--schedule", opt.schedule, "follow the time-optimal schedule");

  auto* simulate = app.add_subcommand("simulate", "print the unitary of a program");
  simulate->add_option("--in", opt.in, "program JSON file")->required();
  simulate->add_option("--target", opt.target, "gate JSON file");
  add_rates(simulate);

  auto* verify = app.add_subcommand("verify", "compare a program against its target");
  verify->add_option("--in", opt.in, "program JSON file")->required();
  verify->add_option("--target", opt.target, "gate JSON file (overrides the embedded target)");
  verify->add_option("--tol", opt.tol, "distance tolerance")->capture_default_str();
  add_rates(verify);

  auto* diagram = app.add_subcommand("diagram", "draw a pulse-timing diagram");
  diagram->add_option("--in", opt.in, "program JSON file")->required();
  diagram->add_option("--out", opt.out, "output file (stdout if omitted)");
  diagram->add_flag("--svg", opt.svg, "SVG output (default)");
  diagram->add_flag("--ascii", opt.ascii, "plain-text output");
  add_rates(diagram);

  auto* checks = app.add_subcommand("checks", "run the invariant suites");
  checks->add_option("--seed", opt.seed, "seed for randomized suites")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitParseError;
  }

  for (auto* sub : app.get_subcommands()) {
    const auto* om = sub->get_option_no_throw("--omega-r-i");
    const auto* jo = sub->get_option_no_throw("--j");
    if (om && om->count()) opt.omega_r_i = omega;
    if (jo && jo->count()) opt.j = j;
    return run_command(sub->get_name(), opt, std::cout, std::cerr);
  }
  return kExitParseError;
}
