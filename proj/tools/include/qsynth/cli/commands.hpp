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

#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

namespace qsynth::cli {

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitInvalidInput = 2;
inline constexpr int kExitParseError = 3;
/// `checks` returns kExitCheckBase + index of the first failing suite.
inline constexpr int kExitCheckBase = 10;

struct Options {
  std::string in;
  std::string out;
  /// Gate file for verify/simulate; overrides the program's own target.
  std::string target;
  double b1 = 1.0;
  double b2 = 0.0;
  /// Unset means "use the default" (or the program file's value).
  std::optional<double> omega_r_i;
  std::optional<double> j;
  double tol = 1e-8;
  std::uint64_t seed = 20260101;
  bool svg = false;
  bool ascii = false;
  /// compile: follow the time-optimal schedule instead of the KAK sequence.
  bool schedule = false;
};

int cmd_decompose(const Options& opt, std::ostream& out, std::ostream& err);
int cmd_mintime(const Options& opt, std::ostream& out, std::ostream& err);
int cmd_compile(const Options& opt, std::ostream& out, std::ostream& err);
int cmd_simulate(const Options& opt, std::ostream& out, std::ostream& err);
int cmd_verify(const Options& opt, std::ostream& out, std::ostream& err);
int cmd_diagram(const Options& opt, std::ostream& out, std::ostream& err);
int cmd_checks(const Options& opt, std::ostream& out, std::ostream& err);

/// Dispatches by subcommand name; unknown names return kExitParseError.
int run_command(const std::string& name, const Options& opt, std::ostream& out, std::ostream& err);

}  // namespace qsynth::cli
