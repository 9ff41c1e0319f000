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

// JSON gate and program files.
//
// Gate file:    {"name": "CNOT12"} or {"matrix": [[[re, im], x4], x4]},
//               optional "phase_policy": "project_to_su4" | "require_su4".
// Program file: {"params": {"J", "omega_r_I", "omega_r_S"},
//                "order": "application",
//                "segments": [{"kind": "fast_rotation", "axis": [x, y, z], "angle"},
//                             {"kind": "free_evolution", "angle"},
//                             {"kind": "selective_drive", "branch", "phase", "angle"}],
//                "target": <gate file>?, "metadata": {...}?}

#include <optional>
#include <stdexcept>
#include <string>

#include "qsynth/pulseprog.hpp"
#include "qsynth/su4core.hpp"

namespace qsynth::cli {

/// Malformed JSON or a schema violation (exit code 3).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Well-formed input that is not acceptable, e.g. a non-unitary matrix
/// (exit code 2).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class PhasePolicy { project_to_su4, require_su4 };

struct GateSpec {
  /// Set for built-in gates.
  std::optional<std::string> name;
  /// Row-major matrix as given (named gates expand to permutation matrices).
  Matrix4 matrix = Matrix4::Identity();
  PhasePolicy policy = PhasePolicy::project_to_su4;
};

/// Accepted deviation from unitarity for file input; matrices inside the
/// tolerance are projected onto the nearest unitary.
inline constexpr double kInputUnitaryTol = 1e-9;

/// CNOT12, CNOT21, SWAP, IDENTITY. Throws InputError for other names.
Matrix4 named_gate(const std::string& name);

GateSpec parse_gate(const std::string& text);
GateSpec load_gate(const std::string& path);
std::string gate_to_json(const GateSpec& gate);

/// Validated unitary for the gate. Throws InputError if the matrix is not
/// unitary to kInputUnitaryTol, or if require_su4 is set and det != 1.
Unitary4 gate_unitary(const GateSpec& gate);

struct ProgramFile {
  SystemParams params;
  PulseProgram program;
  std::optional<GateSpec> target;
  /// Raw JSON object, carried through unchanged.
  std::optional<std::string> metadata;
};

ProgramFile parse_program(const std::string& text);
ProgramFile load_program(const std::string& path);
/// Doubles are written with 17 significant digits, so save(load(save(p)))
/// is byte-identical to save(p).
std::string program_to_json(const ProgramFile& file);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

}  // namespace qsynth::cli
