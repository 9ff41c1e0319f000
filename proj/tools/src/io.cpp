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

#include "qsynth/cli/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <Eigen/SVD>
#include <fmt/format.h>

#include "json.hpp"

namespace qsynth::cli {

namespace {

using nlohmann::json;

std::string num(double v) {
  if (!std::isfinite(v)) throw std::invalid_argument("cannot serialize a non-finite value");
  if (v == 0.0) v = 0.0;  // no "-0"
  return fmt::format("{:.17g}", v);
}

double get_number(const json& j, const char* key, const std::string& where) {
  if (!j.contains(key)) throw ParseError(where + ": missing \"" + key + "\"");
  const json& v = j.at(key);
  if (!v.is_number()) throw ParseError(where + ": \"" + key + "\" must be a number");
  const double d = v.get<double>();
  if (!std::isfinite(d)) throw ParseError(where + ": \"" + key + "\" is not finite");
  return d;
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

GateSpec gate_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("gate: expected an object");
  GateSpec g;
  if (j.contains("phase_policy")) {
    const json& p = j.at("phase_policy");
    if (p == "project_to_su4") {
      g.policy = PhasePolicy::project_to_su4;
    } else if (p == "require_su4") {
      g.policy = PhasePolicy::require_su4;
    } else {
      throw ParseError("gate: unknown phase_policy");
    }
  }
  const bool has_name = j.contains("name");
  const bool has_matrix = j.contains("matrix");
  if (has_name == has_matrix) throw ParseError("gate: exactly one of \"name\" and \"matrix\" is required");
  if (has_name) {
    if (!j.at("name").is_string()) throw ParseError("gate: \"name\" must be a string");
    g.name = j.at("name").get<std::string>();
    try {
      g.matrix = named_gate(*g.name);
    } catch (const InputError& e) {
      throw ParseError(e.what());
    }
    return g;
  }
  const json& m = j.at("matrix");
  if (!m.is_array() || m.size() != 4) throw ParseError("gate: \"matrix\" must have 4 rows");
  for (int r = 0; r < 4; ++r) {
    const json& row = m.at(static_cast<std::size_t>(r));
    if (!row.is_array() || row.size() != 4) throw ParseError("gate: every row must have 4 entries");
    for (int c = 0; c < 4; ++c) {
      const json& e = row.at(static_cast<std::size_t>(c));
      if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number()) {
        throw ParseError("gate: entries must be [re, im] pairs");
      }
      g.matrix(r, c) = Complex(e[0].get<double>(), e[1].get<double>());
    }
  }
  if (!qsynth::is_finite(g.matrix)) throw ParseError("gate: non-finite matrix entry");
  return g;
}

std::string vec3(const std::array<double, 3>& v) {
  return "[" + num(v[0]) + ", " + num(v[1]) + ", " + num(v[2]) + "]";
}

std::string gate_json_inline(const GateSpec& gate, const std::string& indent) {
  std::string out = "{";
  if (gate.name) {
    out += "\"name\": " + json(*gate.name).dump();
  } else {
    out += "\"matrix\": [";
    for (int r = 0; r < 4; ++r) {
      out += r == 0 ? "\n" : ",\n";
      out += indent + "  [";
      for (int c = 0; c < 4; ++c) {
        if (c) out += ", ";
        out += "[" + num(gate.matrix(r, c).real()) + ", " + num(gate.matrix(r, c).imag()) + "]";
      }
      out += "]";
    }
    out += "\n" + indent + "]";
  }
  if (gate.policy == PhasePolicy::require_su4) out += ", \"phase_policy\": \"require_su4\"";
  out += "}";
  return out;
}

PulseSegment segment_from_json(const json& s, std::size_t index) {
  const std::string where = "segment " + std::to_string(index);
  if (!s.is_object() || !s.contains("kind") || !s.at("kind").is_string()) {
    throw ParseError(where + ": missing \"kind\"");
  }
  const std::string kind = s.at("kind").get<std::string>();
  const double angle = get_number(s, "angle", where);
  if (kind == "fast_rotation") {
    if (!s.contains("axis")) throw ParseError(where + ": missing \"axis\"");
    const json& a = s.at("axis");
    if (!a.is_array() || a.size() != 3) throw ParseError(where + ": \"axis\" must have 3 entries");
    FastRotation r;
    for (std::size_t k = 0; k < 3; ++k) {
      if (!a[k].is_number()) throw ParseError(where + ": \"axis\" entries must be numbers");
      r.axis[k] = a[k].get<double>();
    }
    if (!std::isfinite(r.axis[0]) || !std::isfinite(r.axis[1]) || !std::isfinite(r.axis[2])) {
      throw ParseError(where + ": non-finite axis");
    }
    r.angle = angle;
    return r;
  }
  if (kind == "free_evolution") return FreeEvolution{angle};
  if (kind == "selective_drive") {
    SelectiveDrive d;
    d.angle = angle;
    d.phase = s.contains("phase") ? get_number(s, "phase", where) : 0.0;
    const std::string branch = s.value("branch", std::string("alpha"));
    if (branch == "alpha") {
      d.branch = Branch::alpha;
    } else if (branch == "beta") {
      d.branch = Branch::beta;
    } else {
      throw ParseError(where + ": unknown branch \"" + branch + "\"");
    }
    return d;
  }
  throw ParseError(where + ": unknown kind \"" + kind + "\"");
}

std::string segment_to_json(const PulseSegment& seg) {
  if (const auto* r = std::get_if<FastRotation>(&seg)) {
    return "{\"kind\": \"fast_rotation\", \"axis\": " + vec3(r->axis) + ", \"angle\": " + num(r->angle) + "}";
  }
  if (const auto* f = std::get_if<FreeEvolution>(&seg)) {
    return "{\"kind\": \"free_evolution\", \"angle\": " + num(f->angle) + "}";
  }
  const auto& d = std::get<SelectiveDrive>(seg);
  return fmt::format("{{\"kind\": \"selective_drive\", \"branch\": \"{}\", \"phase\": {}, \"angle\": {}}}",
                     d.branch == Branch::alpha ? "alpha" : "beta", num(d.phase), num(d.angle));
}

}  // namespace

Matrix4 named_gate(const std::string& name) {
  if (name == "CNOT12") return cnot12_matrix();
  if (name == "CNOT21") return cnot21_matrix();
  if (name == "SWAP") return swap_matrix();
  if (name == "IDENTITY") return Matrix4::Identity();
  throw InputError("unknown gate name \"" + name + "\"");
}

GateSpec parse_gate(const std::string& text) { return gate_from_json(parse_json(text)); }

GateSpec load_gate(const std::string& path) { return parse_gate(read_file(path)); }

std::string gate_to_json(const GateSpec& gate) { return gate_json_inline(gate, "") + "\n"; }

Unitary4 gate_unitary(const GateSpec& gate) {
  const Matrix4& m = gate.matrix;
  if (!is_unitary(m, kInputUnitaryTol)) throw InputError("gate matrix is not unitary");
  // Nearest unitary in Frobenius norm.
  Eigen::JacobiSVD<Matrix4> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const Matrix4 u = svd.matrixU() * svd.matrixV().adjoint();
  if (gate.policy == PhasePolicy::require_su4 && std::abs(u.determinant() - 1.0) > kInputUnitaryTol) {
    throw InputError("gate matrix is not in SU(4) and phase_policy is require_su4");
  }
  if (gate.name || is_unitary(m)) return Unitary4::from_matrix(m);
  return Unitary4::from_matrix(u);
}

ProgramFile parse_program(const std::string& text) {
  const json j = parse_json(text);
  if (!j.is_object()) throw ParseError("program: expected an object");
  ProgramFile f;
  if (j.contains("params")) {
    const json& p = j.at("params");
    if (!p.is_object()) throw ParseError("program: \"params\" must be an object");
    f.params.J = get_number(p, "J", "params");
    f.params.omega_r_I = get_number(p, "omega_r_I", "params");
    f.params.omega_r_S = get_number(p, "omega_r_S", "params");
  }
  if (j.contains("order") && j.at("order") != "application") {
    throw ParseError("program: only \"order\": \"application\" is supported");
  }
  if (!j.contains("segments") || !j.at("segments").is_array()) {
    throw ParseError("program: \"segments\" must be an array");
  }
  const json& segs = j.at("segments");
  for (std::size_t i = 0; i < segs.size(); ++i) f.program.segments.push_back(segment_from_json(segs[i], i));
  if (j.contains("target") && !j.at("target").is_null()) f.target = gate_from_json(j.at("target"));
  if (j.contains("metadata") && !j.at("metadata").is_null()) f.metadata = j.at("metadata").dump();
  return f;
}

ProgramFile load_program(const std::string& path) { return parse_program(read_file(path)); }

std::string program_to_json(const ProgramFile& file) {
  std::string out = "{\n";
  out += "  \"params\": {\"J\": " + num(file.params.J) + ", \"omega_r_I\": " + num(file.params.omega_r_I) +
         ", \"omega_r_S\": " + num(file.params.omega_r_S) + "},\n";
  out += "  \"order\": \"application\",\n";
  out += "  \"segments\": [";
  const auto& segs = file.program.segments;
  for (std::size_t i = 0; i < segs.size(); ++i) {
    out += i == 0 ? "\n" : ",\n";
    out += "    " + segment_to_json(segs[i]);
  }
  out += segs.empty() ? "]" : "\n  ]";
  if (file.target) out += ",\n  \"target\": " + gate_json_inline(*file.target, "  ");
  if (file.metadata) out += ",\n  \"metadata\": " + *file.metadata;
  out += "\n}\n";
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
  if (!out) throw std::runtime_error("failed writing " + path);
}

}  // namespace qsynth::cli
