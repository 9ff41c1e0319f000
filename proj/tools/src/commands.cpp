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

#include "qsynth/cli/commands.hpp"

#include <functional>
#include <stdexcept>

#include <fmt/format.h>

#include "json.hpp"
#include "qsynth/cli/checks.hpp"
#include "qsynth/cli/diagram.hpp"
#include "qsynth/cli/io.hpp"
#include "qsynth/pulseprog.hpp"
#include "qsynth/timeopt.hpp"

namespace qsynth::cli {

namespace {

std::string cnum(Complex z) { return fmt::format("{:+.12f}{:+.12f}i", z.real(), z.imag()); }

void print_matrix(std::ostream& out, const std::string& title, const Matrix4& m) {
  out << title << ":\n";
  for (int r = 0; r < 4; ++r) {
    out << "  ";
    for (int c = 0; c < 4; ++c) out << (c ? "  " : "") << cnum(m(r, c));
    out << "\n";
  }
}

SystemParams params_from(const Options& opt, SystemParams base = {}) {
  if (opt.j) base.J = *opt.j;
  if (opt.omega_r_i) base.omega_r_I = *opt.omega_r_i;
  try {
    base.validate();
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  return base;
}

DriveSpec drive_from(const Options& opt) {
  DriveSpec d{opt.b1, opt.b2, opt.omega_r_i.value_or(1.0)};
  try {
    d.validate();
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  return d;
}

OptResult optimize(const GateSpec& spec, const DriveSpec& drive) {
  const Unitary4 g = gate_unitary(spec);
  return min_time(g, drive, spec.policy == PhasePolicy::project_to_su4);
}

void emit(const Options& opt, std::ostream& out, const std::string& text) {
  if (opt.out.empty()) {
    out << text;
  } else {
    write_file(opt.out, text);
  }
}

void print_budgets(std::ostream& out, const Budgets& b) {
  out << fmt::format("slow_time: {:.17g}\n", b.slow_time);
  out << fmt::format("coupling_time: {:.17g}\n", b.coupling_time);
  out << fmt::format("fast_pulses: {}\n", b.fast_pulse_count);
}

int guarded(const std::function<int()>& body, std::ostream& err) {
  try {
    return body();
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitParseError;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  }
}

}  // namespace

int cmd_decompose(const Options& opt, std::ostream& out, std::ostream& err) {
  return guarded(
      [&] {
        const GateSpec spec = load_gate(opt.in);
        const Unitary4 g = gate_unitary(spec);
        const OptResult r = optimize(spec, drive_from(opt));
        const Matrix4 rep = g.matrix() * r.representative_phase;
        const double residual = (r.factors.reconstruct().matrix() - rep).norm();
        out << "representative: " << cnum(r.representative_phase) << " * G (center i^" << r.center.power << ")\n";
        print_matrix(out, "K1", r.factors.k1.matrix());
        print_matrix(out, "K2", r.factors.k2.matrix());
        out << fmt::format("t1: {:.17g}\nt2: {:.17g}\n", r.factors.angles.t1, r.factors.angles.t2);
        out << fmt::format("residual: {:.3e}\n", residual);
        return kExitOk;
      },
      err);
}

int cmd_mintime(const Options& opt, std::ostream& out, std::ostream& err) {
  return guarded(
      [&] {
        const GateSpec spec = load_gate(opt.in);
        const OptResult r = optimize(spec, drive_from(opt));
        out << fmt::format("t_opt: {:.17g}\n", r.t_opt);
        out << fmt::format("seconds: {:.17g}\n", r.seconds);
        out << "center: i^" << r.center.power << "\n";
        out << fmt::format("canonical: {:.17g} {:.17g}\n", r.factors.angles.t1, r.factors.angles.t2);
        out << "schedule:\n";
        double total = 0.0;
        for (const auto& e : r.schedule) {
          out << fmt::format("  weight {:.17g} point ({:.17g}, {:.17g}) conjugator {}\n", e.weight,
                             e.orbit_point.t1, e.orbit_point.t2, e.conjugator_index);
          total += e.weight;
        }
        out << fmt::format("weight_sum: {:.17g}\n", total);
        return kExitOk;
      },
      err);
}

int cmd_compile(const Options& opt, std::ostream& out, std::ostream& err) {
  return guarded(
      [&] {
        const GateSpec spec = load_gate(opt.in);
        const SystemParams params = params_from(opt);
        for (const auto& w : params.warnings()) err << "warning: " << w << "\n";
        const OptResult r = optimize(spec, drive_from(opt));

        ProgramFile file;
        file.params = params;
        file.program = opt.schedule ? assemble_schedule(r, params) : assemble(r.factors, params);
        file.target = spec;
        nlohmann::json meta;
        meta["path"] = opt.schedule ? "schedule" : "kak";
        meta["t1"] = r.factors.angles.t1;
        meta["t2"] = r.factors.angles.t2;
        meta["t_opt"] = r.t_opt;
        meta["center"] = r.center.power;
        file.metadata = meta.dump();

        const VerifyReport v = verify(file.program, params, gate_unitary(spec), opt.tol);
        emit(opt, out, program_to_json(file));
        if (!opt.out.empty()) {
          out << fmt::format("segments: {}\n", file.program.segments.size());
          out << fmt::format("distance: {:.3e}\n", v.distance);
          print_budgets(out, v.budgets);
        }
        if (!v.pass) {
          err << fmt::format("error: compiled program misses the target (distance {:.3e})\n", v.distance);
          return kExitVerifyFailed;
        }
        return kExitOk;
      },
      err);
}

int cmd_simulate(const Options& opt, std::ostream& out, std::ostream& err) {
  return guarded(
      [&] {
        const ProgramFile file = load_program(opt.in);
        const SystemParams params = params_from(opt, file.params);
        const Unitary4 u = simulate(file.program, params);
        print_matrix(out, "U", u.matrix());
        print_budgets(out, budgets(file.program, params));
        std::optional<GateSpec> target = file.target;
        if (!opt.target.empty()) target = load_gate(opt.target);
        if (target) {
          out << fmt::format("distance: {:.3e}\n", distance_up_to_phase(u, gate_unitary(*target)));
        }
        return kExitOk;
      },
      err);
}

int cmd_verify(const Options& opt, std::ostream& out, std::ostream& err) {
  return guarded(
      [&] {
        const ProgramFile file = load_program(opt.in);
        const SystemParams params = params_from(opt, file.params);
        std::optional<GateSpec> target = file.target;
        if (!opt.target.empty()) target = load_gate(opt.target);
        if (!target) throw InputError("no target: pass --target or embed one in the program");
        const VerifyReport v = verify(file.program, params, gate_unitary(*target), opt.tol);
        out << fmt::format("distance: {:.3e}\n", v.distance);
        out << fmt::format("tolerance: {:.3e}\n", opt.tol);
        print_budgets(out, v.budgets);
        out << (v.pass ? "PASS\n" : "FAIL\n");
        return v.pass ? kExitOk : kExitVerifyFailed;
      },
      err);
}

int cmd_diagram(const Options& opt, std::ostream& out, std::ostream& err) {
  return guarded(
      [&] {
        if (opt.svg && opt.ascii) throw InputError("choose one of --svg and --ascii");
        const ProgramFile file = load_program(opt.in);
        const SystemParams params = params_from(opt, file.params);
        emit(opt, out, opt.ascii ? render_ascii(file.program, params) : render_svg(file.program, params));
        return kExitOk;
      },
      err);
}

int cmd_checks(const Options& opt, std::ostream& out, std::ostream&) {
  const std::vector<SuiteResult> results = run_checks(opt.seed);
  int code = kExitOk;
  for (std::size_t i = 0; i < results.size(); ++i) {
    const auto& r = results[i];
    out << fmt::format("{}: {}/{} {}", r.name, r.passed, r.total, r.ok ? "PASS" : "FAIL");
    if (!r.detail.empty()) out << "  (" << r.detail << ")";
    out << "\n";
    if (!r.ok && code == kExitOk) code = kExitCheckBase + static_cast<int>(i);
  }
  return code;
}

int run_command(const std::string& name, const Options& opt, std::ostream& out, std::ostream& err) {
  if (name == "decompose") return cmd_decompose(opt, out, err);
  if (name == "mintime") return cmd_mintime(opt, out, err);
  if (name == "compile") return cmd_compile(opt, out, err);
  if (name == "simulate") return cmd_simulate(opt, out, err);
  if (name == "verify") return cmd_verify(opt, out, err);
  if (name == "diagram") return cmd_diagram(opt, out, err);
  if (name == "checks") return cmd_checks(opt, out, err);
  err << "error: unknown command " << name << "\n";
  return kExitParseError;
}

}  // namespace qsynth::cli
