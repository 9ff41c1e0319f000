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

#include "qsynth/cli/diagram.hpp"

#include <cmath>

#include <fmt/format.h>

namespace qsynth::cli {

namespace {

constexpr double kFastWidth = 10.0;
constexpr double kLogScale = 24.0;
constexpr double kLaneHeight = 40.0;
constexpr double kMargin = 80.0;

double duration(const PulseSegment& s, const SystemParams& p) {
  if (const auto* f = std::get_if<FreeEvolution>(&s)) return f->angle / p.J;
  if (const auto* d = std::get_if<SelectiveDrive>(&s)) return d->angle / p.omega_r_I;
  return 0.0;
}

std::string label(const PulseSegment& s) {
  if (const auto* r = std::get_if<FastRotation>(&s)) {
    return fmt::format("R[{:.3f},{:.3f},{:.3f}]({:.4f})", r->axis[0], r->axis[1], r->axis[2], r->angle);
  }
  if (const auto* f = std::get_if<FreeEvolution>(&s)) return fmt::format("H0({:.4f})", f->angle);
  const auto& d = std::get<SelectiveDrive>(s);
  return fmt::format("H{}(phi={:.4f})({:.4f})", d.branch == Branch::alpha ? "a" : "b", d.phase, d.angle);
}

}  // namespace

double segment_width(const PulseSegment& segment, const SystemParams& params) {
  if (std::holds_alternative<FastRotation>(segment)) return kFastWidth;
  return kFastWidth + kLogScale * std::log10(1.0 + duration(segment, params) * params.omega_r_S);
}

std::string render_svg(const PulseProgram& program, const SystemParams& params) {
  double total = 0.0;
  for (const auto& s : program.segments) total += segment_width(s, params);
  const double width = 2 * kMargin + total;
  const double height = 3 * kLaneHeight;
  const double fast_y = 0.5 * kLaneHeight;
  const double slow_y = 1.75 * kLaneHeight;

  std::string out = fmt::format(
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{:.2f}\" height=\"{:.2f}\" viewBox=\"0 0 {:.2f} {:.2f}\">\n",
      width, height, width, height);
  out += fmt::format("  <text x=\"4\" y=\"{:.2f}\" font-size=\"12\">fast (S)</text>\n", fast_y + 14);
  out += fmt::format("  <text x=\"4\" y=\"{:.2f}\" font-size=\"12\">slow (I)</text>\n", slow_y + 14);
  out += fmt::format("  <line x1=\"{0:.2f}\" y1=\"{1:.2f}\" x2=\"{2:.2f}\" y2=\"{1:.2f}\" stroke=\"black\"/>\n",
                     kMargin, fast_y + kLaneHeight / 2, width - kMargin);
  out += fmt::format("  <line x1=\"{0:.2f}\" y1=\"{1:.2f}\" x2=\"{2:.2f}\" y2=\"{1:.2f}\" stroke=\"black\"/>\n",
                     kMargin, slow_y + kLaneHeight / 2, width - kMargin);

  double x = kMargin;
  for (const auto& s : program.segments) {
    const double w = segment_width(s, params);
    std::string cls;
    double y = slow_y;
    std::string fill;
    if (std::holds_alternative<FastRotation>(s)) {
      cls = "fast_rotation";
      y = fast_y;
      fill = "#d62728";
    } else if (std::holds_alternative<FreeEvolution>(s)) {
      // Free evolution spans both lanes; draw it as an outline on the slow lane.
      cls = "free_evolution";
      fill = "none";
    } else {
      cls = "selective_drive";
      fill = "#1f77b4";
    }
    out += fmt::format(
        "  <rect class=\"segment {}\" x=\"{:.2f}\" y=\"{:.2f}\" width=\"{:.2f}\" height=\"{:.2f}\" fill=\"{}\" "
        "stroke=\"black\"><title>{}</title></rect>\n",
        cls, x, y, w, kLaneHeight, fill, label(s));
    x += w;
  }
  out += "</svg>\n";
  return out;
}

std::string render_ascii(const PulseProgram& program, const SystemParams& params) {
  std::string fast = "fast |";
  std::string slow = "slow |";
  std::string legend;
  int index = 0;
  for (const auto& s : program.segments) {
    const int cols = std::max(1, static_cast<int>(std::lround(segment_width(s, params) / kFastWidth)));
    const std::string tag = std::to_string(index);
    auto cell = [&](char fill) {
      std::string c(static_cast<std::size_t>(std::max(cols, static_cast<int>(tag.size()))), fill);
      c.replace(0, tag.size(), tag);
      return c;
    };
    const std::string blank(static_cast<std::size_t>(std::max(cols, static_cast<int>(tag.size()))), ' ');
    if (std::holds_alternative<FastRotation>(s)) {
      fast += cell('#');
      slow += blank;
    } else if (std::holds_alternative<FreeEvolution>(s)) {
      fast += cell('-');
      slow += cell('-');
    } else {
      fast += blank;
      slow += cell('=');
    }
    fast += '|';
    slow += '|';
    legend += fmt::format("  {:>3}  {}\n", index, label(s));
    ++index;
  }
  return fast + "\n" + slow + "\n" + legend;
}

}  // namespace qsynth::cli
