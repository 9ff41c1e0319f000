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

// Pulse-timing diagrams with a fast (electron) lane and a slow (nuclear) lane.
// Widths are schematic: fast rotations have a fixed width, free evolution and
// selective drives grow with log10(1 + duration * omega_r_S).

#include <string>

#include "qsynth/pulseprog.hpp"

namespace qsynth::cli {

/// Drawn width of a segment in SVG user units.
double segment_width(const PulseSegment& segment, const SystemParams& params);

/// One <rect class="segment ..."> per segment, in application order.
std::string render_svg(const PulseProgram& program, const SystemParams& params);

/// Two text lanes plus a legend with one line per segment.
std::string render_ascii(const PulseProgram& program, const SystemParams& params);

}  // namespace qsynth::cli
