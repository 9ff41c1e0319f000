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

#include "qsynth/timeopt.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>

namespace qsynth {

namespace {

constexpr double kMajorizationSlack = 1e-12;
constexpr double kOrbitDedupTol = 1e-12;
constexpr double kConjugatorTol = 1e-12;
constexpr double kWeightTol = 1e-12;
constexpr double kFallbackWeightTol = 1e-9;

double dist_inf(AbelianAngles p, AbelianAngles q) {
  return std::max(std::abs(p.t1 - q.t1), std::abs(p.t2 - q.t2));
}

// Solves [p q r; 1 1 1] w = [a; 1].
std::optional<std::array<double, 3>> barycentric(AbelianAngles a, AbelianAngles p,
                                                  AbelianAngles q, AbelianAngles r,
                                                  double scale) {
  const double det = (q.t1 - p.t1) * (r.t2 - p.t2) - (r.t1 - p.t1) * (q.t2 - p.t2);
  if (std::abs(det) <= 1e-14 * scale * scale) return std::nullopt;
  const double wq = ((a.t1 - p.t1) * (r.t2 - p.t2) - (r.t1 - p.t1) * (a.t2 - p.t2)) / det;
  const double wr = ((q.t1 - p.t1) * (a.t2 - p.t2) - (a.t1 - p.t1) * (q.t2 - p.t2)) / det;
  return std::array<double, 3>{1.0 - wq - wr, wq, wr};
}

std::vector<ScheduleEntry> make_entries(const WeylOrbit& orbit, std::initializer_list<int> idx,
                                        std::initializer_list<double> weights) {
  std::vector<ScheduleEntry> out;
  double total = 0.0;
  auto w_it = weights.begin();
  for (int i : idx) {
    const double w = std::max(0.0, *w_it++);
    if (w > 0.0) {
      out.push_back({orbit.points[static_cast<std::size_t>(i)], w,
                     orbit.conjugators[static_cast<std::size_t>(i)]});
      total += w;
    }
  }
  for (auto& e : out) e.weight /= total;
  return out;
}

}  // namespace

void DriveSpec::validate() const {
  if (!std::isfinite(b1) || !std::isfinite(b2) || !std::isfinite(omega_r_I)) {
    throw std::invalid_argument("drive parameters must be finite");
  }
  if (std::abs(b1) + std::abs(b2) > 1.0 + 1e-12) {
    throw std::invalid_argument("drive amplitudes must satisfy |b1| + |b2| <= 1");
  }
  if (b1 == 0.0 && b2 == 0.0) throw std::invalid_argument("zero drive");
  if (!(omega_r_I > 0.0)) throw std::invalid_argument("omega_r_I must be positive");
}

WeylOrbit weyl_orbit(AbelianAngles b) {
  WeylOrbit orbit;
  for (int k = 0; k < kWeylOrder; ++k) {
    const AbelianAngles p = weyl_image(k, b);
    const bool seen = std::any_of(orbit.points.begin(), orbit.points.end(), [&](AbelianAngles q) {
      return dist_inf(p, q) <= kOrbitDedupTol;
    });
    if (!seen) {
      orbit.points.push_back(p);
      orbit.conjugators.push_back(k);
    }
  }
  return orbit;
}

bool conjugator_verify(const WeylOrbit& orbit, AbelianAngles b) {
  if (orbit.points.size() != orbit.conjugators.size()) return false;
  const Matrix4 source = abelian_generator(b).matrix();
  for (std::size_t i = 0; i < orbit.points.size(); ++i) {
    const Matrix4& w = weyl_conjugator(orbit.conjugators[i]).matrix();
    const Matrix4 image = w * source * w.adjoint();
    if ((image - abelian_generator(orbit.points[i]).matrix()).norm() > kConjugatorTol) {
      return false;
    }
  }
  return true;
}

bool r_majorizes(AbelianAngles a, AbelianAngles b) {
  const double max_a = std::max(std::abs(a.t1), std::abs(a.t2));
  const double max_b = std::max(std::abs(b.t1), std::abs(b.t2));
  const double sum_a = std::abs(a.t1) + std::abs(a.t2);
  const double sum_b = std::abs(b.t1) + std::abs(b.t2);
  return max_a <= max_b + kMajorizationSlack && sum_a <= sum_b + kMajorizationSlack;
}

std::vector<ScheduleEntry> convex_weyl_decompose(AbelianAngles a, AbelianAngles b) {
  if (!r_majorizes(a, b)) {
    throw std::invalid_argument("target is not r-majorized by the drive; no convex decomposition");
  }
  const WeylOrbit orbit = weyl_orbit(b);
  const int n = static_cast<int>(orbit.points.size());
  const auto& pts = orbit.points;
  const double scale = std::max(1.0, std::abs(b.t1) + std::abs(b.t2));
  const double tol = kWeightTol * scale;

  for (int i = 0; i < n; ++i) {
    if (dist_inf(a, pts[i]) <= tol) return make_entries(orbit, {i}, {1.0});
  }

  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double dx = pts[i].t1 - pts[j].t1;
      const double dy = pts[i].t2 - pts[j].t2;
      const double len2 = dx * dx + dy * dy;
      if (len2 == 0.0) continue;
      const double w = ((a.t1 - pts[j].t1) * dx + (a.t2 - pts[j].t2) * dy) / len2;
      if (w < -kWeightTol || w > 1.0 + kWeightTol) continue;
      const AbelianAngles on_segment{pts[j].t1 + w * dx, pts[j].t2 + w * dy};
      if (dist_inf(on_segment, a) <= tol) return make_entries(orbit, {i, j}, {w, 1.0 - w});
    }
  }

  // Triples in lexicographic order; the first non-negative solution wins.
  std::optional<std::vector<ScheduleEntry>> fallback;
  double fallback_min = -kFallbackWeightTol;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (int k = j + 1; k < n; ++k) {
        const auto w = barycentric(a, pts[i], pts[j], pts[k], scale);
        if (!w) continue;
        const double wmin = std::min({(*w)[0], (*w)[1], (*w)[2]});
        if (wmin >= -kWeightTol) return make_entries(orbit, {i, j, k}, {(*w)[0], (*w)[1], (*w)[2]});
        if (wmin >= fallback_min) {
          fallback_min = wmin;
          fallback = make_entries(orbit, {i, j, k}, {(*w)[0], (*w)[1], (*w)[2]});
        }
      }
    }
  }
  if (fallback) return *fallback;
  throw std::runtime_error("convex Weyl decomposition failed for an r-majorized target");
}

double t_opt_angles(AbelianAngles a, AbelianAngles b) {
  const double sum_b = std::abs(b.t1) + std::abs(b.t2);
  const double max_b = std::max(std::abs(b.t1), std::abs(b.t2));
  if (sum_b == 0.0) throw std::invalid_argument("zero drive");
  const double sum_a = std::abs(a.t1) + std::abs(a.t2);
  const double max_a = std::max(std::abs(a.t1), std::abs(a.t2));
  const double by_sum = sum_a / sum_b;
  const double by_max = max_a == 0.0 ? 0.0 : max_a / max_b;
  return std::max(by_sum, by_max);
}

Complex CenterElement::scalar() const {
  static const std::array<Complex, 4> powers{Complex(1, 0), Complex(0, 1), Complex(-1, 0),
                                             Complex(0, -1)};
  return powers[static_cast<std::size_t>(((power % 4) + 4) % 4)];
}

OptResult min_time(const Unitary4& g, const DriveSpec& drive, bool search_center) {
  drive.validate();
  if (!is_unitary(g.matrix())) throw std::invalid_argument("target is not unitary");

  if (!search_center && std::abs(g.det() - 1.0) > Unitary4::kDetTol) {
    throw std::invalid_argument("target is not in SU(4)");
  }
  const Complex base =
      search_center ? std::exp(-kI * (std::arg(g.det()) / 4.0)) : Complex(1.0, 0.0);
  std::optional<OptResult> best;
  for (int k = 0; k < (search_center ? 4 : 1); ++k) {
    const CenterElement center{k};
    const Complex phase = base * center.scalar();
    const KAKFactors factors = kak_decompose(g.phased(phase));
    const double t = t_opt_angles(factors.angles, drive.direction());
    if (!best || t < best->t_opt - 1e-12) {
      OptResult r;
      r.t_opt = t;
      r.factors = factors;
      r.center = center;
      r.representative_phase = phase;
      best = r;
    }
  }

  OptResult out = *best;
  out.drive = drive;
  out.seconds = out.t_opt / drive.omega_r_I;
  if (out.t_opt > 0.0) {
    const AbelianAngles b = drive.direction();
    const AbelianAngles scaled{out.t_opt * b.t1, out.t_opt * b.t2};
    for (ScheduleEntry e : convex_weyl_decompose(out.factors.angles, scaled)) {
      e.orbit_point = weyl_image(e.conjugator_index, b);
      e.weight *= out.t_opt;
      out.schedule.push_back(e);
    }
  }
  return out;
}

}  // namespace qsynth
