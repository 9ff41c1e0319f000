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

#include "qsynth/cli/checks.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include <fmt/format.h>

#include "qsynth/pulseprog.hpp"
#include "qsynth/random.hpp"
#include "qsynth/timeopt.hpp"

namespace qsynth::cli {

namespace {

using Point = std::array<double, 2>;

double cross(const Point& o, const Point& a, const Point& b) {
  return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

// Andrew's monotone chain, counter-clockwise, collinear points dropped.
std::vector<Point> convex_hull(std::vector<Point> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return pts;
  std::vector<Point> hull(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], p) <= 0) --k;
    hull[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  return hull;
}

double segment_distance(const Point& p, const Point& a, const Point& b) {
  const double dx = b[0] - a[0];
  const double dy = b[1] - a[1];
  const double len2 = dx * dx + dy * dy;
  double t = len2 > 0 ? ((p[0] - a[0]) * dx + (p[1] - a[1]) * dy) / len2 : 0.0;
  t = std::clamp(t, 0.0, 1.0);
  return std::hypot(p[0] - a[0] - t * dx, p[1] - a[1] - t * dy);
}

constexpr std::array<std::size_t, 7> kKIndices{0, 1, 2, 5, 8, 11, 14};

AlgebraElement sample_subspace(Rng& rng, bool k_space) {
  std::normal_distribution<double> normal(0.0, 1.0);
  AlgebraElement a;
  for (std::size_t i = 0; i < kAlgebraDim; ++i) {
    const bool in_k_set = std::find(kKIndices.begin(), kKIndices.end(), i) != kKIndices.end();
    if (in_k_set == k_space) a[i] = normal(rng);
  }
  return a;
}

double part_norm(const AlgebraElement& a, bool k_space) {
  double s = 0.0;
  for (std::size_t i = 0; i < kAlgebraDim; ++i) {
    const bool in_k_set = std::find(kKIndices.begin(), kKIndices.end(), i) != kKIndices.end();
    if (in_k_set == k_space) s += a[i] * a[i];
  }
  return std::sqrt(s);
}

SuiteResult finish(SuiteResult r) {
  r.ok = r.passed == r.total;
  return r;
}

}  // namespace

bool hull_contains(AbelianAngles a, AbelianAngles b, double slack) {
  std::vector<Point> pts;
  for (double s1 : {1.0, -1.0}) {
    for (double s2 : {1.0, -1.0}) {
      pts.push_back({s1 * b.t1, s2 * b.t2});
      pts.push_back({s1 * b.t2, s2 * b.t1});
    }
  }
  const std::vector<Point> hull = convex_hull(pts);
  const Point p{a.t1, a.t2};
  if (hull.size() == 1) return std::hypot(p[0] - hull[0][0], p[1] - hull[0][1]) <= slack;
  if (hull.size() == 2) return segment_distance(p, hull[0], hull[1]) <= slack;
  bool inside = true;
  double dist = 1e300;
  for (std::size_t i = 0; i < hull.size(); ++i) {
    const Point& u = hull[i];
    const Point& v = hull[(i + 1) % hull.size()];
    if (cross(u, v, p) < 0) inside = false;
    dist = std::min(dist, segment_distance(p, u, v));
  }
  return inside || dist <= slack;
}

SuiteResult check_lie_closure_full() {
  const SystemParams params;
  const std::vector<AlgebraElement> gens{
      AlgebraElement::basis(Op::Sx), AlgebraElement::basis(Op::Sy), AlgebraElement::basis(Op::Sz),
      AlgebraElement::from_matrix(-kI * hamiltonian_alpha(0.0, params)),
      AlgebraElement::from_matrix(-kI * free_hamiltonian(params))};
  const LieClosure c = lie_closure(gens);
  return finish({"lie_closure_full", c.dimension, 15, false, ""});
}

SuiteResult check_k_closure() {
  const SystemParams params;
  const std::vector<AlgebraElement> gens{
      AlgebraElement::basis(Op::Sx), AlgebraElement::basis(Op::Sy), AlgebraElement::basis(Op::Sz),
      AlgebraElement::from_matrix(-kI * free_hamiltonian(params))};
  const LieClosure c = lie_closure(gens);
  return finish({"k_closure", c.dimension, 7, false, ""});
}

SuiteResult check_cartan_relations(std::uint64_t seed, int samples) {
  Rng rng(seed);
  SuiteResult r{"cartan_relations", 0, samples, false, ""};
  double worst = 0.0;
  for (int i = 0; i < samples; ++i) {
    const AlgebraElement k1 = sample_subspace(rng, true);
    const AlgebraElement k2 = sample_subspace(rng, true);
    const AlgebraElement p1 = sample_subspace(rng, false);
    const AlgebraElement p2 = sample_subspace(rng, false);
    const double res = std::max({cartan_project(commutator(k1, k2)).p_part.norm(),
                                 cartan_project(commutator(k1, p1)).k_part.norm(),
                                 cartan_project(commutator(p1, p2)).p_part.norm(),
                                 // Cross-check the projector against the index sets.
                                 part_norm(cartan_project(k1 + p1).k_part - k1, true) +
                                     part_norm(cartan_project(k1 + p1).p_part - p1, false)});
    worst = std::max(worst, res);
    if (res <= 1e-12) ++r.passed;
  }
  r.detail = fmt::format("max residual {:.3e}", worst);
  return finish(r);
}

SuiteResult check_weyl_convexity(std::uint64_t seed, int samples) {
  Rng rng(seed);
  std::uniform_real_distribution<double> uni(-2.0, 2.0);
  SuiteResult r{"weyl_convexity", 0, samples, false, ""};
  long inside = 0;
  for (int i = 0; i < samples; ++i) {
    const AbelianAngles a{uni(rng), uni(rng)};
    const AbelianAngles b{uni(rng), uni(rng)};
    const bool lib = r_majorizes(a, b);
    const bool oracle = hull_contains(a, b, 1e-9);
    if (lib == oracle) ++r.passed;
    if (oracle) ++inside;
  }
  r.detail = fmt::format("{} inside", inside);
  return finish(r);
}

SuiteResult check_lattice_shift() {
  SuiteResult r{"lattice_shift", 0, 0, false, ""};
  const double step = kPi / 20.0;
  for (int i = -20; i <= 20; ++i) {
    for (int j = -20; j <= 20; ++j) {
      const AbelianAngles a{i * step, j * step};
      for (int z1 = -3; z1 <= 3; ++z1) {
        for (int z2 = -3; z2 <= 3; ++z2) {
          const AbelianAngles shifted{a.t1 + 2.0 * kPi * z1, a.t2 + 2.0 * kPi * z2};
          ++r.total;
          if (r_majorizes(a, shifted)) ++r.passed;
        }
      }
    }
  }
  return finish(r);
}

SuiteResult check_remark3_dominance(std::uint64_t seed, int targets, int drives) {
  Rng rng(seed);
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  std::bernoulli_distribution coin(0.5);
  SuiteResult r{"remark3_dominance", 0, static_cast<long>(targets) * drives, false, ""};
  double worst = -1e300;
  for (int t = 0; t < targets; ++t) {
    const Unitary4 g = random_su4(rng);
    const double reference = min_time(g, DriveSpec{1.0, 0.0, 1.0}).t_opt;
    for (int d = 0; d < drives; ++d) {
      const double x = uni(rng);
      DriveSpec b{coin(rng) ? x : -x, 0.0, 1.0};
      b.b2 = (coin(rng) ? 1.0 : -1.0) * (1.0 - std::abs(b.b1));
      if (b.b1 == 0.0 && b.b2 == 0.0) b.b1 = 1.0;
      const double gap = reference - min_time(g, b).t_opt;
      worst = std::max(worst, gap);
      if (gap <= 1e-9) ++r.passed;
    }
  }
  r.detail = fmt::format("max t_opt(1,0) - t_opt(b) = {:.3e}", worst);
  return finish(r);
}

SuiteResult check_truncation_scaling() {
  const double e10 = truncation_error(10.0, 0.0, kPi);
  const double e100 = truncation_error(100.0, 0.0, kPi);
  const double e1e5 = truncation_error(1e5, 0.0, kPi);
  const double ratio = e10 / e100;
  SuiteResult r{"truncation_scaling", 0, 2, false, ""};
  if (ratio >= 5.0 && ratio <= 20.0) ++r.passed;
  if (e1e5 <= 1e-4) ++r.passed;
  r.detail = fmt::format("err(10)/err(100) = {:.3f}, err(1e5) = {:.3e}", ratio, e1e5);
  return finish(r);
}

std::vector<SuiteResult> run_checks(std::uint64_t seed) {
  return {check_lie_closure_full(),      check_k_closure(),
          check_cartan_relations(seed),  check_weyl_convexity(seed + 1),
          check_lattice_shift(),         check_remark3_dominance(seed + 2),
          check_truncation_scaling()};
}

}  // namespace qsynth::cli
