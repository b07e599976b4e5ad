// Copyright 2026 The Langlands Retraction Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "langlands/fan.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <optional>
#include <sstream>

#include "langlands/sampling.hpp"

namespace langlands {

namespace {

// Generator slot of each position in a cone's generator list: whether it is
// an omega (true) or a -alpha (false), and the index.
std::vector<std::pair<bool, std::size_t>> slots(const SubsetJ& j,
                                                std::size_t n) {
  std::vector<std::pair<bool, std::size_t>> s;
  for (std::size_t k = 0; k < n; ++k)
    if (!j.contains(k)) s.emplace_back(true, k);
  for (std::size_t i : j.members()) s.emplace_back(false, i);
  return s;
}

// Whether slot (is_omega, idx) is a generator of the common face of K_J and
// K_J'.
bool in_common_face(std::pair<bool, std::size_t> slot, const SubsetJ& a,
                    const SubsetJ& b) {
  const auto [is_omega, idx] = slot;
  return is_omega ? !a.contains(idx) && !b.contains(idx)
                  : a.contains(idx) && b.contains(idx);
}

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string subset_label(const SubsetJ& j) {
  if (j.empty()) return "&#8709;";
  std::string s = "{";
  for (std::size_t k = 0; k < j.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(j.members()[k] + 1);
  }
  return s + "}";
}

}  // namespace

std::vector<FanCone> enumerate_fan(const ObtuseBasis& b, std::size_t guard) {
  const std::size_t n = b.rank();
  if (n > guard || n > 63)
    throw GuardExceeded("fan enumeration refused for rank " +
                        std::to_string(n));
  std::vector<FanCone> fan;
  fan.reserve(std::size_t{1} << n);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    FanCone cone;
    cone.j = SubsetJ::from_mask(mask, n);
    for (const auto& [is_omega, idx] : slots(cone.j, n))
      cone.generators.push_back(is_omega ? omega(b, idx)
                                         : Rational(-1) * alpha(b, idx));
    cone.generator_matrix = RatMatrix(n, n);
    for (std::size_t c = 0; c < n; ++c)
      for (std::size_t r = 0; r < n; ++r)
        cone.generator_matrix(r, c) = cone.generators[c][r];
    if (sgn(determinant(cone.generator_matrix)) == 0)
      throw InternalError("cone K_J is not full dimensional");
    cone.change_of_basis = invert(cone.generator_matrix);
    fan.push_back(std::move(cone));
  }
  return fan;
}

RatVector cone_coordinates(const FanCone& cone, const AlphaVec& x) {
  return cone.change_of_basis * x.coords;
}

bool cone_contains(const FanCone& cone, const AlphaVec& x) {
  return cone_coordinates(cone, x).all_nonnegative();
}

CompletenessReport check_completeness(const ObtuseBasis& b,
                                      const std::vector<FanCone>& fan,
                                      std::uint64_t seed, std::size_t samples) {
  CompletenessReport rep;
  SplitMix64 rng(derive_seed(seed, {tag_of("fan.completeness")}));
  for (std::size_t s = 0; s < samples; ++s) {
    const AlphaVec x = s == 0 ? AlphaVec::zero(b.rank())
                              : sample_vector(b, rng, Profile::kGeneric);
    ++rep.samples;
    bool covered = false;
    bool consistent = true;
    std::optional<AlphaVec> value;
    for (const FanCone& cone : fan) {
      if (!cone_contains(cone, x)) continue;
      covered = true;
      if (!value) value = retract(b, x).value;
      if (!(proj_J(b, cone.j, x).value == *value)) consistent = false;
    }
    if (!covered) ++rep.uncovered;
    if (!consistent) ++rep.inconsistent;
    if ((!covered || !consistent) && rep.counterexamples.size() < 5)
      rep.counterexamples.push_back(x);
  }
  return rep;
}

FaceReport check_face_intersections(const ObtuseBasis& b,
                                    const std::vector<FanCone>& fan,
                                    std::uint64_t seed,
                                    std::size_t samples_per_pair) {
  FaceReport rep;
  const std::size_t n = b.rank();
  for (std::size_t p = 0; p < fan.size(); ++p)
    for (std::size_t q = p; q < fan.size(); ++q) {
      const FanCone& kp = fan[p];
      const FanCone& kq = fan[q];
      ++rep.pairs;
      // (a) generators of the expected face lie in both cones.
      const auto sp = slots(kp.j, n);
      for (std::size_t k = 0; k < sp.size(); ++k) {
        if (!in_common_face(sp[k], kp.j, kq.j)) continue;
        const AlphaVec& g = kp.generators[k];
        if (!cone_contains(kp, g) || !cone_contains(kq, g))
          rep.failures.push_back(
              {kp.j, kq.j, "face generator outside a cone", g});
      }
      // (b) sampled common points lie in the face.
      SplitMix64 rng(derive_seed(seed, {tag_of("fan.faces"), p, q}));
      for (std::size_t s = 0; s < samples_per_pair; ++s) {
        const bool from_p = s % 2 == 0;
        const FanCone& src = from_p ? kp : kq;
        const FanCone& other = from_p ? kq : kp;
        RatVector t(n);
        for (std::size_t k = 0; k < n; ++k)
          if (rng.next() & 1U) t[k] = sample_rational(rng, 1);
        const AlphaVec x(src.generator_matrix * t);
        if (!cone_contains(other, x)) continue;
        ++rep.intersection_points;
        const auto ss = slots(src.j, n);
        for (std::size_t k = 0; k < n; ++k)
          if (sgn(t[k]) != 0 && !in_common_face(ss[k], kp.j, kq.j)) {
            rep.failures.push_back(
                {kp.j, kq.j, "common point outside the expected face", x});
            break;
          }
      }
    }
  return rep;
}

std::string fan_svg_rank2(const ObtuseBasis& b) {
  if (b.rank() != 2) throw DomainError("fan_svg_rank2 needs a rank-2 system");
  const RatMatrix& g = b.gram();
  // Euclidean embedding from the Cholesky factor of the Gram matrix.
  const double g11 = g(0, 0).get_d();
  const double g12 = g(0, 1).get_d();
  const double g22 = g(1, 1).get_d();
  const std::array<double, 2> a1{std::sqrt(g11), 0.0};
  const std::array<double, 2> a2{g12 / std::sqrt(g11),
                                 std::sqrt(g22 - g12 * g12 / g11)};
  auto embed = [&](const AlphaVec& v) {
    const double c1 = v[0].get_d(), c2 = v[1].get_d();
    std::array<double, 2> p{c1 * a1[0] + c2 * a2[0], c1 * a1[1] + c2 * a2[1]};
    const double len = std::hypot(p[0], p[1]);
    return std::array<double, 2>{p[0] / len, p[1] / len};
  };

  constexpr double kSize = 400, kCenter = 200, kRadius = 150;
  static constexpr std::array<const char*, 3> kColors = {"#4c78a8", "#f58518",
                                                         "#54a24b"};
  auto sx = [&](double u) { return num(kCenter + kRadius * u); };
  auto sy = [&](double u) { return num(kCenter - kRadius * u); };

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kSize
      << "\" height=\"" << kSize << "\" viewBox=\"0 0 " << kSize << ' ' << kSize
      << "\">\n";
  out << "<title>Linearity domains of the retraction for " << b.name()
      << "</title>\n";
  const auto fan = enumerate_fan(b);
  for (const FanCone& cone : fan) {
    const auto u = embed(cone.generators[0]);
    const auto v = embed(cone.generators[1]);
    const double cross = u[0] * v[1] - u[1] * v[0];
    const int sweep = cross > 0 ? 0 : 1;
    out << "<path class=\"cone\" data-j=\"" << subset_label(cone.j)
        << "\" d=\"M " << num(kCenter) << ' ' << num(kCenter) << " L "
        << sx(u[0]) << ' ' << sy(u[1]) << " A " << num(kRadius) << ' '
        << num(kRadius) << " 0 0 " << sweep << ' ' << sx(v[0]) << ' '
        << sy(v[1]) << " Z\" fill=\"" << kColors[cone.j.size()]
        << "\" fill-opacity=\"0.45\" stroke=\"#333\" stroke-width=\"1\"/>\n";
    double mx = u[0] + v[0], my = u[1] + v[1];
    const double ml = std::hypot(mx, my);
    mx /= ml;
    my /= ml;
    out << "<text x=\"" << num(kCenter + 0.55 * kRadius * mx) << "\" y=\""
        << num(kCenter - 0.55 * kRadius * my)
        << "\" font-size=\"14\" text-anchor=\"middle\">K<tspan "
           "baseline-shift=\"sub\" font-size=\"10\">"
        << subset_label(cone.j) << "</tspan></text>\n";
  }
  struct Ray {
    AlphaVec vec;
    const char* kind;
    const char* label;
  };
  const std::array<Ray, 4> rays = {{
      {omega(b, 0), "coweight", "&#969;1"},
      {omega(b, 1), "coweight", "&#969;2"},
      {Rational(-1) * alpha(b, 0), "root", "-&#945;1"},
      {Rational(-1) * alpha(b, 1), "root", "-&#945;2"},
  }};
  for (const auto& [vec, kind, label] : rays) {
    const auto u = embed(vec);
    out << "<line class=\"" << kind << "\" x1=\"" << num(kCenter) << "\" y1=\""
        << num(kCenter) << "\" x2=\"" << sx(u[0]) << "\" y2=\"" << sy(u[1])
        << "\" stroke=\"#000\" stroke-width=\"2\"/>\n";
    out << "<text x=\"" << num(kCenter + 1.15 * kRadius * u[0]) << "\" y=\""
        << num(kCenter - 1.15 * kRadius * u[1])
        << "\" font-size=\"14\" text-anchor=\"middle\">" << label
        << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace langlands
