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

#include <gtest/gtest.h>

#include <cmath>
#include <regex>
#include <string>

#include "test_util.hpp"

namespace langlands {
namespace {

using testing::av;
using testing::mat;
using testing::q;

TEST(EnumerateFan, ConeCounts) {
  EXPECT_EQ(enumerate_fan(make_system("A1")).size(), 2u);
  EXPECT_EQ(enumerate_fan(make_system("A2")).size(), 4u);
  const auto e6 = enumerate_fan(make_system("E6"));
  ASSERT_EQ(e6.size(), 64u);
  for (const FanCone& c : e6) EXPECT_NE(determinant(c.generator_matrix), 0);
}

TEST(EnumerateFan, A1Generators) {
  const ObtuseBasis a1 = make_system("A1");
  const auto fan = enumerate_fan(a1);
  EXPECT_EQ(fan[0].generators[0], omega(a1, 0));
  EXPECT_EQ(fan[1].generators[0], q("-1") * alpha(a1, 0));
}

TEST(EnumerateFan, GeneratorOrder) {
  const ObtuseBasis a2 = make_system("A2");
  for (const FanCone& c : enumerate_fan(a2)) {
    if (c.j == SubsetJ({0})) {
      ASSERT_EQ(c.generators.size(), 2u);
      EXPECT_EQ(c.generators[0], omega(a2, 1));
      EXPECT_EQ(c.generators[1], q("-1") * alpha(a2, 0));
    }
    EXPECT_EQ(c.generator_matrix * c.change_of_basis, RatMatrix::identity(2));
  }
}

TEST(EnumerateFan, GuardRefuses) {
  EXPECT_THROW(enumerate_fan(make_system("A3"), 2), GuardExceeded);
}

TEST(ConeContains, Apex) {
  const ObtuseBasis b = make_system("B3");
  for (const FanCone& c : enumerate_fan(b))
    EXPECT_TRUE(cone_contains(c, AlphaVec::zero(3)));
}

TEST(Completeness, A2AndG2) {
  for (const char* name : {"A2", "G2"}) {
    const ObtuseBasis b = make_system(name);
    const auto fan = enumerate_fan(b);
    const CompletenessReport r = check_completeness(b, fan, 42, 10000);
    EXPECT_EQ(r.samples, 10000u);
    EXPECT_EQ(r.uncovered, 0u) << name;
    EXPECT_EQ(r.inconsistent, 0u) << name;
  }
}

TEST(Faces, A2CommonRay) {
  const ObtuseBasis a2 = make_system("A2");
  const auto fan = enumerate_fan(a2);
  // K_{} and K_{1} share the ray through omega_2.
  EXPECT_TRUE(cone_contains(fan[0], omega(a2, 1)));
  EXPECT_TRUE(cone_contains(fan[1], omega(a2, 1)));
}

TEST(Faces, SweepPasses) {
  for (const char* name : {"A2", "B2", "G2", "A3", "B3", "C3", "D4", "F4"}) {
    const ObtuseBasis b = make_system(name);
    const auto fan = enumerate_fan(b);
    const FaceReport r = check_face_intersections(b, fan, 42);
    const std::size_t n = fan.size();
    EXPECT_EQ(r.pairs, n * (n + 1) / 2) << name;
    EXPECT_TRUE(r.failures.empty()) << name << ": " << r.failures[0].reason;
  }
}

TEST(Faces, B2HasSixProperPairs) {
  const ObtuseBasis b2 = make_system("B2");
  const FaceReport r = check_face_intersections(b2, enumerate_fan(b2), 1);
  EXPECT_EQ(r.pairs - 4, 6u);  // unordered pairs J != J'
  EXPECT_TRUE(r.failures.empty());
}

int count(const std::string& s, const std::string& needle) {
  int n = 0;
  for (auto p = s.find(needle); p != std::string::npos;
       p = s.find(needle, p + 1))
    ++n;
  return n;
}

// Angle in degrees between the two root directions drawn in the picture.
double root_angle(const std::string& svg) {
  const std::regex re(
      R"re(<line class="root" x1="([-0-9.e]+)" y1="([-0-9.e]+)" x2="([-0-9.e]+)" y2="([-0-9.e]+)")re");
  std::vector<std::pair<double, double>> dirs;
  for (auto it = std::sregex_iterator(svg.begin(), svg.end(), re);
       it != std::sregex_iterator(); ++it) {
    const auto& m = *it;
    dirs.emplace_back(std::stod(m[3]) - std::stod(m[1]),
                      std::stod(m[4]) - std::stod(m[2]));
  }
  if (dirs.size() != 2) return -1;
  const double dot =
      dirs[0].first * dirs[1].first + dirs[0].second * dirs[1].second;
  const double n0 = std::hypot(dirs[0].first, dirs[0].second);
  const double n1 = std::hypot(dirs[1].first, dirs[1].second);
  return std::acos(dot / (n0 * n1)) * 180.0 / M_PI;
}

TEST(FanSvg, A2FourSectors) {
  const std::string svg = fan_svg_rank2(make_system("A2"));
  EXPECT_EQ(count(svg, "class=\"cone\""), 4);
  EXPECT_NEAR(root_angle(svg), 120.0, 1e-6);
  EXPECT_EQ(svg, fan_svg_rank2(make_system("A2")));
}

TEST(FanSvg, G2Angle) {
  const std::string svg = fan_svg_rank2(make_system("G2"));
  EXPECT_EQ(count(svg, "class=\"cone\""), 4);
  EXPECT_NEAR(root_angle(svg), 150.0, 1e-6);
}

TEST(FanSvg, OrthogonalQuadrants) {
  const std::string svg =
      fan_svg_rank2(ObtuseBasis::from_gram(RatMatrix::identity(2)));
  EXPECT_EQ(count(svg, "class=\"cone\""), 4);
  EXPECT_NEAR(root_angle(svg), 90.0, 1e-6);
}

TEST(FanSvg, RankTwoOnly) {
  EXPECT_THROW(fan_svg_rank2(make_system("A3")), DomainError);
}

}  // namespace
}  // namespace langlands
