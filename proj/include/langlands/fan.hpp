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

#ifndef LANGLANDS_FAN_HPP_
#define LANGLANDS_FAN_HPP_

// The fan of linearity domains K_J of the retraction.
//
// The cones K_J, J ranging over all subsets, are simplicial of full
// dimension, cover V, and meet along faces following the coordinate-fan
// pattern: K_J and K_J' share the face spanned by omega_j (j outside J u J')
// and -alpha_i (i in J n J').

#include <cstdint>
#include <string>
#include <vector>

#include "langlands/retraction.hpp"

namespace langlands {

struct FanCone {
  SubsetJ j;
  // omega_j for j not in J (ascending), then -alpha_i for i in J (ascending).
  std::vector<AlphaVec> generators;
  // Columns are the generators in alpha-coordinates.
  RatMatrix generator_matrix;
  // Inverse of generator_matrix: alpha-coordinates -> generator coordinates.
  RatMatrix change_of_basis;
};

// All 2^n cones, J in increasing bitmask order. Throws GuardExceeded above
// the guard and InternalError if some cone is not full dimensional.
std::vector<FanCone> enumerate_fan(const ObtuseBasis& b,
                                   std::size_t guard = kEnumerationGuard);

RatVector cone_coordinates(const FanCone& cone, const AlphaVec& x);
bool cone_contains(const FanCone& cone, const AlphaVec& x);

struct CompletenessReport {
  std::size_t samples = 0;
  std::size_t uncovered = 0;
  // Covered points whose projection pr_J disagrees with retract(x) for some
  // containing cone K_J.
  std::size_t inconsistent = 0;
  std::vector<AlphaVec> counterexamples;  // at most a few
};

// Samples generic rational vectors (the first sample is the apex 0) and
// checks exact membership in at least one cone.
CompletenessReport check_completeness(const ObtuseBasis& b,
                                      const std::vector<FanCone>& fan,
                                      std::uint64_t seed, std::size_t samples);

struct FaceFailure {
  SubsetJ j;
  SubsetJ j_prime;
  std::string reason;
  AlphaVec point;
};

struct FaceReport {
  std::size_t pairs = 0;
  // Sampled points found in both cones of a pair.
  std::size_t intersection_points = 0;
  std::vector<FaceFailure> failures;
};

// For each unordered pair (J, J') including J == J': every generator of the
// expected common face lies in both cones, and every sampled point of K_J
// that also lies in K_J' lies in that face.
FaceReport check_face_intersections(const ObtuseBasis& b,
                                    const std::vector<FanCone>& fan,
                                    std::uint64_t seed,
                                    std::size_t samples_per_pair = 16);

// Deterministic SVG picture of the four cones of a rank-2 system. Throws
// DomainError unless rank == 2. Coordinates are the only place values are
// printed as decimals (12 significant digits).
std::string fan_svg_rank2(const ObtuseBasis& b);

}  // namespace langlands

#endif  // LANGLANDS_FAN_HPP_
