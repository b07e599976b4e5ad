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

#ifndef LANGLANDS_SAMPLING_HPP_
#define LANGLANDS_SAMPLING_HPP_

// Seeded sampling of rational test vectors.
//
// The generator is SplitMix64, written out here so that every port reproduces
// the same stream bit for bit:
//
//   state += 0x9E3779B97F4A7C15
//   z = state
//   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
//   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
//   return z ^ (z >> 31)
//
// An integer in [lo, hi] is lo + next() % (hi - lo + 1). A rational is drawn
// as numerator first, then denominator, and canonicalized.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string_view>

#include "langlands/root_data.hpp"

namespace langlands {

class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform-ish integer in [lo, hi] (modulo reduction).
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(next() % span);
  }

  std::uint64_t state() const { return state_; }

 private:
  std::uint64_t state_;
};

// Independent stream for a (seed, tag...) tuple: each tag is folded in with
// one SplitMix64 step, s = SplitMix64(s ^ tag).next().
std::uint64_t derive_seed(std::uint64_t seed,
                          std::initializer_list<std::uint64_t> tags);
std::uint64_t tag_of(std::string_view label);

struct SampleBounds {
  std::int64_t max_numerator = 20;
  std::int64_t max_denominator = 6;
};

// Numerator in [lo_num, bounds.max_numerator], denominator in
// [1, bounds.max_denominator].
Rational sample_rational(SplitMix64& rng, std::int64_t lo_num,
                         const SampleBounds& bounds = {});

enum class Profile {
  kGeneric,   // coordinates with numerators in [-N, N], denominators [1, D]
  kDominant,  // nonnegative combination of the omega_i
  kPositive,  // nonnegative combination of the alpha_i
  kBoundary,  // generic, then one pairing <x, alpha_i> forced to zero
};

AlphaVec sample_vector(const ObtuseBasis& b, SplitMix64& rng, Profile profile,
                       const SampleBounds& bounds = {});

}  // namespace langlands

#endif  // LANGLANDS_SAMPLING_HPP_
