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

#include "langlands/sampling.hpp"

namespace langlands {

std::uint64_t derive_seed(std::uint64_t seed,
                          std::initializer_list<std::uint64_t> tags) {
  std::uint64_t s = seed;
  for (std::uint64_t t : tags) s = SplitMix64(s ^ t).next();
  return s;
}

// FNV-1a.
std::uint64_t tag_of(std::string_view label) {
  std::uint64_t h = 0xCBF29CE484222325ULL;
  for (unsigned char c : label) {
    h ^= c;
    h *= 0x100000001B3ULL;
  }
  return h;
}

Rational sample_rational(SplitMix64& rng, std::int64_t lo_num,
                         const SampleBounds& bounds) {
  const std::int64_t num = rng.uniform(lo_num, bounds.max_numerator);
  const std::int64_t den = rng.uniform(1, bounds.max_denominator);
  Rational r(mpz_class(static_cast<long>(num)),
             mpz_class(static_cast<long>(den)));
  r.canonicalize();
  return r;
}

AlphaVec sample_vector(const ObtuseBasis& b, SplitMix64& rng, Profile profile,
                       const SampleBounds& bounds) {
  const std::size_t n = b.rank();
  RatVector t(n);
  switch (profile) {
    case Profile::kGeneric:
      for (std::size_t i = 0; i < n; ++i)
        t[i] = sample_rational(rng, -bounds.max_numerator, bounds);
      return AlphaVec(std::move(t));
    case Profile::kDominant:
      for (std::size_t i = 0; i < n; ++i)
        t[i] = sample_rational(rng, 0, bounds);
      return AlphaVec(b.dual() * t);
    case Profile::kPositive:
      for (std::size_t i = 0; i < n; ++i)
        t[i] = sample_rational(rng, 0, bounds);
      return AlphaVec(std::move(t));
    case Profile::kBoundary: {
      AlphaVec x = sample_vector(b, rng, Profile::kGeneric, bounds);
      if (n == 0) return x;
      const auto i = static_cast<std::size_t>(
          rng.uniform(0, static_cast<std::int64_t>(n) - 1));
      // x - (<x, alpha_i> / <alpha_i, alpha_i>) alpha_i pairs to 0 with
      // alpha_i.
      x.coords[i] -= pairing(b, x)[i] / b.gram()(i, i);
      return x;
    }
  }
  return AlphaVec::zero(n);
}

}  // namespace langlands
