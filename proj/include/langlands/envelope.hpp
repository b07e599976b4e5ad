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

#ifndef LANGLANDS_ENVELOPE_HPP_
#define LANGLANDS_ENVELOPE_HPP_

// Least concave majorants of functions f : {0, ..., n} -> Q.
//
// For type A_{n-1} the map v -> f_v, f_v(i) = i-th alpha-coordinate of v,
// f_v(0) = f_v(n) = 0, carries Vpos onto the nonnegative functions and V+
// onto the concave ones, and the retraction onto the least concave majorant.
// For GL(n) a coweight lambda maps to its partial sums, with f(n) free.

#include <cstddef>
#include <vector>

#include "langlands/root_data.hpp"

namespace langlands {

enum class Variant {
  kSL,  // f(0) = f(n) = 0
  kGL,  // f(0) = 0, f(n) free
};

class StepFunction {
 public:
  // values = f(0), ..., f(n) with n >= 1. Throws DomainError if f(0) != 0,
  // or f(n) != 0 for the SL variant.
  StepFunction(std::vector<Rational> values, Variant variant);

  std::size_t n() const { return values_.size() - 1; }
  Variant variant() const { return variant_; }
  const std::vector<Rational>& values() const { return values_; }
  const Rational& operator()(std::size_t i) const { return values_[i]; }

  friend bool operator==(const StepFunction& a, const StepFunction& b) {
    return a.variant_ == b.variant_ && a.values_ == b.values_;
  }

 private:
  std::vector<Rational> values_;
  Variant variant_;
};

// A maximal run of abscissae [from, to] on which the envelope is affine.
struct Pool {
  std::size_t from = 0;
  std::size_t to = 0;
  Rational slope;
};

struct PavResult {
  StepFunction envelope;
  std::vector<Pool> pools;
};

// Upper convex hull of the points (i, f(i)) by monotone chain with exact
// cross products, evaluated back at the integers.
StepFunction concave_envelope_hull(const StepFunction& f);

// Pool-adjacent-violators on the slopes f(i) - f(i-1), unit weights: pools
// merge while an earlier pool's mean slope is below the next one's; the
// envelope is the cumulative sum of pooled slopes.
PavResult concave_envelope_pav_pools(const StepFunction& f);
StepFunction concave_envelope_pav(const StepFunction& f);

bool is_concave(const StepFunction& f);
// f(i) >= g(i) for every i; lengths must match.
bool pointwise_geq(const StepFunction& f, const StepFunction& g);

// Type A_{n-1} dictionary. vec_to_function needs the n-1 alpha-coordinates.
StepFunction vec_to_function(const AlphaVec& v);
AlphaVec function_to_vec(const StepFunction& f);

// GL(n) dictionary: partial sums and successive differences.
StepFunction coweight_to_function(const std::vector<Rational>& lambda);
std::vector<Rational> function_to_coweight(const StepFunction& f);

}  // namespace langlands

#endif  // LANGLANDS_ENVELOPE_HPP_
