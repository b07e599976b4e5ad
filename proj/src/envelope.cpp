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

#include "langlands/envelope.hpp"

namespace langlands {

namespace {

struct Point {
  Rational x;
  Rational y;
};

Rational cross(const Point& o, const Point& a, const Point& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

}  // namespace

StepFunction::StepFunction(std::vector<Rational> values, Variant variant)
    : values_(std::move(values)), variant_(variant) {
  if (values_.size() < 2)
    throw DomainError("a step function needs values f(0), ..., f(n), n >= 1");
  if (sgn(values_.front()) != 0) throw DomainError("f(0) must be 0");
  if (variant_ == Variant::kSL && sgn(values_.back()) != 0)
    throw DomainError("f(n) must be 0 for the SL variant");
}

StepFunction concave_envelope_hull(const StepFunction& f) {
  std::vector<Point> hull;
  for (std::size_t i = 0; i <= f.n(); ++i) {
    const Point p{Rational(static_cast<long>(i)), f(i)};
    while (hull.size() >= 2 &&
           sgn(cross(hull[hull.size() - 2], hull.back(), p)) >= 0)
      hull.pop_back();
    hull.push_back(p);
  }
  std::vector<Rational> out(f.n() + 1);
  std::size_t seg = 0;
  for (std::size_t i = 0; i <= f.n(); ++i) {
    const Rational x(static_cast<long>(i));
    while (seg + 1 < hull.size() - 1 && hull[seg + 1].x < x) ++seg;
    const Point& a = hull[seg];
    const Point& b = hull[seg + 1];
    out[i] = a.y + (b.y - a.y) * (x - a.x) / (b.x - a.x);
  }
  return StepFunction(std::move(out), f.variant());
}

PavResult concave_envelope_pav_pools(const StepFunction& f) {
  struct Block {
    Rational sum;
    std::size_t count;
    std::size_t from;
  };
  std::vector<Block> stack;
  for (std::size_t i = 1; i <= f.n(); ++i) {
    stack.push_back({f(i) - f(i - 1), 1, i - 1});
    // Pooled means must be non-increasing.
    while (stack.size() >= 2) {
      const Block& a = stack[stack.size() - 2];
      const Block& b = stack.back();
      if (a.sum * static_cast<long>(b.count) >=
          b.sum * static_cast<long>(a.count))
        break;
      Block merged{a.sum + b.sum, a.count + b.count, a.from};
      stack.pop_back();
      stack.back() = std::move(merged);
    }
  }
  std::vector<Rational> out(f.n() + 1);
  std::vector<Pool> pools;
  std::size_t i = 0;
  for (const Block& blk : stack) {
    const Rational slope = blk.sum / static_cast<long>(blk.count);
    pools.push_back({blk.from, blk.from + blk.count, slope});
    for (std::size_t k = 0; k < blk.count; ++k, ++i)
      out[i + 1] = out[i] + slope;
  }
  return {StepFunction(std::move(out), f.variant()), std::move(pools)};
}

StepFunction concave_envelope_pav(const StepFunction& f) {
  return concave_envelope_pav_pools(f).envelope;
}

bool is_concave(const StepFunction& f) {
  for (std::size_t i = 1; i < f.n(); ++i)
    if (sgn(f(i + 1) - 2 * f(i) + f(i - 1)) > 0) return false;
  return true;
}

bool pointwise_geq(const StepFunction& f, const StepFunction& g) {
  if (f.n() != g.n()) throw DimensionError("step functions differ in length");
  for (std::size_t i = 0; i <= f.n(); ++i)
    if (f(i) < g(i)) return false;
  return true;
}

StepFunction vec_to_function(const AlphaVec& v) {
  std::vector<Rational> values(v.size() + 2);
  for (std::size_t i = 0; i < v.size(); ++i) values[i + 1] = v[i];
  return StepFunction(std::move(values), Variant::kSL);
}

AlphaVec function_to_vec(const StepFunction& f) {
  if (f.variant() != Variant::kSL)
    throw DomainError(
        "only SL-variant functions correspond to A_{n-1} vectors");
  RatVector c(f.n() - 1);
  for (std::size_t i = 1; i < f.n(); ++i) c[i - 1] = f(i);
  return AlphaVec(std::move(c));
}

StepFunction coweight_to_function(const std::vector<Rational>& lambda) {
  if (lambda.empty()) throw DomainError("GL(n) coweight needs n >= 1 entries");
  std::vector<Rational> values(lambda.size() + 1);
  for (std::size_t i = 0; i < lambda.size(); ++i)
    values[i + 1] = values[i] + lambda[i];
  return StepFunction(std::move(values), Variant::kGL);
}

std::vector<Rational> function_to_coweight(const StepFunction& f) {
  std::vector<Rational> lambda(f.n());
  for (std::size_t i = 1; i <= f.n(); ++i) lambda[i - 1] = f(i) - f(i - 1);
  return lambda;
}

}  // namespace langlands
