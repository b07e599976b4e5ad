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

#include "langlands/retraction.hpp"

#include <algorithm>

namespace langlands {

namespace {

std::atomic<std::uint64_t> g_fallbacks{0};

RatVector restrict_to(const RatVector& v, const SubsetJ& j) {
  RatVector out(j.size());
  for (std::size_t k = 0; k < j.size(); ++k) out[k] = v[j.members()[k]];
  return out;
}

// Conditions (1) and (3) for y = pr_J(x); (2) holds by construction.
bool certifies(const ObtuseBasis& b, const Projection& p) {
  return pairing(b, p.value).all_nonnegative() &&
         std::all_of(p.coeffs.begin(), p.coeffs.end(),
                     [](const Rational& c) { return sgn(c) <= 0; });
}

// Drops indices whose coefficient vanishes.
RetractionResult canonical(const SubsetJ& j, Projection p) {
  RetractionResult r;
  r.value = std::move(p.value);
  std::vector<std::size_t> support;
  std::vector<Rational> coeffs;
  for (std::size_t k = 0; k < j.size(); ++k)
    if (sgn(p.coeffs[k]) != 0) {
      support.push_back(j.members()[k]);
      coeffs.push_back(p.coeffs[k]);
    }
  r.active_set = SubsetJ(std::move(support));
  r.residual_coeffs = RatVector(std::move(coeffs));
  return r;
}

void require_length(const ObtuseBasis& b, const AlphaVec& x) {
  if (x.size() != b.rank()) throw DimensionError("vector has wrong length");
}

}  // namespace

SubsetJ::SubsetJ(std::vector<std::size_t> members)
    : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

SubsetJ SubsetJ::from_mask(std::uint64_t mask, std::size_t n) {
  std::vector<std::size_t> m;
  for (std::size_t i = 0; i < n; ++i)
    if (mask >> i & 1U) m.push_back(i);
  return SubsetJ(std::move(m));
}

SubsetJ SubsetJ::all(std::size_t n) {
  std::vector<std::size_t> m(n);
  for (std::size_t i = 0; i < n; ++i) m[i] = i;
  return SubsetJ(std::move(m));
}

bool SubsetJ::contains(std::size_t i) const {
  return std::binary_search(members_.begin(), members_.end(), i);
}

void SubsetJ::insert(std::size_t i) {
  auto it = std::lower_bound(members_.begin(), members_.end(), i);
  if (it == members_.end() || *it != i) members_.insert(it, i);
}

std::uint64_t SubsetJ::mask() const {
  std::uint64_t m = 0;
  for (auto i : members_) m |= std::uint64_t{1} << i;
  return m;
}

Projection proj_J(const ObtuseBasis& b, const SubsetJ& j, const AlphaVec& x) {
  require_length(b, x);
  Projection p{x, RatVector(j.size())};
  if (j.empty()) return p;
  const RatVector rhs = restrict_to(pairing(b, x), j);
  p.coeffs = solve_spd(b.gram().principal(j.members()), rhs);
  for (std::size_t k = 0; k < j.size(); ++k)
    p.value.coords[j.members()[k]] -= p.coeffs[k];
  return p;
}

ConeCoordinates in_K_J(const ObtuseBasis& b, const SubsetJ& j,
                       const AlphaVec& x) {
  require_length(b, x);
  // Writing x = sum_{k not in J} a_k omega_k - sum_{i in J} b_i alpha_i and
  // pairing with alpha_k: b = -c with c the projection coefficients, and
  // a_k = <pr_J(x), alpha_k>.
  const Projection p = proj_J(b, j, x);
  const RatVector py = pairing(b, p.value);
  ConeCoordinates out;
  out.coords = RatVector(b.rank());
  std::size_t pos = 0;
  for (std::size_t k = 0; k < b.rank(); ++k)
    if (!j.contains(k)) out.coords[pos++] = py[k];
  for (std::size_t k = 0; k < j.size(); ++k) out.coords[pos++] = -p.coeffs[k];
  out.member = out.coords.all_nonnegative();
  return out;
}

CertificateCheck check_certificate(const ObtuseBasis& b, const AlphaVec& x,
                                   const RetractionResult& r) {
  CertificateCheck c;
  if (r.value.size() != b.rank() || x.size() != b.rank() ||
      r.residual_coeffs.size() != r.active_set.size())
    return c;
  const RatVector py = pairing(b, r.value);
  c.dominant = py.all_nonnegative();
  c.walls_vanish = std::all_of(
      r.active_set.members().begin(), r.active_set.members().end(),
      [&](std::size_t j) { return j < b.rank() && sgn(py[j]) == 0; });
  c.residual_nonpositive =
      std::all_of(r.residual_coeffs.begin(), r.residual_coeffs.end(),
                  [](const Rational& v) { return sgn(v) <= 0; });
  RatVector expected(b.rank());
  for (std::size_t k = 0; k < r.active_set.size(); ++k)
    if (r.active_set.members()[k] < b.rank())
      expected[r.active_set.members()[k]] = r.residual_coeffs[k];
  c.reconstructs = (x - r.value).coords == expected;
  return c;
}

RetractionResult retract_oracle(const ObtuseBasis& b, const AlphaVec& x,
                                std::size_t guard) {
  require_length(b, x);
  const std::size_t n = b.rank();
  if (n > guard || n > 63)
    throw GuardExceeded("subset enumeration refused for rank " +
                        std::to_string(n) + " (guard " + std::to_string(guard) +
                        ")");
  // Size first, then lexicographic order of the sorted member lists.
  for (std::size_t size = 0; size <= n; ++size) {
    std::vector<std::size_t> comb(size);
    for (std::size_t k = 0; k < size; ++k) comb[k] = k;
    while (true) {
      const SubsetJ j(comb);
      Projection p = proj_J(b, j, x);
      if (certifies(b, p)) return canonical(j, std::move(p));
      // Next combination in lexicographic order.
      std::size_t k = size;
      while (k > 0 && comb[k - 1] == n - size + k - 1) --k;
      if (k == 0) break;
      ++comb[k - 1];
      for (std::size_t t = k; t < size; ++t) comb[t] = comb[t - 1] + 1;
    }
  }
  throw InternalError("no subset certifies the retraction; arithmetic bug");
}

RetractionResult retract(const ObtuseBasis& b, const AlphaVec& x) {
  require_length(b, x);
  SubsetJ j;
  while (true) {
    Projection p = proj_J(b, j, x);
    const RatVector py = pairing(b, p.value);
    std::size_t k = 0;
    while (k < py.size() && sgn(py[k]) >= 0) ++k;
    if (k < py.size()) {
      j.insert(k);
      continue;
    }
    if (std::all_of(p.coeffs.begin(), p.coeffs.end(),
                    [](const Rational& c) { return sgn(c) <= 0; }))
      return canonical(j, std::move(p));
    break;
  }
  g_fallbacks.fetch_add(1, std::memory_order_relaxed);
  RetractionResult r = retract_oracle(b, x);
  if (!check_certificate(b, x, r).ok())
    throw InternalError("fallback result failed its certificate");
  return r;
}

SubsetJ linearity_domain(const ObtuseBasis& b, const AlphaVec& x) {
  // The support of the residual is a J with x in K_J.
  return retract(b, x).active_set;
}

std::uint64_t fallback_count() {
  return g_fallbacks.load(std::memory_order_relaxed);
}

void reset_fallback_count() { g_fallbacks.store(0, std::memory_order_relaxed); }

}  // namespace langlands
