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

#ifndef LANGLANDS_RETRACTION_HPP_
#define LANGLANDS_RETRACTION_HPP_

// The retraction L : V -> V+ sending x to the nearest point of the dominant
// cone.
//
// For J a subset of the index set, pr_J is the orthogonal projection onto the
// orthogonal complement of V_J = span{alpha_j : j in J}, and K_J is the cone
// generated by omega_j (j not in J) and -alpha_i (i in J). The cones K_J are
// the linearity domains of L, and L = pr_J on K_J.
//
// A result y = L(x) is certified by an active set J and coefficients c_j:
//   (1) <y, alpha_i> >= 0 for all i,
//   (2) <y, alpha_j> == 0 for j in J,
//   (3) x - y == sum_{j in J} c_j alpha_j with every c_j <= 0.
// Those three conditions characterize L(x) for any positive definite Gram
// matrix. When the basis is obtuse, L(x) is also the least dominant vector
// that dominates x.

#include <atomic>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "langlands/root_data.hpp"

namespace langlands {

// Raised when no subset certifies a retraction. That cannot happen for a
// positive definite Gram matrix, so it signals an arithmetic bug.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Raised when an exhaustive enumeration would exceed its size guard.
class GuardExceeded : public DomainError {
 public:
  using DomainError::DomainError;
};

inline constexpr std::size_t kEnumerationGuard = 16;

// A subset of {0, ..., n-1}, stored sorted.
class SubsetJ {
 public:
  SubsetJ() = default;
  explicit SubsetJ(std::vector<std::size_t> members);
  static SubsetJ from_mask(std::uint64_t mask, std::size_t n);
  static SubsetJ all(std::size_t n);

  const std::vector<std::size_t>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool contains(std::size_t i) const;
  void insert(std::size_t i);
  std::uint64_t mask() const;

  friend bool operator==(const SubsetJ&, const SubsetJ&) = default;

 private:
  std::vector<std::size_t> members_;
};

struct Projection {
  AlphaVec value;
  // coeffs[k] belongs to J.members()[k]; x - value = sum coeffs[k] alpha_{J_k}.
  RatVector coeffs;
};

// y = x - sum_{j in J} c_j alpha_j where G_JJ c = (<x, alpha_j>)_{j in J}.
Projection proj_J(const ObtuseBasis& b, const SubsetJ& j, const AlphaVec& x);

struct ConeCoordinates {
  bool member = false;
  // Coefficients on the generators of K_J, in the order omega_j (j not in J,
  // ascending) then -alpha_i (i in J, ascending).
  RatVector coords;
};

ConeCoordinates in_K_J(const ObtuseBasis& b, const SubsetJ& j,
                       const AlphaVec& x);

struct RetractionResult {
  AlphaVec value;
  SubsetJ active_set;
  // residual_coeffs[k] belongs to active_set.members()[k].
  RatVector residual_coeffs;
};

// Per-condition outcome of checking a certificate.
struct CertificateCheck {
  bool dominant = false;
  bool walls_vanish = false;
  bool residual_nonpositive = false;
  bool reconstructs = false;
  bool ok() const {
    return dominant && walls_vanish && residual_nonpositive && reconstructs;
  }
};

CertificateCheck check_certificate(const ObtuseBasis& b, const AlphaVec& x,
                                   const RetractionResult& r);

// Active-set growth with an exhaustive fallback. Works for any positive
// definite Gram matrix. The reported active set is the support of the
// residual coefficients: {j : c_j != 0}. Throws InternalError if the result
// cannot be certified, GuardExceeded if the fallback would need to enumerate
// more than 2^kEnumerationGuard subsets.
RetractionResult retract(const ObtuseBasis& b, const AlphaVec& x);

// Reference implementation: tries every subset J in order of increasing size
// (lexicographic within a size) and returns the first whose projection
// satisfies the full certificate.
RetractionResult retract_oracle(const ObtuseBasis& b, const AlphaVec& x,
                                std::size_t guard = kEnumerationGuard);

// A J with x in K_J; pr_J(x) equals retract(x).value.
SubsetJ linearity_domain(const ObtuseBasis& b, const AlphaVec& x);

// Number of retract() calls that needed the exhaustive fallback since process
// start (or the last reset).
std::uint64_t fallback_count();
void reset_fallback_count();

}  // namespace langlands

#endif  // LANGLANDS_RETRACTION_HPP_
