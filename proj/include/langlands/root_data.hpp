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

#ifndef LANGLANDS_ROOT_DATA_HPP_
#define LANGLANDS_ROOT_DATA_HPP_

// A basis {alpha_i} of a rational inner-product space, given by its Gram
// matrix, together with the dual basis {omega_i}, the dominant cone
// V+ = cone(omega_i), the positive cone Vpos = cone(alpha_i), and the
// dominance order x <= y iff y - x is in Vpos.
//
// Vectors are always stored in alpha-coordinates: x = sum_i c_i alpha_i.
// In these coordinates Vpos is the nonnegative orthant and the infimum of a
// family is the coordinate-wise minimum. The omega-coordinates of x are the
// pairings <x, alpha_i> = (G c)_i.
//
// Catalog systems use the symmetrized Cartan matrix with short roots of
// squared length 2. Any positive rescaling of the Gram matrix gives the same
// retraction, so the normalization is a convention only.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "langlands/linalg.hpp"

namespace langlands {

enum class Family { A, B, C, D, E, F, G, Custom };

struct SystemSpec {
  Family family = Family::A;
  std::size_t rank = 1;
  std::optional<RatMatrix> custom_gram;

  // "A3", "e8", "G2", ... Throws DomainError on unknown family or invalid
  // family/rank combination.
  static SystemSpec parse(std::string_view name);
  std::string name() const;
};

// Cartan-type validity: A>=1, B>=2, C>=3, D>=4, E 6..8, F4, G2.
bool valid_cartan_type(Family family, std::size_t rank);

class ObtuseBasis {
 public:
  // Validates that the Gram matrix is symmetric positive definite.
  static ObtuseBasis from_gram(RatMatrix gram, std::string name = "custom");

  std::size_t rank() const { return gram_.rows(); }
  const RatMatrix& gram() const { return gram_; }
  // Column i holds the alpha-coordinates of omega_i. Equals gram^{-1}.
  const RatMatrix& dual() const { return dual_; }
  // True iff <alpha_i, alpha_j> <= 0 for all i != j.
  bool obtuse() const { return obtuse_; }
  const std::string& name() const { return name_; }

 private:
  ObtuseBasis() = default;
  RatMatrix gram_;
  RatMatrix dual_;
  bool obtuse_ = false;
  std::string name_;
};

// A vector of V in alpha-coordinates.
struct AlphaVec {
  RatVector coords;

  AlphaVec() = default;
  explicit AlphaVec(RatVector c) : coords(std::move(c)) {}
  AlphaVec(std::initializer_list<Rational> init) : coords(init) {}

  static AlphaVec zero(std::size_t n) { return AlphaVec(RatVector(n)); }
  std::size_t size() const { return coords.size(); }
  const Rational& operator[](std::size_t i) const { return coords[i]; }

  friend AlphaVec operator+(const AlphaVec& a, const AlphaVec& b) {
    return AlphaVec(a.coords + b.coords);
  }
  friend AlphaVec operator-(const AlphaVec& a, const AlphaVec& b) {
    return AlphaVec(a.coords - b.coords);
  }
  friend AlphaVec operator*(const Rational& s, const AlphaVec& a) {
    return AlphaVec(s * a.coords);
  }
  friend bool operator==(const AlphaVec& a, const AlphaVec& b) {
    return a.coords == b.coords;
  }
};

// Symmetrized Cartan matrix of a catalog type, or the custom Gram matrix.
ObtuseBasis make_system(const SystemSpec& spec);
ObtuseBasis make_system(std::string_view name);

// gram^{-1}; column i = alpha-coordinates of omega_i.
RatMatrix dual_basis(const ObtuseBasis& b);

AlphaVec alpha(const ObtuseBasis& b, std::size_t i);
AlphaVec omega(const ObtuseBasis& b, std::size_t i);

// Entry i is <x, alpha_i> = (G c)_i.
RatVector pairing(const ObtuseBasis& b, const AlphaVec& x);

// <x, y> through the Gram matrix.
Rational inner(const ObtuseBasis& b, const AlphaVec& x, const AlphaVec& y);
Rational squared_distance(const ObtuseBasis& b, const AlphaVec& x,
                          const AlphaVec& y);

bool in_dominant(const ObtuseBasis& b, const AlphaVec& x);
bool in_pos_cone(const ObtuseBasis& b, const AlphaVec& x);
bool leq(const ObtuseBasis& b, const AlphaVec& x, const AlphaVec& y);

// Coordinate-wise minimum in the alpha basis; the greatest lower bound for
// the dominance order. When b is obtuse and every member is dominant the
// result is dominant. Throws DomainError on an empty family.
AlphaVec infimum(const ObtuseBasis& b, const std::vector<AlphaVec>& family);

// Whether every omega_i lies in Vpos, i.e. V+ is contained in Vpos. On
// failure, the first offending (row, column) of the dual basis is recorded.
struct WellKnownCheck {
  bool holds = true;
  std::size_t row = 0;
  std::size_t column = 0;
  Rational entry;
};
WellKnownCheck check_wellknown(const ObtuseBasis& b);

}  // namespace langlands

#endif  // LANGLANDS_ROOT_DATA_HPP_
