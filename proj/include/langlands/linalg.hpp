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

#ifndef LANGLANDS_LINALG_HPP_
#define LANGLANDS_LINALG_HPP_

// Exact rational scalars, vectors and small dense matrices.
//
// Every value is exact. Rationals are GMP mpq values kept in canonical form
// (lowest terms, positive denominator); no operation in this header rounds.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace langlands {

using Rational = mpq_class;

// Thrown for malformed input and violated preconditions.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Thrown when dimensions of operands do not agree.
class DimensionError : public DomainError {
 public:
  using DomainError::DomainError;
};

// Parses "p/q" or "p" (optional sign, surrounding blanks allowed).
// The result is canonical. Throws DomainError on anything else, including
// a zero denominator and decimal notation.
Rational parse_rational(std::string_view text);

// "p/q", or "p" when q == 1.
std::string to_string(const Rational& r);

// Splits a comma separated list of rationals. An empty string is an empty
// list.
std::vector<Rational> parse_rational_list(std::string_view csv);

class RatVector {
 public:
  RatVector() = default;
  explicit RatVector(std::size_t n) : entries_(n) {}
  RatVector(std::initializer_list<Rational> init) : entries_(init) {}
  explicit RatVector(std::vector<Rational> entries)
      : entries_(std::move(entries)) {}

  static RatVector zero(std::size_t n) { return RatVector(n); }
  static RatVector unit(std::size_t n, std::size_t i);

  std::size_t size() const { return entries_.size(); }
  Rational& operator[](std::size_t i) { return entries_[i]; }
  const Rational& operator[](std::size_t i) const { return entries_[i]; }
  // Bounds-checked access.
  const Rational& at(std::size_t i) const { return entries_.at(i); }

  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }
  const std::vector<Rational>& entries() const { return entries_; }

  bool is_zero() const;
  bool all_nonnegative() const;

  RatVector& operator+=(const RatVector& o);
  RatVector& operator-=(const RatVector& o);
  RatVector& operator*=(const Rational& s);

  friend RatVector operator+(RatVector a, const RatVector& b) { return a += b; }
  friend RatVector operator-(RatVector a, const RatVector& b) { return a -= b; }
  friend RatVector operator*(const Rational& s, RatVector a) { return a *= s; }
  friend RatVector operator-(RatVector a) { return a *= Rational(-1); }
  friend bool operator==(const RatVector& a, const RatVector& b) {
    return a.entries_ == b.entries_;
  }

 private:
  std::vector<Rational> entries_;
};

Rational dot(const RatVector& a, const RatVector& b);

class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {}
  // Row-major nested initializer; all rows must have the same length.
  RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows);
  static RatMatrix from_rows(const std::vector<std::vector<Rational>>& rows);

  static RatMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  bool is_symmetric() const;

  Rational& operator()(std::size_t r, std::size_t c) {
    return entries_[r * cols_ + c];
  }
  const Rational& operator()(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }

  RatVector row(std::size_t r) const;
  RatVector column(std::size_t c) const;
  RatMatrix transpose() const;
  // Principal submatrix on the given (sorted or not) index list.
  RatMatrix principal(const std::vector<std::size_t>& idx) const;

  RatMatrix& operator*=(const Rational& s);
  friend RatMatrix operator*(const Rational& s, RatMatrix m) { return m *= s; }
  friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
  friend RatVector operator*(const RatMatrix& m, const RatVector& v);
  friend bool operator==(const RatMatrix& a, const RatMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

// Exact solution of M x = b for symmetric positive definite M, by rational
// LDL^T factorization without pivoting. Throws DimensionError on mismatched
// shapes and DomainError if a pivot vanishes or goes negative (M was not
// SPD).
RatVector solve_spd(const RatMatrix& m, const RatVector& b);

// Exact inverse of a symmetric positive definite matrix. Throws DomainError on
// non-symmetric or singular input.
RatMatrix invert_spd(const RatMatrix& m);

// Sylvester's criterion: all leading principal minors positive. Throws
// DomainError when m is not square and symmetric.
bool is_positive_definite(const RatMatrix& m);

// Determinant of any square matrix by Gaussian elimination with row pivoting.
Rational determinant(const RatMatrix& m);

// Inverse of any nonsingular square matrix (Gauss-Jordan). Throws DomainError
// when singular.
RatMatrix invert(const RatMatrix& m);

// Solves m x = b for a general nonsingular square matrix.
RatVector solve(const RatMatrix& m, const RatVector& b);

}  // namespace langlands

#endif  // LANGLANDS_LINALG_HPP_
