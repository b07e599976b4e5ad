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

#include "langlands/linalg.hpp"

#include <algorithm>
#include <cctype>
#include <utility>

namespace langlands {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isdigit(static_cast<unsigned char>(c)) != 0;
  });
}

mpz_class parse_integer(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  return mpz_class(std::string(s), 10);
}

void require_square_symmetric(const RatMatrix& m, const char* what) {
  if (!m.is_square())
    throw DimensionError(std::string(what) + ": matrix is not square");
  if (!m.is_symmetric())
    throw DomainError(std::string(what) + ": matrix is not symmetric");
}

// Unit lower triangular L and diagonal D with M = L D L^T. Returns false when
// some pivot is not strictly positive.
bool ldlt(const RatMatrix& m, RatMatrix& l, std::vector<Rational>& d) {
  const std::size_t n = m.rows();
  l = RatMatrix::identity(n);
  d.assign(n, Rational(0));
  for (std::size_t j = 0; j < n; ++j) {
    Rational pivot = m(j, j);
    for (std::size_t k = 0; k < j; ++k) pivot -= l(j, k) * l(j, k) * d[k];
    if (sgn(pivot) <= 0) return false;
    d[j] = pivot;
    for (std::size_t i = j + 1; i < n; ++i) {
      Rational s = m(i, j);
      for (std::size_t k = 0; k < j; ++k) s -= l(i, k) * l(j, k) * d[k];
      l(i, j) = s / pivot;
    }
  }
  return true;
}

RatVector ldlt_solve(const RatMatrix& l, const std::vector<Rational>& d,
                     const RatVector& b) {
  const std::size_t n = b.size();
  RatVector y = b;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < i; ++k) y[i] -= l(i, k) * y[k];
  for (std::size_t i = 0; i < n; ++i) y[i] /= d[i];
  for (std::size_t i = n; i-- > 0;)
    for (std::size_t k = i + 1; k < n; ++k) y[i] -= l(k, i) * y[k];
  return y;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = trim(text);
  const auto slash = s.find('/');
  std::string_view num = s.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1")
                                                         : s.substr(slash + 1);
  num = trim(num);
  den = trim(den);
  if (!is_integer_literal(num) || !is_integer_literal(den) ||
      den.front() == '-' || den.front() == '+')
    throw DomainError("malformed rational '" + std::string(text) + "'");
  mpz_class q = parse_integer(den);
  if (q == 0)
    throw DomainError("zero denominator in '" + std::string(text) + "'");
  Rational r(parse_integer(num), q);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::vector<Rational> parse_rational_list(std::string_view csv) {
  std::vector<Rational> out;
  if (trim(csv).empty()) return out;
  std::size_t start = 0;
  while (true) {
    const auto comma = csv.find(',', start);
    out.push_back(parse_rational(csv.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

RatVector RatVector::unit(std::size_t n, std::size_t i) {
  RatVector v(n);
  v[i] = 1;
  return v;
}

bool RatVector::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const Rational& r) { return sgn(r) == 0; });
}

bool RatVector::all_nonnegative() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const Rational& r) { return sgn(r) >= 0; });
}

RatVector& RatVector::operator+=(const RatVector& o) {
  if (o.size() != size()) throw DimensionError("vector length mismatch");
  for (std::size_t i = 0; i < size(); ++i) entries_[i] += o.entries_[i];
  return *this;
}

RatVector& RatVector::operator-=(const RatVector& o) {
  if (o.size() != size()) throw DimensionError("vector length mismatch");
  for (std::size_t i = 0; i < size(); ++i) entries_[i] -= o.entries_[i];
  return *this;
}

RatVector& RatVector::operator*=(const Rational& s) {
  for (auto& e : entries_) e *= s;
  return *this;
}

Rational dot(const RatVector& a, const RatVector& b) {
  if (a.size() != b.size()) throw DimensionError("vector length mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

RatMatrix::RatMatrix(
    std::initializer_list<std::initializer_list<Rational>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  entries_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionError("ragged matrix literal");
    entries_.insert(entries_.end(), r.begin(), r.end());
  }
}

RatMatrix RatMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
  RatMatrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
  for (std::size_t r = 0; r < m.rows_; ++r) {
    if (rows[r].size() != m.cols_) throw DimensionError("ragged matrix rows");
    for (std::size_t c = 0; c < m.cols_; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

bool RatMatrix::is_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = r + 1; c < cols_; ++c)
      if ((*this)(r, c) != (*this)(c, r)) return false;
  return true;
}

RatVector RatMatrix::row(std::size_t r) const {
  RatVector v(cols_);
  for (std::size_t c = 0; c < cols_; ++c) v[c] = (*this)(r, c);
  return v;
}

RatVector RatMatrix::column(std::size_t c) const {
  RatVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

RatMatrix RatMatrix::principal(const std::vector<std::size_t>& idx) const {
  RatMatrix p(idx.size(), idx.size());
  for (std::size_t a = 0; a < idx.size(); ++a)
    for (std::size_t b = 0; b < idx.size(); ++b)
      p(a, b) = (*this)(idx[a], idx[b]);
  return p;
}

RatMatrix& RatMatrix::operator*=(const Rational& s) {
  for (auto& e : entries_) e *= s;
  return *this;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols_ != b.rows_) throw DimensionError("matrix product shape mismatch");
  RatMatrix p(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& aik = a(i, k);
      if (sgn(aik) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) p(i, j) += aik * b(k, j);
    }
  return p;
}

RatVector operator*(const RatMatrix& m, const RatVector& v) {
  if (m.cols_ != v.size()) throw DimensionError("matrix-vector shape mismatch");
  RatVector out(m.rows_);
  for (std::size_t i = 0; i < m.rows_; ++i)
    for (std::size_t k = 0; k < m.cols_; ++k) out[i] += m(i, k) * v[k];
  return out;
}

RatVector solve_spd(const RatMatrix& m, const RatVector& b) {
  if (!m.is_square() || m.rows() != b.size())
    throw DimensionError("solve_spd: dimension mismatch");
  RatMatrix l;
  std::vector<Rational> d;
  if (!ldlt(m, l, d))
    throw DomainError("solve_spd: matrix is singular or not positive definite");
  return ldlt_solve(l, d, b);
}

RatMatrix invert_spd(const RatMatrix& m) {
  require_square_symmetric(m, "invert_spd");
  RatMatrix l;
  std::vector<Rational> d;
  if (!ldlt(m, l, d))
    throw DomainError(
        "invert_spd: matrix is singular or not positive definite");
  const std::size_t n = m.rows();
  RatMatrix inv(n, n);
  for (std::size_t c = 0; c < n; ++c) {
    RatVector col = ldlt_solve(l, d, RatVector::unit(n, c));
    for (std::size_t r = 0; r < n; ++r) inv(r, c) = col[r];
  }
  return inv;
}

bool is_positive_definite(const RatMatrix& m) {
  require_square_symmetric(m, "is_positive_definite");
  RatMatrix l;
  std::vector<Rational> d;
  // The k-th leading minor is the product of the first k pivots.
  return ldlt(m, l, d);
}

Rational determinant(const RatMatrix& m) {
  if (!m.is_square()) throw DimensionError("determinant: matrix is not square");
  RatMatrix a = m;
  const std::size_t n = a.rows();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && sgn(a(p, c)) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (std::size_t k = 0; k < n; ++k) std::swap(a(p, k), a(c, k));
      det = -det;
    }
    det *= a(c, c);
    for (std::size_t r = c + 1; r < n; ++r) {
      if (sgn(a(r, c)) == 0) continue;
      const Rational f = a(r, c) / a(c, c);
      for (std::size_t k = c; k < n; ++k) a(r, k) -= f * a(c, k);
    }
  }
  return det;
}

RatMatrix invert(const RatMatrix& m) {
  if (!m.is_square()) throw DimensionError("invert: matrix is not square");
  const std::size_t n = m.rows();
  RatMatrix a = m;
  RatMatrix inv = RatMatrix::identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && sgn(a(p, c)) == 0) ++p;
    if (p == n) throw DomainError("invert: matrix is singular");
    if (p != c)
      for (std::size_t k = 0; k < n; ++k) {
        std::swap(a(p, k), a(c, k));
        std::swap(inv(p, k), inv(c, k));
      }
    const Rational piv = a(c, c);
    for (std::size_t k = 0; k < n; ++k) {
      a(c, k) /= piv;
      inv(c, k) /= piv;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || sgn(a(r, c)) == 0) continue;
      const Rational f = a(r, c);
      for (std::size_t k = 0; k < n; ++k) {
        a(r, k) -= f * a(c, k);
        inv(r, k) -= f * inv(c, k);
      }
    }
  }
  return inv;
}

RatVector solve(const RatMatrix& m, const RatVector& b) {
  if (!m.is_square() || m.rows() != b.size())
    throw DimensionError("solve: dimension mismatch");
  return invert(m) * b;
}

}  // namespace langlands
