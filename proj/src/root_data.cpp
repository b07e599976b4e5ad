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

#include "langlands/root_data.hpp"

#include <cctype>
#include <charconv>
#include <utility>

namespace langlands {

namespace {

// Squared lengths (short = 2) and the bond list of each Dynkin diagram,
// Bourbaki numbering, 0-based.
struct Diagram {
  std::vector<Rational> lengths;
  std::vector<std::pair<std::size_t, std::size_t>> bonds;
};

Diagram diagram(Family family, std::size_t n) {
  Diagram d;
  d.lengths.assign(n, Rational(2));
  auto chain = [&](std::size_t from, std::size_t to) {
    for (std::size_t i = from; i + 1 < to; ++i) d.bonds.emplace_back(i, i + 1);
  };
  switch (family) {
    case Family::A:
      chain(0, n);
      break;
    case Family::B:
      for (std::size_t i = 0; i + 1 < n; ++i) d.lengths[i] = 4;
      chain(0, n);
      break;
    case Family::C:
      d.lengths[n - 1] = 4;
      chain(0, n);
      break;
    case Family::D:
      chain(0, n - 1);
      d.bonds.emplace_back(n - 3, n - 1);
      break;
    case Family::E:
      d.bonds = {{0, 2}, {2, 3}, {3, 4}, {1, 3}};
      for (std::size_t i = 4; i + 1 < n; ++i) d.bonds.emplace_back(i, i + 1);
      break;
    case Family::F:
      d.lengths = {4, 4, 2, 2};
      chain(0, 4);
      break;
    case Family::G:
      d.lengths = {2, 6};
      chain(0, 2);
      break;
    case Family::Custom:
      break;
  }
  return d;
}

// Symmetrized Cartan entry for a bond between roots of squared lengths a, b:
// -max(a, b) / 2.
Rational bond_entry(const Rational& a, const Rational& b) {
  return -(a > b ? a : b) / 2;
}

}  // namespace

bool valid_cartan_type(Family family, std::size_t rank) {
  switch (family) {
    case Family::A:
      return rank >= 1;
    case Family::B:
      return rank >= 2;
    case Family::C:
      return rank >= 3;
    case Family::D:
      return rank >= 4;
    case Family::E:
      return rank >= 6 && rank <= 8;
    case Family::F:
      return rank == 4;
    case Family::G:
      return rank == 2;
    case Family::Custom:
      return rank >= 1;
  }
  return false;
}

SystemSpec SystemSpec::parse(std::string_view name) {
  if (name.size() < 2)
    throw DomainError("unknown root system '" + std::string(name) + "'");
  SystemSpec spec;
  switch (std::toupper(static_cast<unsigned char>(name.front()))) {
    case 'A':
      spec.family = Family::A;
      break;
    case 'B':
      spec.family = Family::B;
      break;
    case 'C':
      spec.family = Family::C;
      break;
    case 'D':
      spec.family = Family::D;
      break;
    case 'E':
      spec.family = Family::E;
      break;
    case 'F':
      spec.family = Family::F;
      break;
    case 'G':
      spec.family = Family::G;
      break;
    default:
      throw DomainError("unknown root system family in '" + std::string(name) +
                        "'");
  }
  const std::string_view digits = name.substr(1);
  const auto [ptr, ec] =
      std::from_chars(digits.data(), digits.data() + digits.size(), spec.rank);
  if (ec != std::errc() || ptr != digits.data() + digits.size())
    throw DomainError("bad rank in root system name '" + std::string(name) +
                      "'");
  if (!valid_cartan_type(spec.family, spec.rank))
    throw DomainError("'" + std::string(name) + "' is not a valid Cartan type");
  return spec;
}

std::string SystemSpec::name() const {
  static constexpr char kLetters[] = "ABCDEFG";
  if (family == Family::Custom) return "custom";
  return kLetters[static_cast<int>(family)] + std::to_string(rank);
}

ObtuseBasis ObtuseBasis::from_gram(RatMatrix gram, std::string name) {
  if (!gram.is_square()) throw DimensionError("Gram matrix is not square");
  if (!gram.is_symmetric()) throw DomainError("Gram matrix is not symmetric");
  if (!is_positive_definite(gram))
    throw DomainError("Gram matrix is not positive definite");
  ObtuseBasis b;
  b.dual_ = invert_spd(gram);
  b.obtuse_ = true;
  for (std::size_t i = 0; i < gram.rows(); ++i)
    for (std::size_t j = 0; j < gram.cols(); ++j)
      if (i != j && sgn(gram(i, j)) > 0) b.obtuse_ = false;
  b.gram_ = std::move(gram);
  b.name_ = std::move(name);
  return b;
}

ObtuseBasis make_system(const SystemSpec& spec) {
  if (spec.family == Family::Custom) {
    if (!spec.custom_gram)
      throw DomainError("custom system without a Gram matrix");
    return ObtuseBasis::from_gram(*spec.custom_gram, "custom");
  }
  if (!valid_cartan_type(spec.family, spec.rank))
    throw DomainError("invalid family/rank combination");
  const Diagram d = diagram(spec.family, spec.rank);
  RatMatrix g(spec.rank, spec.rank);
  for (std::size_t i = 0; i < spec.rank; ++i) g(i, i) = d.lengths[i];
  for (const auto& [i, j] : d.bonds) {
    g(i, j) = bond_entry(d.lengths[i], d.lengths[j]);
    g(j, i) = g(i, j);
  }
  return ObtuseBasis::from_gram(std::move(g), spec.name());
}

ObtuseBasis make_system(std::string_view name) {
  return make_system(SystemSpec::parse(name));
}

RatMatrix dual_basis(const ObtuseBasis& b) { return b.dual(); }

AlphaVec alpha(const ObtuseBasis& b, std::size_t i) {
  return AlphaVec(RatVector::unit(b.rank(), i));
}

AlphaVec omega(const ObtuseBasis& b, std::size_t i) {
  return AlphaVec(b.dual().column(i));
}

RatVector pairing(const ObtuseBasis& b, const AlphaVec& x) {
  if (x.size() != b.rank()) throw DimensionError("vector has wrong length");
  return b.gram() * x.coords;
}

Rational inner(const ObtuseBasis& b, const AlphaVec& x, const AlphaVec& y) {
  return dot(pairing(b, x), y.coords);
}

Rational squared_distance(const ObtuseBasis& b, const AlphaVec& x,
                          const AlphaVec& y) {
  const AlphaVec d = x - y;
  return inner(b, d, d);
}

bool in_dominant(const ObtuseBasis& b, const AlphaVec& x) {
  return pairing(b, x).all_nonnegative();
}

bool in_pos_cone(const ObtuseBasis& b, const AlphaVec& x) {
  if (x.size() != b.rank()) throw DimensionError("vector has wrong length");
  return x.coords.all_nonnegative();
}

bool leq(const ObtuseBasis& b, const AlphaVec& x, const AlphaVec& y) {
  return in_pos_cone(b, y - x);
}

AlphaVec infimum(const ObtuseBasis& b, const std::vector<AlphaVec>& family) {
  if (family.empty()) throw DomainError("infimum of an empty family");
  AlphaVec out = family.front();
  if (out.size() != b.rank()) throw DimensionError("vector has wrong length");
  for (const auto& x : family) {
    if (x.size() != b.rank()) throw DimensionError("vector has wrong length");
    for (std::size_t i = 0; i < out.size(); ++i)
      if (x[i] < out[i]) out.coords[i] = x[i];
  }
  return out;
}

WellKnownCheck check_wellknown(const ObtuseBasis& b) {
  WellKnownCheck res;
  const RatMatrix& w = b.dual();
  for (std::size_t c = 0; c < w.cols() && res.holds; ++c)
    for (std::size_t r = 0; r < w.rows(); ++r)
      if (sgn(w(r, c)) < 0) {
        res = {false, r, c, w(r, c)};
        break;
      }
  return res;
}

}  // namespace langlands
