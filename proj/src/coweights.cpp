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

#include "langlands/coweights.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <deque>

#include "langlands/sampling.hpp"

namespace langlands {

namespace {

RatMatrix symmetrized(const RatMatrix& m, const std::vector<Rational>& d0) {
  RatMatrix g = m;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) g(i, j) *= d0[i];
  return g;
}

Coweight combine_coroots(const RootDatum& d, const RatVector& coeffs) {
  Coweight out(d.lattice_rank());
  for (std::size_t j = 0; j < coeffs.size(); ++j)
    if (sgn(coeffs[j]) != 0) out += coeffs[j] * d.coroots()[j];
  return out;
}

void require_rank(const RootDatum& d, const Coweight& lambda) {
  if (lambda.size() != d.lattice_rank())
    throw DimensionError("coweight has " + std::to_string(lambda.size()) +
                         " entries, lattice rank is " +
                         std::to_string(d.lattice_rank()));
}

CoweightRetraction retract_with(const RootDatum& d, const Coweight& lambda,
                                const ObtuseBasis& basis) {
  require_rank(d, lambda);
  const CorootSplit split = split_coweight(d, lambda);
  const AlphaVec x(split.coefficients);
  const RetractionResult r = retract(basis, x);
  CoweightRetraction out;
  out.d = r.value.coords - x.coords;
  out.value = lambda + combine_coroots(d, out.d);
  return out;
}

}  // namespace

RootDatum RootDatum::from_matrices(std::size_t lattice_rank,
                                   std::vector<RatVector> coroots,
                                   std::vector<RatVector> roots,
                                   std::string name) {
  if (coroots.size() != roots.size())
    throw DomainError("root datum needs as many roots as coroots");
  for (const auto& v : coroots)
    if (v.size() != lattice_rank)
      throw DimensionError("coroot length differs from the lattice rank");
  for (const auto& v : roots)
    if (v.size() != lattice_rank)
      throw DimensionError("root length differs from the lattice rank");
  const std::size_t s = coroots.size();

  RootDatum d;
  d.rank_ = lattice_rank;
  d.name_ = std::move(name);
  d.pairing_ = RatMatrix(s, s);
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = 0; j < s; ++j)
      d.pairing_(i, j) = dot(roots[i], coroots[j]);
  const RatMatrix& m = d.pairing_;
  for (std::size_t i = 0; i < s; ++i) {
    if (m(i, i) != 2)
      throw DomainError("pairing matrix diagonal entry " +
                        std::to_string(i + 1) + " is not 2");
    for (std::size_t j = 0; j < s; ++j) {
      if (i == j) continue;
      if (sgn(m(i, j)) > 0)
        throw DomainError("pairing matrix has a positive off-diagonal entry");
      if ((sgn(m(i, j)) == 0) != (sgn(m(j, i)) == 0))
        throw DomainError("pairing matrix zero pattern is not symmetric");
    }
  }

  // Spanning-tree propagation of d_j = d_i M(i, j) / M(j, i).
  d.symmetrizer_.assign(s, Rational(0));
  d.component_.assign(s, 0);
  std::vector<bool> seen(s, false);
  for (std::size_t root = 0; root < s; ++root) {
    if (seen[root]) continue;
    const std::size_t comp = d.components_++;
    seen[root] = true;
    d.symmetrizer_[root] = 1;
    d.component_[root] = comp;
    std::deque<std::size_t> queue{root};
    while (!queue.empty()) {
      const std::size_t i = queue.front();
      queue.pop_front();
      for (std::size_t j = 0; j < s; ++j) {
        if (seen[j] || sgn(m(i, j)) == 0) continue;
        seen[j] = true;
        d.symmetrizer_[j] = d.symmetrizer_[i] * m(i, j) / m(j, i);
        d.component_[j] = comp;
        queue.push_back(j);
      }
    }
  }
  const RatMatrix g = symmetrized(m, d.symmetrizer_);
  if (!g.is_symmetric())
    throw DomainError("pairing matrix is not symmetrizable");
  if (!is_positive_definite(g))
    throw DomainError("pairing matrix is not of finite type");
  d.coroots_ = std::move(coroots);
  d.roots_ = std::move(roots);
  d.basis_ = ObtuseBasis::from_gram(g, d.name_);
  return d;
}

RootDatum RootDatum::permuted(const std::vector<std::size_t>& perm) const {
  if (perm.size() != semisimple_rank())
    throw DimensionError("permutation has the wrong length");
  std::vector<RatVector> co, ro;
  for (std::size_t k : perm) {
    co.push_back(coroots_.at(k));
    ro.push_back(roots_.at(k));
  }
  return from_matrices(rank_, std::move(co), std::move(ro), name_);
}

RootDatum make_gl(std::size_t n) {
  if (n == 0) throw DomainError("GL(n) needs n >= 1");
  std::vector<RatVector> co, ro;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    RatVector v(n);
    v[i] = 1;
    v[i + 1] = -1;
    co.push_back(v);
    ro.push_back(v);
  }
  return RootDatum::from_matrices(n, std::move(co), std::move(ro),
                                  "GL(" + std::to_string(n) + ")");
}

RootDatum make_simply_connected(std::string_view system_name) {
  const ObtuseBasis b = make_system(system_name);
  const std::size_t s = b.rank();
  const RatMatrix& g = b.gram();
  std::vector<RatVector> co, ro;
  for (std::size_t i = 0; i < s; ++i) {
    co.push_back(RatVector::unit(s, i));
    RatVector row(s);
    // <coroot_j, root_i> = 2 <alpha_i, alpha_j> / <alpha_j, alpha_j>.
    for (std::size_t j = 0; j < s; ++j) row[j] = 2 * g(i, j) / g(j, j);
    ro.push_back(std::move(row));
  }
  return RootDatum::from_matrices(s, std::move(co), std::move(ro), b.name());
}

RootDatum make_group(std::string_view name) {
  std::string lower;
  for (char c : name)
    if (c != '(' && c != ')' && c != ' ')
      lower += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (lower.rfind("gl", 0) == 0) {
    std::size_t n = 0;
    const char* first = lower.data() + 2;
    const char* last = lower.data() + lower.size();
    const auto [ptr, ec] = std::from_chars(first, last, n);
    if (ec != std::errc() || ptr != last || n == 0)
      throw DomainError("bad group name '" + std::string(name) + "'");
    return make_gl(n);
  }
  return make_simply_connected(name);
}

RootDatum direct_sum(const RootDatum& a, const RootDatum& b) {
  const std::size_t r = a.lattice_rank() + b.lattice_rank();
  std::vector<RatVector> co, ro;
  auto place = [&](const RatVector& v, std::size_t offset) {
    RatVector out(r);
    for (std::size_t k = 0; k < v.size(); ++k) out[offset + k] = v[k];
    return out;
  };
  for (std::size_t i = 0; i < a.semisimple_rank(); ++i) {
    co.push_back(place(a.coroots()[i], 0));
    ro.push_back(place(a.roots()[i], 0));
  }
  for (std::size_t i = 0; i < b.semisimple_rank(); ++i) {
    co.push_back(place(b.coroots()[i], a.lattice_rank()));
    ro.push_back(place(b.roots()[i], a.lattice_rank()));
  }
  return RootDatum::from_matrices(r, std::move(co), std::move(ro),
                                  a.name() + "+" + b.name());
}

RatVector root_pairings(const RootDatum& d, const Coweight& lambda) {
  require_rank(d, lambda);
  RatVector p(d.semisimple_rank());
  for (std::size_t i = 0; i < p.size(); ++i) p[i] = dot(d.roots()[i], lambda);
  return p;
}

CorootSplit split_coweight(const RootDatum& d, const Coweight& delta) {
  CorootSplit out;
  out.coefficients = solve(d.pairing_matrix(), root_pairings(d, delta));
  out.central = delta - combine_coroots(d, out.coefficients);
  return out;
}

LeqG leq_G(const RootDatum& d, const Coweight& lambda, const Coweight& mu) {
  require_rank(d, mu);
  const CorootSplit split = split_coweight(d, mu - lambda);
  LeqG out;
  if (!split.central.is_zero()) return out;
  out.holds = split.coefficients.all_nonnegative();
  out.coefficients = split.coefficients;
  return out;
}

bool is_dominant_coweight(const RootDatum& d, const Coweight& lambda) {
  return root_pairings(d, lambda).all_nonnegative();
}

CoweightRetraction retract_G(const RootDatum& d, const Coweight& lambda) {
  return retract_with(d, lambda, d.basis());
}

CoweightRetraction retract_G(const RootDatum& d, const Coweight& lambda,
                             const std::vector<Rational>& symmetrizer) {
  if (symmetrizer.size() != d.semisimple_rank())
    throw DimensionError("symmetrizer has the wrong length");
  for (const auto& s : symmetrizer)
    if (sgn(s) <= 0) throw DomainError("symmetrizer entries must be positive");
  const RatMatrix g = symmetrized(d.pairing_matrix(), symmetrizer);
  if (!g.is_symmetric())
    throw DomainError("diag(symmetrizer) * M is not symmetric");
  return retract_with(d, lambda, ObtuseBasis::from_gram(g, d.name()));
}

bool check_coweight_certificate(const RootDatum& d, const Coweight& lambda,
                                const CoweightRetraction& r) {
  if (r.d.size() != d.semisimple_rank() || r.value.size() != d.lattice_rank())
    return false;
  if (!r.d.all_nonnegative()) return false;
  const RatVector p = root_pairings(d, r.value);
  if (!p.all_nonnegative()) return false;
  for (std::size_t i = 0; i < p.size(); ++i)
    if (sgn(r.d[i]) > 0 && sgn(p[i]) != 0) return false;
  return r.value == lambda + combine_coroots(d, r.d);
}

Rational invariant_norm2(const RootDatum& d,
                         const std::vector<Rational>& scaling,
                         const Coweight& delta) {
  if (scaling.size() != d.component_count())
    throw DimensionError("need one scaling per irreducible factor");
  const CorootSplit split = split_coweight(d, delta);
  const RatMatrix& g = d.basis().gram();
  const RatVector& e = split.coefficients;
  Rational total = dot(split.central, split.central);
  for (std::size_t i = 0; i < e.size(); ++i)
    for (std::size_t j = 0; j < e.size(); ++j)
      if (sgn(g(i, j)) != 0)
        total += scaling[d.component()[i]] * g(i, j) * e[i] * e[j];
  return total;
}

MetricReport check_metric_characterization(
    const RootDatum& d, const Coweight& lambda,
    const std::vector<std::vector<Rational>>& scalings, std::uint64_t seed,
    std::size_t samples) {
  require_rank(d, lambda);
  for (const auto& sc : scalings) {
    if (sc.size() != d.component_count())
      throw DomainError("need one scaling per irreducible factor");
    for (const auto& v : sc)
      if (sgn(v) <= 0) throw DomainError("scalings must be positive");
  }
  MetricReport rep;
  rep.scalings = scalings.size();
  rep.minimizer = retract_G(d, lambda).value;

  // Nearest dominant point under each scaled form: retract in the coroot
  // basis whose Gram matrix is the scaled invariant form.
  for (const auto& sc : scalings) {
    std::vector<Rational> d0 = d.symmetrizer();
    for (std::size_t i = 0; i < d0.size(); ++i) d0[i] *= sc[d.component()[i]];
    if (!(retract_G(d, lambda, d0).value == rep.minimizer))
      rep.minimizers_equal = false;
  }

  // Dominant comparands: random dominant coroot-span vectors shifted by the
  // central part of lambda, and small dominant perturbations of the minimizer.
  const RatMatrix m_inv = invert(d.pairing_matrix());
  const Coweight central = split_coweight(d, lambda).central;
  SplitMix64 rng(derive_seed(seed, {tag_of("coweights.metric")}));
  const SampleBounds small{3, 4};
  for (std::size_t s = 0; s < samples; ++s) {
    RatVector t(d.semisimple_rank());
    const bool near = s % 2 == 1;
    for (std::size_t i = 0; i < t.size(); ++i)
      t[i] = near ? sample_rational(rng, 0, small) : sample_rational(rng, 0);
    Coweight z = combine_coroots(d, m_inv * t);
    z += near ? rep.minimizer : central;
    ++rep.samples;
    for (const auto& sc : scalings) {
      if (invariant_norm2(d, sc, lambda - rep.minimizer) >
          invariant_norm2(d, sc, lambda - z)) {
        ++rep.violations;
        if (!rep.counterexample) rep.counterexample = z;
        break;
      }
    }
  }
  return rep;
}

}  // namespace langlands
