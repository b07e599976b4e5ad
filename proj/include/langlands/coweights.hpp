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

#ifndef LANGLANDS_COWEIGHTS_HPP_
#define LANGLANDS_COWEIGHTS_HPP_

// The retraction on rational coweights of a reductive root datum.
//
// A root datum is given by matrices: s simple coroots (vectors in Q^r) and s
// simple roots (covectors on Q^r). Their pairing matrix M, with
// M(i, j) = <coroot_j, root_i>, must be a symmetrizable Cartan matrix of
// finite type. The coweight order is lambda <=_G mu iff mu - lambda is a
// nonnegative combination of simple coroots.
//
// retract_G(lambda) is the least dominant coweight mu >=_G lambda. Only the
// pairings p_i = <lambda, root_i> matter: with a positive diagonal D0 making
// G = D0 M symmetric, the coroot part of lambda is retracted in the basis of
// coroots with Gram matrix G, and the central part of lambda is carried
// along unchanged.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "langlands/retraction.hpp"

namespace langlands {

using Coweight = RatVector;

class RootDatum {
 public:
  // Validates: lengths agree, M(i, i) == 2, M(i, j) <= 0 off the diagonal,
  // M(i, j) == 0 iff M(j, i) == 0, M symmetrizable by a positive diagonal,
  // and D0 M positive definite.
  static RootDatum from_matrices(std::size_t lattice_rank,
                                 std::vector<RatVector> coroots,
                                 std::vector<RatVector> roots,
                                 std::string name = "custom");

  std::size_t lattice_rank() const { return rank_; }
  std::size_t semisimple_rank() const { return coroots_.size(); }
  const std::vector<RatVector>& coroots() const { return coroots_; }
  const std::vector<RatVector>& roots() const { return roots_; }
  const std::string& name() const { return name_; }

  // M(i, j) = <coroot_j, root_i>.
  const RatMatrix& pairing_matrix() const { return pairing_; }
  // Spanning-tree symmetrizer: the first index of every connected component
  // of the Dynkin graph gets 1.
  const std::vector<Rational>& symmetrizer() const { return symmetrizer_; }
  // Connected component (irreducible factor) of each simple root, numbered
  // in order of first appearance.
  const std::vector<std::size_t>& component() const { return component_; }
  std::size_t component_count() const { return components_; }
  // The coroots as an obtuse basis with Gram matrix D0 M.
  const ObtuseBasis& basis() const { return basis_; }

  // Same datum with simple roots and coroots reindexed: new index k is old
  // index perm[k].
  RootDatum permuted(const std::vector<std::size_t>& perm) const;

 private:
  RootDatum() = default;
  std::size_t rank_ = 0;
  std::vector<RatVector> coroots_;
  std::vector<RatVector> roots_;
  std::string name_;
  RatMatrix pairing_;
  std::vector<Rational> symmetrizer_;
  std::vector<std::size_t> component_;
  std::size_t components_ = 0;
  ObtuseBasis basis_ = ObtuseBasis::from_gram(RatMatrix(0, 0));
};

// GL(n): lattice Z^n, coroots e_i - e_{i+1}, roots e_i* - e_{i+1}*.
RootDatum make_gl(std::size_t n);

// Simply connected datum of a catalog type: coroots are the standard basis
// of Q^s and the roots are the rows of the Cartan matrix.
RootDatum make_simply_connected(std::string_view system_name);

// "gl4", "GL(4)", or a catalog name such as "B3".
RootDatum make_group(std::string_view name);

// Direct sum: lattice Q^(r_a + r_b), coroots and roots placed block
// diagonally.
RootDatum direct_sum(const RootDatum& a, const RootDatum& b);

struct LeqG {
  bool holds = false;
  // Coroot coefficients of mu - lambda when it lies in the coroot span.
  std::optional<RatVector> coefficients;
};

LeqG leq_G(const RootDatum& d, const Coweight& lambda, const Coweight& mu);

bool is_dominant_coweight(const RootDatum& d, const Coweight& lambda);

// <lambda, root_i> for every i.
RatVector root_pairings(const RootDatum& d, const Coweight& lambda);

struct CoweightRetraction {
  Coweight value;
  // value = lambda + sum_i d_i coroot_i, every d_i >= 0.
  RatVector d;
};

CoweightRetraction retract_G(const RootDatum& d, const Coweight& lambda);

// Same, with an explicit positive symmetrizer in place of the default one.
// Throws DomainError if diag(symmetrizer) M is not symmetric.
CoweightRetraction retract_G(const RootDatum& d, const Coweight& lambda,
                             const std::vector<Rational>& symmetrizer);

// d_i >= 0, value dominant, d_i > 0 implies <value, root_i> = 0, and
// value == lambda + sum d_i coroot_i exactly.
bool check_coweight_certificate(const RootDatum& d, const Coweight& lambda,
                                const CoweightRetraction& r);

// Splits delta into its coroot-span part (coroot coefficients) and a central
// remainder annihilated by every root.
struct CorootSplit {
  RatVector coefficients;
  Coweight central;
};
CorootSplit split_coweight(const RootDatum& d, const Coweight& delta);

// Squared length of delta for the Weyl-invariant form that is
// scaling[c] * (D0 M) on the coroot span of factor c and the standard dot
// product on central directions.
Rational invariant_norm2(const RootDatum& d,
                         const std::vector<Rational>& scaling,
                         const Coweight& delta);

struct MetricReport {
  std::size_t scalings = 0;
  std::size_t samples = 0;
  // Sampled dominant z closer to lambda than retract_G(lambda) under some
  // scaling.
  std::size_t violations = 0;
  // Whether the nearest dominant point computed under every scaling is the
  // same coweight.
  bool minimizers_equal = true;
  Coweight minimizer;
  std::optional<Coweight> counterexample;
};

// One scaling vector per entry of `scalings`; each holds one positive factor
// per irreducible component. Throws DomainError on a non-positive scaling or
// a wrong number of factors.
MetricReport check_metric_characterization(
    const RootDatum& d, const Coweight& lambda,
    const std::vector<std::vector<Rational>>& scalings, std::uint64_t seed,
    std::size_t samples);

}  // namespace langlands

#endif  // LANGLANDS_COWEIGHTS_HPP_
