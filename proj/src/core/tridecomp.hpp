#pragma once

#include "core/bch.hpp"
#include "core/fixtures.hpp"
#include "core/matrix_rep.hpp"
#include "core/structure.hpp"

#include <memory>

namespace liedist {

/// g = exp(eta) exp(xi) l with eta in n' and xi in v, both stored as
/// ambient coordinate vectors with exact subspace membership.
struct TriDecomposition {
  ExactVector eta;
  ExactVector xi;
  GroupElement l;
};

/// Everything needed to evaluate the normal form g = exp(eta) exp(xi) l:
/// the semidirect split b + l of the ambient algebra, the intermediate
/// ideal n', a Cartan subalgebra h of b, the complement v of n' ∩ h in h,
/// and the nilpotent quotient b/n' with its filtration weights.
class DecompositionContext {
 public:
  /// Validates all structural hypotheses exactly (n' an ideal between the
  /// radicals, b + l = g a semidirect split with [l, b] ⊆ n', n' + h = b,
  /// dtau|v a linear isomorphism onto b/n').
  DecompositionContext(const Fixture& fixture, const Subspace& nprime,
                       std::uint64_t cartan_seed = 0);

  const Fixture& fixture() const { return fixture_; }
  const Subspace& nprime() const { return nprime_; }
  const Subspace& cartan() const { return cartan_; }
  const Subspace& complement() const { return v_; }
  const LieAlgebraPtr& quotient_algebra_ptr() const { return quotient_.algebra; }
  const WeightedBasis& quotient_weights() const { return quotient_weights_; }
  std::size_t quotient_class() const { return quotient_class_; }

  /// dq(x): image of an ambient vector in b/n' coordinates (kills l and n').
  ExactVector project_quotient(const ExactVector& x) const;

  /// l-part of an ambient vector (as an ambient vector inside the l
  /// subalgebra).
  ExactVector project_l(const ExactVector& x) const;

  /// Quotient coordinates of log(tau(g)) accumulated letter-by-letter
  /// through the BCH product in the nilpotent quotient.
  ExactVector quotient_log(const GroupElement& g) const;

  TriDecomposition decompose(const GroupElement& g) const;
  GroupElement compose(const TriDecomposition& t) const;

  /// e^{ad x} applied to v; exact when the bracket series terminates.
  ExactVector ad_exp_apply(const ExactVector& x, const ExactVector& v) const;

  /// Coordinates of dtau(xi) in the quotient filtration basis.
  ExactVector quotient_coords(const ExactVector& ambient) const;

 private:
  Fixture fixture_;
  Subspace nprime_;
  Subspace cartan_;  // ambient coordinates
  Subspace v_;
  QuotientData quotient_;       // of the b subalgebra by n'
  WeightedBasis quotient_weights_;
  std::size_t quotient_class_ = 1;
  ExactMatrix split_inverse_;   // inverse of [b-frame | l-frame] columns
  std::size_t b_dim_ = 0;
  std::vector<ExactVector> b_frame_;
  std::vector<ExactVector> l_frame_;
  ExactMatrix dq_;              // quotient projection of ambient vectors
  ExactMatrix v_to_quotient_inverse_;
};

using DecompositionContextPtr = std::shared_ptr<const DecompositionContext>;

}  // namespace liedist
