#pragma once

#include "core/lie_algebra.hpp"

#include <cstdint>

namespace liedist {

/// Cartan subalgebra of a solvable algebra: the Fitting null component of
/// ad(x) for a regular element x. Candidates are tried in a deterministic
/// order (basis vectors first, then seeded random small-rational
/// combinations, up to `max_trials`); a candidate is accepted when the
/// resulting space is nilpotent and self-normalizing.
Subspace cartan_subalgebra(const LieAlgebra& b, std::uint64_t seed = 0, int max_trials = 64);

/// Subspace of h complementary to nprime ∩ h, chosen by completing the
/// echelon basis of nprime ∩ h with pivoted basis vectors of h.
Subspace complement_v(const LieAlgebra& a, const Subspace& h, const Subspace& nprime);

/// Ordered basis of a nilpotent algebra compatible with the lower central
/// series, with w_k = the largest i such that e_k lies in C^i. Vectors are
/// listed with nondecreasing weight.
struct WeightedBasis {
  std::vector<ExactVector> vectors;
  std::vector<std::size_t> weights;

  /// Coordinates of v in this basis (exact change of basis).
  ExactVector coordinates_of(const ExactVector& v) const;
};

WeightedBasis f_basis_weights(const LieAlgebra& a);

}  // namespace liedist
