#pragma once

#include "core/exact_matrix.hpp"

#include <memory>
#include <string>
#include <vector>

namespace liedist {

/// A finite-dimensional complex Lie algebra given by exact structure
/// constants: [e_i, e_j] = sum_k c[i][j][k] e_k.
class LieAlgebra {
 public:
  LieAlgebra(std::vector<std::string> basis_names,
             std::vector<std::vector<ExactVector>> structure_constants);

  std::size_t dim() const { return dim_; }
  const std::vector<std::string>& basis_names() const { return names_; }
  std::size_t basis_index(const std::string& name) const;

  /// c[i][j] as a coordinate vector, i.e. [e_i, e_j].
  const ExactVector& basis_bracket(std::size_t i, std::size_t j) const { return c_[i][j]; }

  ExactVector bracket(const ExactVector& x, const ExactVector& y) const;

  /// ad(x) as a dim x dim matrix acting on coordinates.
  ExactMatrix ad(const ExactVector& x) const;

  /// Killing form kappa(x, y) = tr(ad x  ad y).
  GaussianRational killing(const ExactVector& x, const ExactVector& y) const;

  ExactVector basis_vector(std::size_t i) const;
  ExactVector zero_vector() const { return ExactVector(dim_); }

  /// Checks antisymmetry and the Jacobi identity on all basis triples;
  /// throws naming the first violating triple.
  void validate() const;

  /// span of all [x, h] with x in g, h in h.
  Subspace bracket_span(const Subspace& a, const Subspace& b) const;

  bool is_subalgebra(const Subspace& h) const;
  bool is_ideal(const Subspace& h) const;

  /// Normalizer { x : [x, h] in h }.
  Subspace normalizer(const Subspace& h) const;

 private:
  std::size_t dim_;
  std::vector<std::string> names_;
  std::vector<std::vector<ExactVector>> c_;  // c_[i][j] = [e_i, e_j]
};

using LieAlgebraPtr = std::shared_ptr<const LieAlgebra>;

/// Chain C^1 = h, C^{i+1} = [h, C^i] (or derived: D^{i+1} = [D^i, D^i]),
/// listed until stabilization. The last term repeats the stable value,
/// so `terms.back()` is h_infinity (zero space iff h is nilpotent/solvable).
struct SeriesChain {
  enum class Kind { lower_central, derived };
  Kind kind;
  std::vector<Subspace> terms;

  bool reaches_zero() const { return !terms.empty() && terms.back().dim() == 0; }
  std::vector<std::size_t> dims() const;
};

SeriesChain lower_central_series(const LieAlgebra& a, const Subspace& h);
SeriesChain derived_series(const LieAlgebra& a, const Subspace& h);

bool is_nilpotent(const LieAlgebra& a, const Subspace& h);
bool is_solvable(const LieAlgebra& a, const Subspace& h);

/// Nilpotency class of the whole algebra; throws when not nilpotent.
std::size_t nilpotency_class(const LieAlgebra& a);

/// Largest solvable ideal, computed as the Killing-orthogonal of [g, g].
/// The result is verified (solvable and an ideal) before returning.
Subspace solvable_radical(const LieAlgebra& a);

/// n = [g, r]; cross-checked against [g, g] ∩ r, which must agree exactly.
Subspace nilpotent_radical(const LieAlgebra& a);

/// Smallest bracket-closed subspace containing the given span.
Subspace subalgebra_generated(const LieAlgebra& a, const Subspace& seed);

/// Validates the supplied Levi complement s ([s,s] = s, s ∩ r = 0,
/// s + r = g) and returns e = r_infinity + <[s, r]>; verified to be an
/// ideal contained in the nilpotent radical.
Subspace exponential_radical(const LieAlgebra& a, const Subspace& levi);

/// Checks that nprime is an ideal of g with e ⊆ nprime ⊆ n.
void validate_intermediate(const LieAlgebra& a, const Subspace& nprime, const Subspace& levi);

/// Structure constants of the restriction of `a` to a subalgebra span,
/// in the span's echelon basis. Second element maps span coordinates
/// back to ambient coordinates (rows = echelon basis vectors).
std::pair<LieAlgebraPtr, std::vector<ExactVector>> subalgebra_data(const LieAlgebra& a,
                                                                   const Subspace& h);

/// Quotient by an ideal: structure constants on the canonical complement
/// (standard basis vectors at non-pivot coordinates of the ideal) plus the
/// projection matrix dtau (quotient_dim x ambient_dim).
struct QuotientData {
  LieAlgebraPtr algebra;
  ExactMatrix projection;                  // dtau
  std::vector<ExactVector> representatives;  // ambient vectors for quotient basis
};

QuotientData quotient_algebra(const LieAlgebra& a, const Subspace& ideal);

}  // namespace liedist
