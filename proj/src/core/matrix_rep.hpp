#pragma once

#include "core/lie_algebra.hpp"
#include "core/matexp.hpp"

#include <memory>
#include <optional>

namespace liedist {

/// Linear map g -> d x d matrices, one exact matrix per basis vector.
class MatrixRep {
 public:
  MatrixRep(LieAlgebraPtr algebra, std::vector<ExactMatrix> rho, bool declared_faithful);

  std::size_t degree() const { return degree_; }
  const LieAlgebraPtr& algebra() const { return algebra_; }
  bool faithful() const { return faithful_; }

  ExactMatrix apply(const ExactVector& x) const;
  Eigen::MatrixXcd apply_complex(const Eigen::VectorXcd& x) const;

  /// Exact commutator check on all basis pairs; faithfulness (trivial
  /// kernel) checked when declared. Throws NotAHomomorphism / NotFaithful.
  void validate() const;

  /// Solves rho(x) = m for x; nullopt when m is outside the image.
  std::optional<ExactVector> preimage(const ExactMatrix& m) const;

  /// Least-squares preimage for numeric matrices; second value is the
  /// residual Frobenius norm.
  std::pair<Eigen::VectorXcd, double> preimage_numeric(const Eigen::MatrixXcd& m) const;

 private:
  LieAlgebraPtr algebra_;
  std::vector<ExactMatrix> rho_;
  std::size_t degree_;
  bool faithful_;
  Eigen::MatrixXcd flat_complex_;  // d^2 x n, column j = vec(rho_j)
};

using MatrixRepPtr = std::shared_ptr<const MatrixRep>;

/// Element of the realized group, carried as a product of one-parameter
/// factors exp(rho(v)). The factor list (the construction word) is kept so
/// that quotient projections can be evaluated letter-by-letter; the exact
/// matrix is kept as long as every factor is unipotent and entries stay
/// within the size budget, doubles take over beyond that.
class GroupElement {
 public:
  static GroupElement identity(MatrixRepPtr rep);
  static GroupElement exp_of(MatrixRepPtr rep, const ExactVector& direction);
  static GroupElement product(const GroupElement& a, const GroupElement& b);

  /// Wraps a numeric matrix with no word or exact form.
  static GroupElement from_matrix(MatrixRepPtr rep, Eigen::MatrixXcd m);

  GroupElement inverse() const;

  const Eigen::MatrixXcd& matrix() const { return matrix_; }
  const std::optional<ExactMatrix>& exact() const { return exact_; }
  const std::vector<ExactVector>& word() const { return word_; }
  const MatrixRepPtr& rep() const { return rep_; }

  bool is_exact() const { return exact_.has_value(); }

 private:
  GroupElement() = default;

  MatrixRepPtr rep_;
  Eigen::MatrixXcd matrix_;
  std::optional<ExactMatrix> exact_;
  std::vector<ExactVector> word_;
};

/// Size budget (total bits of one entry) past which exact matrices are
/// dropped in favour of doubles.
inline constexpr std::size_t kExactBitBudget = 1 << 14;

}  // namespace liedist
