#pragma once

#include "core/gaussian_rational.hpp"

#include <Eigen/Core>

#include <optional>
#include <vector>

namespace liedist {

using ExactVector = std::vector<GaussianRational>;

/// Dense matrix over the Gaussian rationals. Row-major.
class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static ExactMatrix identity(std::size_t n);
  static ExactMatrix from_rows(const std::vector<ExactVector>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  GaussianRational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const GaussianRational& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  ExactVector row(std::size_t r) const;
  bool is_zero() const;

  friend ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b);
  friend ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b);
  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
  ExactMatrix scaled(const GaussianRational& c) const;

  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b);

  ExactMatrix transpose() const;

  /// In-place reduction to reduced row echelon form; returns pivot columns.
  std::vector<std::size_t> rref();

  std::size_t max_scalar_bits() const;

  Eigen::MatrixXcd to_complex() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<GaussianRational> data_;
};

std::size_t rank_of(ExactMatrix m);

/// Basis of { x : m x = 0 }, one vector per column-degree of freedom.
std::vector<ExactVector> kernel_basis(const ExactMatrix& m);

/// Solves m x = rhs exactly; nullopt when inconsistent.
std::optional<ExactVector> solve_exact(const ExactMatrix& m, const ExactVector& rhs);

/// Inverse of a square matrix; throws on singular input.
ExactMatrix invert_exact(const ExactMatrix& m);

ExactVector apply_matrix(const ExactMatrix& m, const ExactVector& v);

GaussianRational dot(const ExactVector& a, const ExactVector& b);
ExactVector add(const ExactVector& a, const ExactVector& b);
ExactVector sub(const ExactVector& a, const ExactVector& b);
ExactVector scale(const ExactVector& a, const GaussianRational& c);
bool is_zero(const ExactVector& v);
Eigen::VectorXcd to_complex(const ExactVector& v);

/// A subspace of an n-dimensional coordinate space, stored as the reduced
/// row echelon form of its spanning set. The representation is canonical:
/// equal subspaces compare equal componentwise.
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(std::size_t ambient_dim) : ambient_(ambient_dim) {}

  static Subspace span_of(const std::vector<ExactVector>& vectors, std::size_t ambient_dim);
  static Subspace full(std::size_t ambient_dim);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<ExactVector>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  bool contains(const ExactVector& v) const;
  bool contains(const Subspace& other) const;

  /// Coordinates of v in the echelon basis; nullopt when v is outside.
  std::optional<ExactVector> coordinates_of(const ExactVector& v) const;

  Subspace sum(const Subspace& other) const;
  Subspace intersect(const Subspace& other) const;

  /// Completes this subspace to `within` by standard basis vectors at the
  /// free (non-pivot) coordinates of `within`'s echelon basis. Deterministic.
  Subspace complement_in(const Subspace& within) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  std::size_t ambient_ = 0;
  std::vector<ExactVector> basis_;   // rows in RREF
  std::vector<std::size_t> pivots_;  // pivot column per basis row
};

}  // namespace liedist
