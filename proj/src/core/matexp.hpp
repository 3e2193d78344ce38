#pragma once

#include "core/exact_matrix.hpp"

#include <Eigen/Core>

namespace liedist {

bool is_nilpotent_matrix(const ExactMatrix& x);

/// Smallest m with x^m = 0; throws when x is not nilpotent.
std::size_t nilpotency_index(const ExactMatrix& x);

/// Exact finite sum of x^k / k! for power-nilpotent x.
ExactMatrix exp_nilpotent(const ExactMatrix& x);

/// Exact finite Mercator series for unipotent g; inverse of exp_nilpotent.
/// With `strict` the input is checked to satisfy (g - I)^d = 0.
ExactMatrix log_unipotent(const ExactMatrix& g, bool strict = true);

/// Truncated Mercator series on a numeric matrix; valid when g - I is
/// nilpotent up to rounding (log of a numerically unipotent factor).
Eigen::MatrixXcd log_unipotent_numeric(const Eigen::MatrixXcd& g);

/// Scaling-and-squaring exponential (Pade), backward error ~1e-12 relative.
Eigen::MatrixXcd exp_general(const Eigen::MatrixXcd& x);

/// Inverse scaling-and-squaring logarithm, principal branch. Throws
/// LogBranchFailure when the spectrum touches the negative real cut.
Eigen::MatrixXcd log_general(const Eigen::MatrixXcd& g);

/// Spectral norm (largest singular value).
double operator_norm(const Eigen::MatrixXcd& m);

double frobenius_norm(const Eigen::MatrixXcd& m);

}  // namespace liedist
