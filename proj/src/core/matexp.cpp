#include "core/matexp.hpp"

#include "core/errors.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <unsupported/Eigen/MatrixFunctions>

namespace liedist {

bool is_nilpotent_matrix(const ExactMatrix& x) {
  ExactMatrix p = x;
  for (std::size_t k = 1; k < x.rows(); ++k) {
    if (p.is_zero()) return true;
    p = p * x;
  }
  return p.is_zero();
}

std::size_t nilpotency_index(const ExactMatrix& x) {
  ExactMatrix p = ExactMatrix::identity(x.rows());
  for (std::size_t m = 0; m <= x.rows(); ++m) {
    if (p.is_zero()) return m;
    p = p * x;
  }
  throw validation_error("NotNilpotentMatrix");
}

ExactMatrix exp_nilpotent(const ExactMatrix& x) {
  if (x.rows() != x.cols()) throw validation_error("exp_nilpotent: not square");
  ExactMatrix sum = ExactMatrix::identity(x.rows());
  ExactMatrix term = ExactMatrix::identity(x.rows());
  GaussianRational factorial(1);
  for (std::size_t k = 1; k <= x.rows(); ++k) {
    term = term * x;
    if (term.is_zero()) return sum;
    factorial *= GaussianRational(static_cast<long long>(k));
    sum = sum + term.scaled(GaussianRational(1) / factorial);
  }
  throw validation_error("NotNilpotentMatrix");
}

ExactMatrix log_unipotent(const ExactMatrix& g, bool strict) {
  if (g.rows() != g.cols()) throw validation_error("log_unipotent: not square");
  ExactMatrix u = g - ExactMatrix::identity(g.rows());
  if (strict && !is_nilpotent_matrix(u)) throw validation_error("NotUnipotent");
  ExactMatrix sum(g.rows(), g.rows());
  ExactMatrix term = ExactMatrix::identity(g.rows());
  for (std::size_t k = 1; k <= g.rows(); ++k) {
    term = term * u;
    if (term.is_zero()) break;
    GaussianRational coeff(Rational((k % 2 == 1) ? 1 : -1, static_cast<long long>(k)));
    sum = sum + term.scaled(coeff);
  }
  return sum;
}

Eigen::MatrixXcd log_unipotent_numeric(const Eigen::MatrixXcd& g) {
  Eigen::Index d = g.rows();
  Eigen::MatrixXcd u = g - Eigen::MatrixXcd::Identity(d, d);
  Eigen::MatrixXcd sum = Eigen::MatrixXcd::Zero(d, d);
  Eigen::MatrixXcd term = Eigen::MatrixXcd::Identity(d, d);
  for (Eigen::Index k = 1; k <= d; ++k) {
    term = term * u;
    double sign = (k % 2 == 1) ? 1.0 : -1.0;
    sum += (sign / static_cast<double>(k)) * term;
  }
  return sum;
}

Eigen::MatrixXcd exp_general(const Eigen::MatrixXcd& x) { return x.exp(); }

Eigen::MatrixXcd log_general(const Eigen::MatrixXcd& g) {
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(g, /*computeEigenvectors=*/false);
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
    std::complex<double> ev = es.eigenvalues()(i);
    if (ev.real() <= 0.0 && std::abs(ev.imag()) < 1e-14 * std::max(1.0, std::abs(ev.real())))
      throw validation_error("LogBranchFailure: eigenvalue on the negative real cut");
  }
  return g.log();
}

double operator_norm(const Eigen::MatrixXcd& m) {
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
  return svd.singularValues()(0);
}

double frobenius_norm(const Eigen::MatrixXcd& m) { return m.norm(); }

}  // namespace liedist
