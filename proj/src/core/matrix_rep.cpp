#include "core/matrix_rep.hpp"

#include "core/errors.hpp"

#include <Eigen/QR>

namespace liedist {

MatrixRep::MatrixRep(LieAlgebraPtr algebra, std::vector<ExactMatrix> rho, bool declared_faithful)
    : algebra_(std::move(algebra)), rho_(std::move(rho)), faithful_(declared_faithful) {
  if (rho_.size() != algebra_->dim())
    throw validation_error("rep: one matrix per basis vector required");
  if (rho_.empty()) throw validation_error("rep: empty");
  degree_ = rho_[0].rows();
  for (const auto& m : rho_)
    if (m.rows() != degree_ || m.cols() != degree_)
      throw validation_error("rep: inconsistent matrix shapes");
  flat_complex_.resize(static_cast<Eigen::Index>(degree_ * degree_),
                       static_cast<Eigen::Index>(rho_.size()));
  for (std::size_t j = 0; j < rho_.size(); ++j) {
    Eigen::MatrixXcd m = rho_[j].to_complex();
    flat_complex_.col(static_cast<Eigen::Index>(j)) =
        Eigen::Map<Eigen::VectorXcd>(m.data(), m.size());
  }
}

ExactMatrix MatrixRep::apply(const ExactVector& x) const {
  if (x.size() != rho_.size()) throw validation_error("rep apply: dimension mismatch");
  ExactMatrix out(degree_, degree_);
  for (std::size_t j = 0; j < rho_.size(); ++j) {
    if (x[j].is_zero()) continue;
    out = out + rho_[j].scaled(x[j]);
  }
  return out;
}

Eigen::MatrixXcd MatrixRep::apply_complex(const Eigen::VectorXcd& x) const {
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(degree_, degree_);
  for (std::size_t j = 0; j < rho_.size(); ++j)
    out += x(static_cast<Eigen::Index>(j)) * rho_[j].to_complex();
  return out;
}

void MatrixRep::validate() const {
  std::size_t n = algebra_->dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      ExactMatrix comm = rho_[i] * rho_[j] - rho_[j] * rho_[i];
      ExactMatrix expected = apply(algebra_->basis_bracket(i, j));
      if (!(comm == expected))
        throw validation_error("NotAHomomorphism at basis pair (" + algebra_->basis_names()[i] +
                               "," + algebra_->basis_names()[j] + ")");
    }
  if (faithful_) {
    // kernel of the linear map x -> rho(x)
    ExactMatrix flat(degree_ * degree_, n);
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t r = 0; r < degree_; ++r)
        for (std::size_t c = 0; c < degree_; ++c) flat(r * degree_ + c, j) = rho_[j](r, c);
    if (!kernel_basis(flat).empty()) throw validation_error("NotFaithful");
  }
}

std::optional<ExactVector> MatrixRep::preimage(const ExactMatrix& m) const {
  std::size_t n = algebra_->dim();
  ExactMatrix flat(degree_ * degree_, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t r = 0; r < degree_; ++r)
      for (std::size_t c = 0; c < degree_; ++c) flat(r * degree_ + c, j) = rho_[j](r, c);
  ExactVector rhs(degree_ * degree_);
  for (std::size_t r = 0; r < degree_; ++r)
    for (std::size_t c = 0; c < degree_; ++c) rhs[r * degree_ + c] = m(r, c);
  auto x = solve_exact(flat, rhs);
  if (x && !(apply(*x) == m)) return std::nullopt;
  return x;
}

std::pair<Eigen::VectorXcd, double> MatrixRep::preimage_numeric(const Eigen::MatrixXcd& m) const {
  Eigen::MatrixXcd mm = m;
  Eigen::VectorXcd rhs = Eigen::Map<Eigen::VectorXcd>(mm.data(), mm.size());
  Eigen::VectorXcd x = flat_complex_.colPivHouseholderQr().solve(rhs);
  double residual = (flat_complex_ * x - rhs).norm();
  return {x, residual};
}

GroupElement GroupElement::identity(MatrixRepPtr rep) {
  GroupElement g;
  g.rep_ = std::move(rep);
  g.matrix_ = Eigen::MatrixXcd::Identity(g.rep_->degree(), g.rep_->degree());
  g.exact_ = ExactMatrix::identity(g.rep_->degree());
  return g;
}

GroupElement GroupElement::exp_of(MatrixRepPtr rep, const ExactVector& direction) {
  GroupElement g;
  g.rep_ = std::move(rep);
  ExactMatrix x = g.rep_->apply(direction);
  if (is_nilpotent_matrix(x)) {
    g.exact_ = exp_nilpotent(x);
    g.matrix_ = g.exact_->to_complex();
  } else {
    g.matrix_ = exp_general(x.to_complex());
  }
  if (!is_zero(direction)) g.word_.push_back(direction);
  return g;
}

GroupElement GroupElement::from_matrix(MatrixRepPtr rep, Eigen::MatrixXcd m) {
  GroupElement g;
  g.rep_ = std::move(rep);
  g.matrix_ = std::move(m);
  return g;
}

GroupElement GroupElement::product(const GroupElement& a, const GroupElement& b) {
  GroupElement g;
  g.rep_ = a.rep_;
  g.word_ = a.word_;
  g.word_.insert(g.word_.end(), b.word_.begin(), b.word_.end());
  if (a.exact_ && b.exact_) {
    ExactMatrix prod = *a.exact_ * *b.exact_;
    if (prod.max_scalar_bits() <= kExactBitBudget) {
      g.exact_ = std::move(prod);
      g.matrix_ = g.exact_->to_complex();
      return g;
    }
  }
  g.matrix_ = a.matrix_ * b.matrix_;
  return g;
}

GroupElement GroupElement::inverse() const {
  GroupElement g = identity(rep_);
  for (auto it = word_.rbegin(); it != word_.rend(); ++it)
    g = product(g, exp_of(rep_, scale(*it, GaussianRational(-1))));
  return g;
}

}  // namespace liedist
