#include "core/exact_matrix.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace liedist {

ExactMatrix ExactMatrix::identity(std::size_t n) {
  ExactMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = GaussianRational(1);
  return m;
}

ExactMatrix ExactMatrix::from_rows(const std::vector<ExactVector>& rows, std::size_t cols) {
  ExactMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("from_rows: ragged input");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

ExactVector ExactMatrix::row(std::size_t r) const {
  ExactVector v(cols_);
  for (std::size_t c = 0; c < cols_; ++c) v[c] = (*this)(r, c);
  return v;
}

bool ExactMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(),
                     [](const GaussianRational& z) { return z.is_zero(); });
}

ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b) {
  assert(a.rows_ == b.rows_ && a.cols_ == b.cols_);
  ExactMatrix r = a;
  for (std::size_t i = 0; i < r.data_.size(); ++i) r.data_[i] += b.data_[i];
  return r;
}

ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b) {
  assert(a.rows_ == b.rows_ && a.cols_ == b.cols_);
  ExactMatrix r = a;
  for (std::size_t i = 0; i < r.data_.size(); ++i) r.data_[i] -= b.data_[i];
  return r;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
  assert(a.cols_ == b.rows_);
  ExactMatrix r(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const GaussianRational& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        if (b(k, j).is_zero()) continue;
        r(i, j) += aik * b(k, j);
      }
    }
  return r;
}

ExactMatrix ExactMatrix::scaled(const GaussianRational& c) const {
  ExactMatrix r = *this;
  for (auto& z : r.data_) z *= c;
  return r;
}

bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix r(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
  return r;
}

std::vector<std::size_t> ExactMatrix::rref() {
  std::vector<std::size_t> pivots;
  std::size_t lead = 0;
  for (std::size_t r = 0; r < rows_ && lead < cols_; ++lead) {
    std::size_t piv = r;
    while (piv < rows_ && (*this)(piv, lead).is_zero()) ++piv;
    if (piv == rows_) continue;
    if (piv != r)
      for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(piv, c), (*this)(r, c));
    GaussianRational inv = GaussianRational(1) / (*this)(r, lead);
    for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) *= inv;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == r || (*this)(i, lead).is_zero()) continue;
      GaussianRational f = (*this)(i, lead);
      for (std::size_t c = 0; c < cols_; ++c) (*this)(i, c) -= f * (*this)(r, c);
    }
    pivots.push_back(lead);
    ++r;
  }
  return pivots;
}

std::size_t ExactMatrix::max_scalar_bits() const {
  std::size_t m = 0;
  for (const auto& z : data_) m = std::max(m, scalar_bits(z));
  return m;
}

Eigen::MatrixXcd ExactMatrix::to_complex() const {
  Eigen::MatrixXcd m(rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j).to_complex();
  return m;
}

std::size_t rank_of(ExactMatrix m) { return m.rref().size(); }

std::vector<ExactVector> kernel_basis(const ExactMatrix& m) {
  ExactMatrix r = m;
  std::vector<std::size_t> pivots = r.rref();
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t p : pivots) is_pivot[p] = true;
  std::vector<ExactVector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    ExactVector v(m.cols());
    v[free] = GaussianRational(1);
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<ExactVector> solve_exact(const ExactMatrix& m, const ExactVector& rhs) {
  if (rhs.size() != m.rows()) throw std::invalid_argument("solve_exact: size mismatch");
  ExactMatrix aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = rhs[i];
  }
  std::vector<std::size_t> pivots = aug.rref();
  if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;  // inconsistent
  ExactVector x(m.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug(i, m.cols());
  return x;
}

ExactMatrix invert_exact(const ExactMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("invert_exact: not square");
  std::size_t n = m.rows();
  ExactMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = GaussianRational(1);
  }
  if (aug.rref().size() != n) throw std::invalid_argument("invert_exact: singular matrix");
  ExactMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

ExactVector apply_matrix(const ExactMatrix& m, const ExactVector& v) {
  assert(v.size() == m.cols());
  ExactVector r(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero() && !v[j].is_zero()) r[i] += m(i, j) * v[j];
  return r;
}

GaussianRational dot(const ExactVector& a, const ExactVector& b) {
  assert(a.size() == b.size());
  GaussianRational s;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

ExactVector add(const ExactVector& a, const ExactVector& b) {
  assert(a.size() == b.size());
  ExactVector r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

ExactVector sub(const ExactVector& a, const ExactVector& b) {
  assert(a.size() == b.size());
  ExactVector r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

ExactVector scale(const ExactVector& a, const GaussianRational& c) {
  ExactVector r = a;
  for (auto& z : r) z *= c;
  return r;
}

bool is_zero(const ExactVector& v) {
  return std::all_of(v.begin(), v.end(), [](const GaussianRational& z) { return z.is_zero(); });
}

Eigen::VectorXcd to_complex(const ExactVector& v) {
  Eigen::VectorXcd r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r(i) = v[i].to_complex();
  return r;
}

Subspace Subspace::span_of(const std::vector<ExactVector>& vectors, std::size_t ambient_dim) {
  Subspace s(ambient_dim);
  if (vectors.empty()) return s;
  ExactMatrix m = ExactMatrix::from_rows(vectors, ambient_dim);
  std::vector<std::size_t> pivots = m.rref();
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    s.basis_.push_back(m.row(r));
    s.pivots_.push_back(pivots[r]);
  }
  return s;
}

Subspace Subspace::full(std::size_t ambient_dim) {
  std::vector<ExactVector> rows;
  for (std::size_t i = 0; i < ambient_dim; ++i) {
    ExactVector v(ambient_dim);
    v[i] = GaussianRational(1);
    rows.push_back(std::move(v));
  }
  return span_of(rows, ambient_dim);
}

bool Subspace::contains(const ExactVector& v) const {
  return coordinates_of(v).has_value();
}

bool Subspace::contains(const Subspace& other) const {
  for (const auto& v : other.basis_)
    if (!contains(v)) return false;
  return true;
}

std::optional<ExactVector> Subspace::coordinates_of(const ExactVector& v) const {
  if (v.size() != ambient_) throw std::invalid_argument("coordinates_of: dimension mismatch");
  ExactVector residual = v;
  ExactVector coords(basis_.size());
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    GaussianRational c = residual[pivots_[i]];
    if (c.is_zero()) continue;
    coords[i] = c;
    residual = sub(residual, scale(basis_[i], c));
  }
  if (!is_zero(residual)) return std::nullopt;
  return coords;
}

Subspace Subspace::sum(const Subspace& other) const {
  assert(ambient_ == other.ambient_);
  std::vector<ExactVector> rows = basis_;
  rows.insert(rows.end(), other.basis_.begin(), other.basis_.end());
  return span_of(rows, ambient_);
}

Subspace Subspace::intersect(const Subspace& other) const {
  // Zassenhaus: echelonize [A | A; B | 0]; rows with zero left block carry
  // an intersection basis in the right block.
  assert(ambient_ == other.ambient_);
  std::size_t n = ambient_;
  ExactMatrix m(basis_.size() + other.basis_.size(), 2 * n);
  for (std::size_t r = 0; r < basis_.size(); ++r)
    for (std::size_t c = 0; c < n; ++c) {
      m(r, c) = basis_[r][c];
      m(r, n + c) = basis_[r][c];
    }
  for (std::size_t r = 0; r < other.basis_.size(); ++r)
    for (std::size_t c = 0; c < n; ++c) m(basis_.size() + r, c) = other.basis_[r][c];
  m.rref();
  std::vector<ExactVector> rows;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    bool left_zero = true;
    for (std::size_t c = 0; c < n && left_zero; ++c) left_zero = m(r, c).is_zero();
    if (!left_zero) continue;
    ExactVector v(n);
    bool nonzero = false;
    for (std::size_t c = 0; c < n; ++c) {
      v[c] = m(r, n + c);
      nonzero = nonzero || !v[c].is_zero();
    }
    if (nonzero) rows.push_back(std::move(v));
  }
  return span_of(rows, n);
}

Subspace Subspace::complement_in(const Subspace& within) const {
  if (!within.contains(*this))
    throw std::invalid_argument("complement_in: not a subspace of the given space");
  std::vector<ExactVector> rows;
  for (const auto& v : within.basis_) {
    std::vector<ExactVector> test = basis_;
    test.insert(test.end(), rows.begin(), rows.end());
    test.push_back(v);
    if (rank_of(ExactMatrix::from_rows(test, ambient_)) == basis_.size() + rows.size() + 1)
      rows.push_back(v);
  }
  return span_of(rows, ambient_);
}

}  // namespace liedist
