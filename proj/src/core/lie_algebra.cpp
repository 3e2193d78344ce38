#include "core/lie_algebra.hpp"

#include "core/errors.hpp"

#include <sstream>

namespace liedist {

LieAlgebra::LieAlgebra(std::vector<std::string> basis_names,
                       std::vector<std::vector<ExactVector>> structure_constants)
    : dim_(basis_names.size()), names_(std::move(basis_names)), c_(std::move(structure_constants)) {
  if (c_.size() != dim_) throw validation_error("structure constants: wrong outer size");
  for (const auto& row : c_) {
    if (row.size() != dim_) throw validation_error("structure constants: wrong inner size");
    for (const auto& v : row)
      if (v.size() != dim_) throw validation_error("structure constants: wrong vector size");
  }
}

std::size_t LieAlgebra::basis_index(const std::string& name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  throw config_error("unknown basis vector '" + name + "'");
}

ExactVector LieAlgebra::bracket(const ExactVector& x, const ExactVector& y) const {
  if (x.size() != dim_ || y.size() != dim_)
    throw validation_error("bracket: dimension mismatch");
  ExactVector r(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (y[j].is_zero()) continue;
      GaussianRational f = x[i] * y[j];
      const ExactVector& cij = c_[i][j];
      for (std::size_t k = 0; k < dim_; ++k) {
        if (cij[k].is_zero()) continue;
        r[k] += f * cij[k];
      }
    }
  }
  return r;
}

ExactMatrix LieAlgebra::ad(const ExactVector& x) const {
  ExactMatrix m(dim_, dim_);
  for (std::size_t j = 0; j < dim_; ++j) {
    ExactVector col = bracket(x, basis_vector(j));
    for (std::size_t i = 0; i < dim_; ++i) m(i, j) = col[i];
  }
  return m;
}

GaussianRational LieAlgebra::killing(const ExactVector& x, const ExactVector& y) const {
  ExactMatrix prod = ad(x) * ad(y);
  GaussianRational tr;
  for (std::size_t i = 0; i < dim_; ++i) tr += prod(i, i);
  return tr;
}

ExactVector LieAlgebra::basis_vector(std::size_t i) const {
  ExactVector v(dim_);
  v[i] = GaussianRational(1);
  return v;
}

void LieAlgebra::validate() const {
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j)
      for (std::size_t k = 0; k < dim_; ++k)
        if (c_[i][j][k] != -c_[j][i][k]) {
          std::ostringstream os;
          os << "AntisymmetryViolation at (" << names_[i] << "," << names_[j] << ") component "
             << names_[k];
          throw validation_error(os.str());
        }
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = i + 1; j < dim_; ++j)
      for (std::size_t k = j + 1; k < dim_; ++k) {
        ExactVector jac = bracket(bracket(basis_vector(i), basis_vector(j)), basis_vector(k));
        jac = add(jac, bracket(bracket(basis_vector(j), basis_vector(k)), basis_vector(i)));
        jac = add(jac, bracket(bracket(basis_vector(k), basis_vector(i)), basis_vector(j)));
        if (!is_zero(jac)) {
          std::ostringstream os;
          os << "JacobiViolation at (" << names_[i] << "," << names_[j] << "," << names_[k] << ")";
          throw validation_error(os.str());
        }
      }
}

Subspace LieAlgebra::bracket_span(const Subspace& a, const Subspace& b) const {
  std::vector<ExactVector> rows;
  for (const auto& x : a.basis())
    for (const auto& y : b.basis()) rows.push_back(bracket(x, y));
  return Subspace::span_of(rows, dim_);
}

bool LieAlgebra::is_subalgebra(const Subspace& h) const {
  return h.contains(bracket_span(h, h));
}

bool LieAlgebra::is_ideal(const Subspace& h) const {
  return h.contains(bracket_span(Subspace::full(dim_), h));
}

Subspace LieAlgebra::normalizer(const Subspace& h) const {
  // v in h  <=>  f . v = 0 for every f annihilating h, so the normalizer
  // condition [x, h_b] in h is linear in x.
  ExactMatrix hb(h.dim(), dim_);
  for (std::size_t r = 0; r < h.dim(); ++r)
    for (std::size_t c = 0; c < dim_; ++c) hb(r, c) = h.basis()[r][c];
  std::vector<ExactVector> ann = kernel_basis(hb);
  std::vector<ExactVector> rows;
  for (const auto& f : ann) {
    for (const auto& hv : h.basis()) {
      // condition: f . [x, hv] = 0 for all x -> linear form in x
      ExactVector row(dim_);
      for (std::size_t i = 0; i < dim_; ++i) row[i] = dot(f, bracket(basis_vector(i), hv));
      rows.push_back(std::move(row));
    }
  }
  if (rows.empty()) return Subspace::full(dim_);
  ExactMatrix m = ExactMatrix::from_rows(rows, dim_);
  return Subspace::span_of(kernel_basis(m), dim_);
}

std::vector<std::size_t> SeriesChain::dims() const {
  std::vector<std::size_t> d;
  d.reserve(terms.size());
  for (const auto& t : terms) d.push_back(t.dim());
  return d;
}

namespace {

SeriesChain series(const LieAlgebra& a, const Subspace& h, SeriesChain::Kind kind) {
  if (!a.is_subalgebra(h)) throw validation_error("NotASubalgebra");
  SeriesChain chain{kind, {h}};
  while (true) {
    const Subspace& prev = chain.terms.back();
    Subspace next = (kind == SeriesChain::Kind::lower_central) ? a.bracket_span(h, prev)
                                                               : a.bracket_span(prev, prev);
    bool stable = next == prev;
    chain.terms.push_back(std::move(next));
    if (stable || chain.terms.back().dim() == 0) break;
  }
  return chain;
}

}  // namespace

SeriesChain lower_central_series(const LieAlgebra& a, const Subspace& h) {
  return series(a, h, SeriesChain::Kind::lower_central);
}

SeriesChain derived_series(const LieAlgebra& a, const Subspace& h) {
  return series(a, h, SeriesChain::Kind::derived);
}

bool is_nilpotent(const LieAlgebra& a, const Subspace& h) {
  return lower_central_series(a, h).reaches_zero();
}

bool is_solvable(const LieAlgebra& a, const Subspace& h) {
  return derived_series(a, h).reaches_zero();
}

std::size_t nilpotency_class(const LieAlgebra& a) {
  SeriesChain chain = lower_central_series(a, Subspace::full(a.dim()));
  if (!chain.reaches_zero()) throw validation_error("NotNilpotent");
  return chain.terms.size() - 1;
}

Subspace solvable_radical(const LieAlgebra& a) {
  Subspace derived = a.bracket_span(Subspace::full(a.dim()), Subspace::full(a.dim()));
  std::vector<ExactVector> rows;
  for (const auto& g : derived.basis()) {
    ExactVector row(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) row[i] = a.killing(a.basis_vector(i), g);
    rows.push_back(std::move(row));
  }
  Subspace r = rows.empty() ? Subspace::full(a.dim())
                            : Subspace::span_of(kernel_basis(ExactMatrix::from_rows(rows, a.dim())),
                                                a.dim());
  if (!a.is_ideal(r) || !is_solvable(a, r))
    throw internal_error("InternalInconsistency: computed radical fails verification");
  return r;
}

Subspace nilpotent_radical(const LieAlgebra& a) {
  Subspace r = solvable_radical(a);
  Subspace n = a.bracket_span(Subspace::full(a.dim()), r);
  Subspace full = Subspace::full(a.dim());
  Subspace check = a.bracket_span(full, full).intersect(r);
  if (!(n == check))
    throw internal_error("InternalInconsistency: [g,r] != [g,g] ∩ r");
  return n;
}

Subspace subalgebra_generated(const LieAlgebra& a, const Subspace& seed) {
  Subspace current = seed;
  while (true) {
    Subspace next = current.sum(a.bracket_span(current, current));
    if (next == current) return current;
    current = next;
  }
}

Subspace exponential_radical(const LieAlgebra& a, const Subspace& levi) {
  Subspace r = solvable_radical(a);
  bool ok = a.bracket_span(levi, levi) == levi && levi.intersect(r).dim() == 0 &&
            levi.sum(r).dim() == a.dim();
  if (!ok) throw validation_error("InvalidLeviComplement");
  Subspace r_inf = lower_central_series(a, r).terms.back();
  Subspace sr = subalgebra_generated(a, a.bracket_span(levi, r));
  Subspace e = r_inf.sum(sr);
  if (!a.is_ideal(e) || !nilpotent_radical(a).contains(e))
    throw validation_error("EViolatesContainment: e is not an ideal inside n");
  return e;
}

void validate_intermediate(const LieAlgebra& a, const Subspace& nprime, const Subspace& levi) {
  if (!a.is_ideal(nprime)) throw validation_error("NotAnIdeal: n' is not an ideal of g");
  Subspace n = nilpotent_radical(a);
  Subspace e = exponential_radical(a, levi);
  if (!nprime.contains(e))
    throw validation_error("NotBetweenRadicals: e is not contained in n'");
  if (!n.contains(nprime))
    throw validation_error("NotBetweenRadicals: n' is not contained in n");
}

std::pair<LieAlgebraPtr, std::vector<ExactVector>> subalgebra_data(const LieAlgebra& a,
                                                                   const Subspace& h) {
  if (!a.is_subalgebra(h)) throw validation_error("NotASubalgebra");
  std::size_t m = h.dim();
  std::vector<std::vector<ExactVector>> c(m, std::vector<ExactVector>(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      ExactVector br = a.bracket(h.basis()[i], h.basis()[j]);
      auto coords = h.coordinates_of(br);
      if (!coords) throw internal_error("subalgebra_data: bracket left the span");
      c[i][j] = *coords;
    }
  std::vector<std::string> names;
  for (std::size_t i = 0; i < m; ++i) names.push_back("u" + std::to_string(i + 1));
  return {std::make_shared<LieAlgebra>(std::move(names), std::move(c)), h.basis()};
}

QuotientData quotient_algebra(const LieAlgebra& a, const Subspace& ideal) {
  if (!a.is_ideal(ideal)) throw validation_error("NotAnIdeal");
  std::size_t n = a.dim();
  std::vector<bool> is_pivot(n, false);
  for (std::size_t p : ideal.pivots()) is_pivot[p] = true;

  std::vector<std::size_t> free_coords;
  for (std::size_t i = 0; i < n; ++i)
    if (!is_pivot[i]) free_coords.push_back(i);
  std::size_t q = free_coords.size();

  // dtau: reduce modulo the ideal, then read off the free coordinates.
  ExactMatrix proj(q, n);
  for (std::size_t col = 0; col < n; ++col) {
    ExactVector v = a.zero_vector();
    v[col] = GaussianRational(1);
    ExactVector red = v;
    for (std::size_t r = 0; r < ideal.dim(); ++r) {
      GaussianRational c = red[ideal.pivots()[r]];
      if (!c.is_zero()) red = sub(red, scale(ideal.basis()[r], c));
    }
    for (std::size_t k = 0; k < q; ++k) proj(k, col) = red[free_coords[k]];
  }

  std::vector<ExactVector> reps;
  for (std::size_t k = 0; k < q; ++k) {
    ExactVector v = a.zero_vector();
    v[free_coords[k]] = GaussianRational(1);
    reps.push_back(std::move(v));
  }

  auto project = [&](const ExactVector& v) {
    ExactVector out(q);
    for (std::size_t k = 0; k < q; ++k) {
      GaussianRational s;
      for (std::size_t col = 0; col < n; ++col)
        if (!v[col].is_zero()) s += proj(k, col) * v[col];
      out[k] = s;
    }
    return out;
  };

  std::vector<std::vector<ExactVector>> c(q, std::vector<ExactVector>(q));
  for (std::size_t i = 0; i < q; ++i)
    for (std::size_t j = 0; j < q; ++j) c[i][j] = project(a.bracket(reps[i], reps[j]));

  std::vector<std::string> names;
  for (std::size_t k = 0; k < q; ++k) names.push_back(a.basis_names()[free_coords[k]] + "~");
  QuotientData out;
  out.algebra = std::make_shared<LieAlgebra>(std::move(names), std::move(c));
  out.projection = std::move(proj);
  out.representatives = std::move(reps);
  return out;
}

}  // namespace liedist
