#include "core/tridecomp.hpp"

#include "core/errors.hpp"

#include <Eigen/QR>

namespace liedist {

namespace {

constexpr double kMembershipTol = 1e-9;

ExactMatrix columns_from(const std::vector<ExactVector>& cols, std::size_t rows) {
  ExactMatrix m(rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
  return m;
}

}  // namespace

DecompositionContext::DecompositionContext(const Fixture& fixture, const Subspace& nprime,
                                           std::uint64_t cartan_seed)
    : fixture_(fixture), nprime_(nprime) {
  const LieAlgebra& g = *fixture_.algebra;
  std::size_t n = g.dim();
  const Subspace& b = fixture_.b_ideal;
  const Subspace& l = fixture_.l_subalg;

  validate_intermediate(g, nprime_, fixture_.levi);
  if (!g.is_ideal(b) || !is_solvable(g, b))
    throw validation_error("semidirect split: b is not a solvable ideal");
  if (!g.is_subalgebra(l)) throw validation_error("semidirect split: l is not a subalgebra");
  if (b.dim() + l.dim() != n || b.sum(l).dim() != n)
    throw validation_error("semidirect split: b + l is not a direct decomposition");
  if (!b.contains(nprime_)) throw validation_error("n' is not contained in b");
  if (!nprime_.contains(g.bracket_span(l, b)))
    throw validation_error("semidirect split: [l, b] is not contained in n'");

  b_frame_ = b.basis();
  l_frame_ = l.basis();
  b_dim_ = b.dim();
  std::vector<ExactVector> split_cols = b_frame_;
  split_cols.insert(split_cols.end(), l_frame_.begin(), l_frame_.end());
  split_inverse_ = invert_exact(columns_from(split_cols, n));

  auto [b_alg, b_basis] = subalgebra_data(g, b);
  std::vector<ExactVector> np_in_b;
  for (const auto& v : nprime_.basis()) {
    auto coords = b.coordinates_of(v);
    if (!coords) throw internal_error("n' basis escaped b");
    np_in_b.push_back(*coords);
  }
  quotient_ = quotient_algebra(*b_alg, Subspace::span_of(np_in_b, b_dim_));
  quotient_class_ = nilpotency_class(*quotient_.algebra);  // throws when b/n' not nilpotent
  quotient_weights_ = f_basis_weights(*quotient_.algebra);

  Subspace h_in_b = cartan_subalgebra(*b_alg, cartan_seed);
  std::vector<ExactVector> h_ambient;
  for (const auto& hv : h_in_b.basis()) {
    ExactVector lifted(n);
    for (std::size_t j = 0; j < b_dim_; ++j)
      if (!hv[j].is_zero()) lifted = add(lifted, scale(b_frame_[j], hv[j]));
    h_ambient.push_back(std::move(lifted));
  }
  cartan_ = Subspace::span_of(h_ambient, n);
  if (!(nprime_.sum(cartan_) == b))
    throw internal_error("n' + h != b; Cartan construction is inconsistent");

  v_ = complement_v(g, cartan_, nprime_);

  // dq = dtau ∘ (projection onto b along l)
  std::size_t q = quotient_.algebra->dim();
  dq_ = ExactMatrix(q, n);
  for (std::size_t col = 0; col < n; ++col) {
    ExactVector e(n);
    e[col] = GaussianRational(1);
    ExactVector split = apply_matrix(split_inverse_, e);
    ExactVector b_part(split.begin(), split.begin() + static_cast<long>(b_dim_));
    ExactVector img = apply_matrix(quotient_.projection, b_part);
    for (std::size_t r = 0; r < q; ++r) dq_(r, col) = img[r];
  }

  if (v_.dim() != q)
    throw internal_error("complement dimension does not match the quotient");
  ExactMatrix mv(q, q);
  for (std::size_t j = 0; j < q; ++j) {
    ExactVector img = apply_matrix(dq_, v_.basis()[j]);
    for (std::size_t r = 0; r < q; ++r) mv(r, j) = img[r];
  }
  v_to_quotient_inverse_ = invert_exact(mv);  // throws unless dtau|v is an isomorphism
}

ExactVector DecompositionContext::project_quotient(const ExactVector& x) const {
  return apply_matrix(dq_, x);
}

ExactVector DecompositionContext::project_l(const ExactVector& x) const {
  ExactVector split = apply_matrix(split_inverse_, x);
  ExactVector out(x.size());
  for (std::size_t j = 0; j < l_frame_.size(); ++j) {
    const GaussianRational& c = split[b_dim_ + j];
    if (!c.is_zero()) out = add(out, scale(l_frame_[j], c));
  }
  return out;
}

ExactVector DecompositionContext::quotient_log(const GroupElement& g) const {
  ExactVector z(quotient_.algebra->dim());
  for (const auto& letter : g.word())
    z = bch(*quotient_.algebra, z, project_quotient(letter), quotient_class_);
  return z;
}

ExactVector DecompositionContext::quotient_coords(const ExactVector& ambient) const {
  return quotient_weights_.coordinates_of(project_quotient(ambient));
}

ExactVector DecompositionContext::ad_exp_apply(const ExactVector& x, const ExactVector& v) const {
  const LieAlgebra& g = *fixture_.algebra;
  // e^{ad x} v: exact when the series terminates, numeric otherwise
  ExactVector sum = v;
  ExactVector term = v;
  for (std::size_t j = 1; j <= g.dim() + 2; ++j) {
    term = scale(g.bracket(x, term), GaussianRational(Rational(1, static_cast<long long>(j))));
    if (is_zero(term)) return sum;
    sum = add(sum, term);
  }
  Eigen::MatrixXcd ad = g.ad(x).to_complex();
  Eigen::VectorXcd image = exp_general(ad) * to_complex(v);
  ExactVector out(g.dim());
  for (std::size_t i = 0; i < g.dim(); ++i)
    out[i] = gaussian_from_complex(image(static_cast<Eigen::Index>(i)));
  return out;
}

TriDecomposition DecompositionContext::decompose(const GroupElement& g) const {
  const MatrixRepPtr& rep = fixture_.rep;
  if (!rep) throw config_error("ProjectionUnavailable: no matrix realization");

  // Normal form b * l accumulated letter by letter: B-letters move left
  // through the L-prefix by the adjoint action, so the two huge reductive
  // factors never meet in a matrix product.
  GroupElement l = GroupElement::identity(rep);
  GroupElement b_acc = GroupElement::identity(rep);
  std::vector<ExactVector> l_prefix;
  auto through_prefix = [&](ExactVector v) {
    for (auto it = l_prefix.rbegin(); it != l_prefix.rend(); ++it) v = ad_exp_apply(*it, v);
    return v;
  };
  for (const auto& letter : g.word()) {
    ExactVector lw = project_l(letter);
    ExactVector bw = sub(letter, lw);
    if (is_zero(lw)) {
      b_acc = GroupElement::product(b_acc, GroupElement::exp_of(rep, through_prefix(bw)));
    } else if (is_zero(bw)) {
      l_prefix.push_back(lw);
      l = GroupElement::product(l, GroupElement::exp_of(rep, lw));
    } else {
      // mixed letter: split exp(w) = u exp(w_l) with u in B, then pass u
      // through the prefix as a matrix
      Eigen::MatrixXcd u = GroupElement::exp_of(rep, letter).matrix() *
                           GroupElement::exp_of(rep, scale(lw, GaussianRational(-1))).matrix();
      Eigen::MatrixXcd conj =
          l_prefix.empty() ? u : (l.matrix() * u * l.inverse().matrix()).eval();
      b_acc = GroupElement::from_matrix(rep, b_acc.matrix() * conj);
      l_prefix.push_back(lw);
      l = GroupElement::product(l, GroupElement::exp_of(rep, lw));
    }
  }

  ExactVector y = quotient_log(g);
  ExactVector c = apply_matrix(v_to_quotient_inverse_, y);
  ExactVector xi(fixture_.algebra->dim());
  for (std::size_t j = 0; j < v_.dim(); ++j)
    if (!c[j].is_zero()) xi = add(xi, scale(v_.basis()[j], c[j]));

  GroupElement residual = GroupElement::product(
      b_acc, GroupElement::exp_of(rep, scale(xi, GaussianRational(-1))));

  ExactVector eta;
  if (residual.is_exact()) {
    ExactMatrix x;
    try {
      x = log_unipotent(*residual.exact(), /*strict=*/true);
    } catch (const Error&) {
      throw validation_error("EtaNotInNPrime: residual factor is not unipotent");
    }
    auto pre = rep->preimage(x);
    if (!pre) throw validation_error("EtaNotInNPrime: residual log outside the algebra image");
    if (!nprime_.contains(*pre))
      throw validation_error("EtaNotInNPrime: exact membership failed");
    eta = *pre;
  } else {
    Eigen::MatrixXcd x = log_unipotent_numeric(residual.matrix());
    auto [coords, res] = rep->preimage_numeric(x);
    if (res > kMembershipTol * (1.0 + x.norm()))
      throw validation_error("EtaNotInNPrime: residual log outside the algebra image");
    // least-squares membership in n', then exact reconstruction from the
    // fitted coefficients
    Eigen::MatrixXcd nbasis(fixture_.algebra->dim(), nprime_.dim());
    for (std::size_t j = 0; j < nprime_.dim(); ++j)
      nbasis.col(static_cast<Eigen::Index>(j)) = to_complex(nprime_.basis()[j]);
    Eigen::VectorXcd fitted =
        nprime_.dim() == 0 ? Eigen::VectorXcd(0) : nbasis.colPivHouseholderQr().solve(coords).eval();
    double memb_res = (nprime_.dim() == 0 ? coords.norm() : (nbasis * fitted - coords).norm());
    if (memb_res > kMembershipTol * (1.0 + coords.norm()))
      throw validation_error("EtaNotInNPrime: membership tolerance exceeded");
    eta = ExactVector(fixture_.algebra->dim());
    for (std::size_t j = 0; j < nprime_.dim(); ++j)
      eta = add(eta, scale(nprime_.basis()[j],
                           gaussian_from_complex(fitted(static_cast<Eigen::Index>(j)))));
  }
  return {std::move(eta), std::move(xi), std::move(l)};
}

GroupElement DecompositionContext::compose(const TriDecomposition& t) const {
  const MatrixRepPtr& rep = fixture_.rep;
  GroupElement out = GroupElement::exp_of(rep, t.eta);
  out = GroupElement::product(out, GroupElement::exp_of(rep, t.xi));
  return GroupElement::product(out, t.l);
}

}  // namespace liedist
