#include "core/length.hpp"

#include "core/errors.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <limits>

namespace liedist {

double word_length_nilpotent(const Eigen::VectorXcd& coords,
                             const std::vector<std::size_t>& weights) {
  if (static_cast<std::size_t>(coords.size()) != weights.size())
    throw validation_error("word_length_nilpotent: coordinate/weight mismatch");
  double m = 0.0;
  for (std::size_t k = 0; k < weights.size(); ++k) {
    double t = std::abs(coords(static_cast<Eigen::Index>(k)));
    m = std::max(m, std::pow(t, 1.0 / static_cast<double>(weights[k])));
  }
  return m;
}

nlohmann::json Provenance::to_json() const {
  nlohmann::json j;
  j["op"] = op;
  if (!params.empty()) j["params"] = params;
  if (!children.empty()) {
    nlohmann::json c = nlohmann::json::array();
    for (const auto& ch : children) c.push_back(ch.to_json());
    j["children"] = c;
  }
  return j;
}

double VettedFunction::operator()(double x) const {
  switch (kind) {
    case Kind::log1p:
      return std::log1p(std::max(x, 0.0));
    case Kind::power:
      return std::pow(std::max(x, 0.0), param);
    case Kind::cap:
      return std::min(std::max(x, 0.0), param);
  }
  return 0.0;
}

VettedFunction VettedFunction::power(double alpha) {
  if (!(alpha > 0.0 && alpha <= 1.0))
    throw validation_error("UnvettedFunction: power exponent outside (0, 1]");
  return {Kind::power, alpha};
}

VettedFunction VettedFunction::cap(double c) {
  if (!(c > 0.0)) throw validation_error("UnvettedFunction: cap must be positive");
  return {Kind::cap, c};
}

nlohmann::json VettedFunction::to_json() const {
  switch (kind) {
    case Kind::log1p:
      return {{"f", "log1p"}};
    case Kind::power:
      return {{"f", "power"}, {"alpha", param}};
    case Kind::cap:
      return {{"f", "cap"}, {"c", param}};
  }
  return {};
}

double euclidean_norm(const ExactVector& v) {
  double s = 0.0;
  for (const auto& z : v) s += static_cast<double>(z.norm_sq());
  return std::sqrt(s);
}

ExactVector global_log_coordinates(const GroupElement& g) {
  if (!g.is_exact())
    throw validation_error("global_log_coordinates: element has no exact matrix");
  ExactMatrix x = log_unipotent(*g.exact(), /*strict=*/true);
  auto pre = g.rep()->preimage(x);
  if (!pre) throw internal_error("global_log_coordinates: log escaped the algebra image");
  return *pre;
}

LengthFunction LengthFunction::zero() {
  LengthFunction f;
  f.eval_ = [](const GroupElement&) { return 0.0; };
  f.provenance_ = {"zero", {}, {}};
  f.symmetric_ = true;
  f.exactly_subadditive_ = true;
  return f;
}

namespace {

/// log ||pi(g)||, falling back to a spectral shift when the plain matrix
/// overflows and g is a one-parameter element: exp(A) = e^a exp(A - a I)
/// with a the largest real eigenvalue part, so the log-norm stays finite
/// far past the range of the direct exponential.
double log_norm(const GroupElement& g, bool invert) {
  Eigen::MatrixXcd m = invert ? g.inverse().matrix() : g.matrix();
  double norm = m.allFinite() ? operator_norm(m) : std::numeric_limits<double>::infinity();
  if (std::isfinite(norm) && norm > 0.0) return std::log(norm);
  if (g.word().size() != 1)
    throw validation_error("length_pi: matrix overflow on a multi-letter element");
  ExactVector dir = invert ? scale(g.word().front(), GaussianRational(-1)) : g.word().front();
  Eigen::MatrixXcd a = g.rep()->apply(dir).to_complex();
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(a, false);
  double shift = es.eigenvalues().real().maxCoeff();
  Eigen::MatrixXcd shifted =
      a - shift * Eigen::MatrixXcd::Identity(a.rows(), a.cols());
  return shift + std::log(operator_norm(exp_general(shifted)));
}

}  // namespace

LengthFunction LengthFunction::custom(std::function<double(const GroupElement&)> eval,
                                      const std::string& label, bool symmetric,
                                      bool exactly_subadditive) {
  LengthFunction f;
  f.eval_ = std::move(eval);
  f.provenance_ = {"custom", {{"label", label}}, {}};
  f.symmetric_ = symmetric;
  f.exactly_subadditive_ = exactly_subadditive;
  return f;
}

LengthFunction LengthFunction::pi(MatrixRepPtr rep) {
  LengthFunction f;
  f.eval_ = [](const GroupElement& g) { return log_norm(g, false); };
  f.provenance_ = {"length_pi", {}, {}};
  f.exactly_subadditive_ = true;  // submultiplicativity of the spectral norm
  (void)rep;
  return f;
}

LengthFunction LengthFunction::pi_sym(MatrixRepPtr rep) {
  LengthFunction f;
  f.eval_ = [](const GroupElement& g) { return log_norm(g, false) + log_norm(g, true); };
  f.provenance_ = {"length_pi_sym", {}, {}};
  f.symmetric_ = true;
  f.exactly_subadditive_ = true;
  (void)rep;
  return f;
}

LengthFunction LengthFunction::compose_f(const LengthFunction& ell, const VettedFunction& vf) {
  LengthFunction f;
  auto inner = ell.eval_;
  f.eval_ = [inner, vf](const GroupElement& g) { return vf(inner(g)); };
  f.provenance_ = {"compose_f", vf.to_json(), {ell.provenance_}};
  f.symmetric_ = ell.symmetric_;
  f.exactly_subadditive_ = ell.exactly_subadditive_;
  return f;
}

LengthFunction LengthFunction::sum(const LengthFunction& a, const LengthFunction& b) {
  LengthFunction f;
  auto ea = a.eval_, eb = b.eval_;
  f.eval_ = [ea, eb](const GroupElement& g) { return ea(g) + eb(g); };
  f.provenance_ = {"sum", {}, {a.provenance_, b.provenance_}};
  f.symmetric_ = a.symmetric_ && b.symmetric_;
  f.exactly_subadditive_ = a.exactly_subadditive_ && b.exactly_subadditive_;
  return f;
}

LengthFunction LengthFunction::max(const LengthFunction& a, const LengthFunction& b) {
  LengthFunction f;
  auto ea = a.eval_, eb = b.eval_;
  f.eval_ = [ea, eb](const GroupElement& g) { return std::max(ea(g), eb(g)); };
  f.provenance_ = {"max", {}, {a.provenance_, b.provenance_}};
  f.symmetric_ = a.symmetric_ && b.symmetric_;
  f.exactly_subadditive_ = a.exactly_subadditive_ && b.exactly_subadditive_;
  return f;
}

LengthFunction LengthFunction::symmetrize(const LengthFunction& ell) {
  LengthFunction f;
  auto inner = ell.eval_;
  f.eval_ = [inner](const GroupElement& g) { return inner(g) + inner(g.inverse()); };
  f.provenance_ = {"symmetrize", {}, {ell.provenance_}};
  f.symmetric_ = true;
  f.exactly_subadditive_ = ell.exactly_subadditive_;
  return f;
}

LengthFunction LengthFunction::pullback(
    DecompositionContextPtr ctx, std::function<double(const Eigen::VectorXcd&)> quotient_ell,
    const std::string& label) {
  LengthFunction f;
  f.eval_ = [ctx, quotient_ell](const GroupElement& g) {
    return quotient_ell(to_complex(ctx->quotient_log(g)));
  };
  f.provenance_ = {"pullback", {{"quotient_length", label}}, {}};
  return f;
}

LengthFunction LengthFunction::word_proxy(const Fixture& fixture) {
  WeightedBasis wb = f_basis_weights(*fixture.algebra);
  LengthFunction f;
  auto weights = wb.weights;
  auto basis = std::make_shared<WeightedBasis>(std::move(wb));
  f.eval_ = [basis, weights](const GroupElement& g) {
    ExactVector coords = basis->coordinates_of(global_log_coordinates(g));
    return word_length_nilpotent(to_complex(coords), weights);
  };
  f.provenance_ = {"word_proxy", {{"weights", weights}}, {}};
  f.symmetric_ = true;  // coordinates of g^-1 are the negatives
  return f;
}

namespace {

double reductive_proxy(const GroupElement& l) {
  return std::log(operator_norm(l.matrix())) + std::log(operator_norm(l.inverse().matrix()));
}

}  // namespace

LengthFunction LengthFunction::phi(DecompositionContextPtr ctx) {
  LengthFunction f;
  auto weights = ctx->quotient_weights().weights;
  f.eval_ = [ctx, weights](const GroupElement& g) {
    TriDecomposition t = ctx->decompose(g);
    double eta_norm = euclidean_norm(t.eta);
    double ell1 = word_length_nilpotent(to_complex(ctx->quotient_coords(t.xi)), weights);
    double ell2 = t.l.word().empty() ? 0.0 : reductive_proxy(t.l);
    return std::log1p(eta_norm) + ell1 + ell2;
  };
  f.provenance_ = {"phi", {{"quotient_weights", weights}}, {}};
  f.symmetric_ = false;  // equivalence-class representative, not subadditive
  return f;
}

LengthFunction LengthFunction::ell_prime(DecompositionContextPtr ctx) {
  const MatrixRepPtr& rep = ctx->fixture().rep;
  if (!rep || !rep->faithful()) throw validation_error("NotFaithful");
  auto weights = ctx->quotient_weights().weights;
  auto qw = std::make_shared<WeightedBasis>(ctx->quotient_weights());
  LengthFunction quotient_part;
  quotient_part.eval_ = [ctx, qw, weights](const GroupElement& g) {
    ExactVector y = ctx->quotient_log(g);
    double w = word_length_nilpotent(to_complex(qw->coordinates_of(y)), weights);
    double l2 = 0.0;
    GroupElement l = GroupElement::identity(ctx->fixture().rep);
    for (const auto& letter : g.word()) {
      ExactVector lw = ctx->project_l(letter);
      if (!is_zero(lw)) l = GroupElement::product(l, GroupElement::exp_of(ctx->fixture().rep, lw));
    }
    if (!l.word().empty()) l2 = reductive_proxy(l);
    return w + l2;
  };
  quotient_part.provenance_ = {"quotient_word_proxy", {{"weights", weights}}, {}};
  quotient_part.symmetric_ = true;
  LengthFunction f = sum(quotient_part, pi_sym(rep));
  f.provenance_ = {"ell_prime", {}, {quotient_part.provenance_, {"length_pi_sym", {}, {}}}};
  return f;
}

}  // namespace liedist
