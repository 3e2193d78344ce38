#include "core/structure.hpp"

#include "core/errors.hpp"
#include "core/rng.hpp"

namespace liedist {

namespace {

Subspace fitting_null(const LieAlgebra& b, const ExactVector& x) {
  ExactMatrix adx = b.ad(x);
  ExactMatrix power = ExactMatrix::identity(b.dim());
  for (std::size_t i = 0; i < b.dim(); ++i) power = power * adx;
  return Subspace::span_of(kernel_basis(power), b.dim());
}

bool is_cartan(const LieAlgebra& b, const Subspace& h) {
  return is_nilpotent(b, h) && b.normalizer(h) == h;
}

}  // namespace

Subspace cartan_subalgebra(const LieAlgebra& b, std::uint64_t seed, int max_trials) {
  if (!is_solvable(b, Subspace::full(b.dim())))
    throw validation_error("cartan_subalgebra: algebra is not solvable");
  if (b.dim() == 0) return Subspace(0);

  std::vector<ExactVector> candidates;
  for (std::size_t i = 0; i < b.dim(); ++i) candidates.push_back(b.basis_vector(i));
  SplitMix rng(seed ^ 0xCA47A4ULL);
  while (candidates.size() < static_cast<std::size_t>(max_trials)) {
    ExactVector x(b.dim());
    for (auto& c : x) c = GaussianRational(Rational(static_cast<long long>(rng.next() % 9) - 4));
    if (!is_zero(x)) candidates.push_back(std::move(x));
  }

  int trials = 0;
  for (const auto& x : candidates) {
    if (trials++ >= max_trials) break;
    if (is_zero(x)) continue;
    Subspace h = fitting_null(b, x);
    if (is_cartan(b, h)) return h;
  }
  throw validation_error("RegularElementNotFound after " + std::to_string(max_trials) +
                         " trials (seed " + std::to_string(seed) + ")");
}

Subspace complement_v(const LieAlgebra& a, const Subspace& h, const Subspace& nprime) {
  (void)a;
  Subspace meet = nprime.intersect(h);
  return meet.complement_in(h);
}

ExactVector WeightedBasis::coordinates_of(const ExactVector& v) const {
  std::size_t n = v.size();
  ExactMatrix m(n, vectors.size());
  for (std::size_t j = 0; j < vectors.size(); ++j)
    for (std::size_t i = 0; i < n; ++i) m(i, j) = vectors[j][i];
  auto sol = solve_exact(m, v);
  if (!sol) throw internal_error("WeightedBasis: vector outside the span");
  return *sol;
}

WeightedBasis f_basis_weights(const LieAlgebra& a) {
  SeriesChain chain = lower_central_series(a, Subspace::full(a.dim()));
  if (!chain.reaches_zero()) throw validation_error("NotNilpotent");

  // terms[k] = C^{k+1}; vectors completing C^{k+2} inside C^{k+1} get
  // weight k+1. Listed shallow-first, so weights are nondecreasing.
  std::vector<ExactVector> vectors;
  std::vector<std::size_t> weights;
  for (std::size_t k = 0; k + 1 < chain.terms.size(); ++k) {
    Subspace added = chain.terms[k + 1].complement_in(chain.terms[k]);
    for (const auto& v : added.basis()) {
      vectors.push_back(v);
      weights.push_back(k + 1);
    }
  }
  return {std::move(vectors), std::move(weights)};
}

}  // namespace liedist
