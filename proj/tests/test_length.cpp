#include "core/distortion.hpp"
#include "core/errors.hpp"
#include "core/fixtures.hpp"
#include "core/length.hpp"
#include "core/sampler.hpp"

#include <doctest.h>

#include <cmath>

using namespace liedist;

namespace {

GaussianRational q(long long num, long long den = 1) {
  return GaussianRational(Rational(num, den));
}

GroupElement heis_element(const Fixture& f, double a, double b, double c) {
  // word exp(a e1) exp(b e2) exp(d e3) has matrix entries (a, b, ab + d)
  GroupElement g = GroupElement::exp_of(f.rep, scale(f.algebra->basis_vector(0),
                                                     GaussianRational(rational_from_double(a))));
  g = GroupElement::product(
      g, GroupElement::exp_of(f.rep, scale(f.algebra->basis_vector(1),
                                           GaussianRational(rational_from_double(b)))));
  return GroupElement::product(
      g, GroupElement::exp_of(f.rep, scale(f.algebra->basis_vector(2),
                                           GaussianRational(rational_from_double(c - a * b)))));
}

GroupElement cgroup_element(const Fixture& f, std::complex<double> z) {
  return GroupElement::exp_of(f.rep, {gaussian_from_complex(z)});
}

double entry_target(const GroupElement& g) {
  // |a| + |b| + log(1 + |c|) on the heisenberg matrix entries
  const auto& m = g.matrix();
  return std::abs(m(0, 1)) + std::abs(m(1, 2)) + std::log1p(std::abs(m(0, 2)));
}

}  // namespace

TEST_CASE("filtration word length") {
  Eigen::VectorXcd zero = Eigen::VectorXcd::Zero(3);
  CHECK(word_length_nilpotent(zero, {1, 1, 2}) == 0.0);

  Eigen::VectorXcd v(3);
  v << 3.0, -4.0, std::complex<double>(0, 9);
  CHECK(word_length_nilpotent(v, {1, 1, 2}) == doctest::Approx(4.0));
  v << 0.5, 0.25, 1e6;
  CHECK(word_length_nilpotent(v, {1, 1, 2}) == doctest::Approx(1e3));
}

TEST_CASE("pi length on the heisenberg centre matches the analytic norm") {
  Fixture f = builtin_fixture("heisenberg3");
  LengthFunction pi = LengthFunction::pi(f.rep);
  CHECK(pi(GroupElement::identity(f.rep)) == doctest::Approx(0.0));

  for (double c : {1.0, 100.0, 1e6}) {
    GroupElement g = GroupElement::exp_of(
        f.rep, scale(f.algebra->basis_vector(2), GaussianRational(rational_from_double(c))));
    double expected = std::log((c + std::sqrt(c * c + 4.0)) / 2.0);
    CHECK(pi(g) == doctest::Approx(expected).epsilon(1e-10));
  }
}

TEST_CASE("pi_sym on the diagonal exponential fixture") {
  Fixture f = builtin_fixture("cgroup");
  LengthFunction sym = LengthFunction::pi_sym(f.rep);

  for (double t : {1.0, 10.0, 500.0}) {
    CHECK(sym(cgroup_element(f, {t, 0})) == doctest::Approx(t));
    CHECK(sym(cgroup_element(f, {-t, 0})) == doctest::Approx(t));
    CHECK(sym(cgroup_element(f, {0, t})) == doctest::Approx(t));
    CHECK(sym(cgroup_element(f, {0, -t})) == doctest::Approx(t));
    CHECK(sym(cgroup_element(f, {t, t})) == doctest::Approx(2 * t));
  }

  // the norms cancel where pi(z) is a scalar multiple of a unitary: along
  // z = t(1 - i) the symmetrized length is identically zero
  for (double t : {1.0, 40.0}) CHECK(sym(cgroup_element(f, {t, -t})) == doctest::Approx(0.0));

  // overflow-safe path: |z| far beyond the plain exp range
  CHECK(sym(cgroup_element(f, {900.0, 0})) == doctest::Approx(900.0));
  CHECK(sym(cgroup_element(f, {0, 1000.0})) == doctest::Approx(1000.0));
}

TEST_CASE("composition with vetted functions") {
  Fixture f = builtin_fixture("heisenberg3");
  LengthFunction pi = LengthFunction::pi(f.rep);
  LengthFunction same = LengthFunction::compose_f(pi, VettedFunction::power(1.0));
  GroupElement g = heis_element(f, 2, -3, 7);
  CHECK(same(g) == doctest::Approx(pi(g)));

  LengthFunction logged = LengthFunction::compose_f(pi, VettedFunction::log1p());
  CHECK(logged(g) == doctest::Approx(std::log1p(pi(g))));

  LengthFunction capped = LengthFunction::compose_f(pi, VettedFunction::cap(0.5));
  CHECK(capped(g) == doctest::Approx(0.5));

  CHECK_THROWS_WITH_AS(VettedFunction::power(1.5), doctest::Contains("UnvettedFunction"), Error);
  CHECK_THROWS_WITH_AS(VettedFunction::power(0.0), doctest::Contains("UnvettedFunction"), Error);
  CHECK_THROWS_WITH_AS(VettedFunction::cap(-1.0), doctest::Contains("UnvettedFunction"), Error);
}

TEST_CASE("sum, max, symmetrize") {
  Fixture f = builtin_fixture("heisenberg3");
  LengthFunction pi = LengthFunction::pi(f.rep);
  LengthFunction zero = LengthFunction::zero();
  GroupElement g = heis_element(f, 1, 2, 3);

  CHECK(LengthFunction::sum(pi, zero)(g) == doctest::Approx(pi(g)));
  CHECK(LengthFunction::max(pi, pi)(g) == doctest::Approx(pi(g)));

  LengthFunction sym = LengthFunction::symmetrize(pi);
  CHECK(sym(g) == doctest::Approx(LengthFunction::pi_sym(f.rep)(g)));
  CHECK(sym(g) == doctest::Approx(sym(g.inverse())));

  LengthFunction sym2 = LengthFunction::symmetrize(sym);
  CHECK(sym2(g) == doctest::Approx(2 * sym(g)));
}

TEST_CASE("pullback vanishes on the kernel") {
  Fixture f = builtin_fixture("heisenberg3");
  auto ctx = std::make_shared<const DecompositionContext>(f, f.subgroups.at("N"));
  LengthFunction ell2 = LengthFunction::pullback(
      ctx,
      [](const Eigen::VectorXcd& u) { return std::abs(u(0)) + std::abs(u(1)); },
      "abs-sum");

  GroupElement central = GroupElement::exp_of(f.rep, scale(f.algebra->basis_vector(2), q(1000)));
  CHECK(ell2(central) == doctest::Approx(0.0));
  GroupElement g = heis_element(f, 3, -4, 11);
  CHECK(ell2(g) == doctest::Approx(7.0));

  // identity quotient (n' = 0) leaves coordinates intact
  auto ctx0 = std::make_shared<const DecompositionContext>(f, Subspace(3));
  LengthFunction through = LengthFunction::pullback(
      ctx0, [](const Eigen::VectorXcd& u) { return u.cwiseAbs().maxCoeff(); }, "max-abs");
  GroupElement e1 = GroupElement::exp_of(f.rep, scale(f.algebra->basis_vector(0), q(5)));
  CHECK(through(e1) == doctest::Approx(5.0));
}

TEST_CASE("word proxy on nilpotent fixtures") {
  Fixture f = builtin_fixture("heisenberg3");
  LengthFunction proxy = LengthFunction::word_proxy(f);
  // first-kind coordinates: proxy(exp(x)) = max(|x1|, |x2|, |x3|^(1/2))
  GroupElement g = GroupElement::exp_of(
      f.rep, add(scale(f.algebra->basis_vector(0), q(3)), scale(f.algebra->basis_vector(2), q(100))));
  CHECK(proxy(g) == doctest::Approx(10.0));
  CHECK(proxy(g.inverse()) == doctest::Approx(proxy(g)));

  Fixture fil = builtin_fixture("filiform5");
  LengthFunction fproxy = LengthFunction::word_proxy(fil);
  GroupElement r = GroupElement::exp_of(fil.rep, scale(fil.algebra->basis_vector(4), q(1 << 20)));
  // e5 has weight 4
  CHECK(fproxy(r) == doctest::Approx(std::pow(static_cast<double>(1 << 20), 0.25)));
}

TEST_CASE("phi on the heisenberg group matches the entry formula") {
  Fixture f = builtin_fixture("heisenberg3");
  auto ctx = std::make_shared<const DecompositionContext>(f, f.subgroups.at("N"));
  LengthFunction phi = LengthFunction::phi(ctx);

  CHECK(phi(GroupElement::identity(f.rep)) == doctest::Approx(0.0));

  // central ray: log(1 + t)
  GroupElement central = GroupElement::exp_of(f.rep, scale(f.algebra->basis_vector(2), q(1000)));
  CHECK(phi(central) == doctest::Approx(std::log1p(1000.0)));

  // two-sided fit against |a| + |b| + log(1 + |c|)
  LengthFunction target = LengthFunction::custom(entry_target, "abs-entries");
  StratifiedOptions opts;
  opts.seed = 12345;
  opts.products_per_stratum = 40;
  auto samples = stratified_samples(f.rep, opts);
  DominationFit fwd = dominates(phi, target, samples);
  DominationFit bwd = dominates(target, phi, samples);
  CAPTURE(fwd.C);
  CAPTURE(bwd.C);
  CHECK(fwd.success);
  CHECK(bwd.success);
  CHECK(fwd.C <= 10.0);
  CHECK(bwd.C <= 10.0);
}

TEST_CASE("phi on filiform5 matches the split formula for each H_k") {
  Fixture f = builtin_fixture("filiform5");
  StratifiedOptions opts;
  opts.seed = 777;
  opts.products_per_stratum = 40;
  auto samples = stratified_samples(f.rep, opts);

  WeightedBasis wb = f_basis_weights(*f.algebra);
  for (std::size_t k : {2u, 3u, 4u}) {
    CAPTURE(k);
    auto ctx =
        std::make_shared<const DecompositionContext>(f, f.subgroups.at("H" + std::to_string(k)));
    LengthFunction phi = LengthFunction::phi(ctx);
    auto weights = wb.weights;
    // powers on the quotient coordinates t_1..t_k, log on the coordinates
    // of H_k itself
    LengthFunction target = LengthFunction::custom(
        [k, weights](const GroupElement& g) {
          ExactVector t = global_log_coordinates(g);
          double inside = 0.0, outside = 0.0;
          for (std::size_t j = 0; j < t.size(); ++j) {
            double a = std::abs(t[j].to_complex());
            if (j < k)
              outside += std::pow(a, 1.0 / static_cast<double>(weights[j]));
            else
              inside += a;
          }
          return outside + std::log1p(inside);
        },
        "split-formula");
    DominationFit fwd = dominates(phi, target, samples);
    DominationFit bwd = dominates(target, phi, samples);
    CAPTURE(fwd.C);
    CAPTURE(bwd.C);
    CHECK(fwd.success);
    CHECK(bwd.success);
    CHECK(fwd.C <= 10.0);
    CHECK(bwd.C <= 10.0);
  }
}

TEST_CASE("ell_prime is equivalent to phi and logarithmic on the kernel ray") {
  Fixture f = builtin_fixture("heisenberg3");
  auto ctx = std::make_shared<const DecompositionContext>(f, f.subgroups.at("N"));
  LengthFunction phi = LengthFunction::phi(ctx);
  LengthFunction ellp = LengthFunction::ell_prime(ctx);

  CHECK(ellp(GroupElement::identity(f.rep)) == doctest::Approx(0.0));

  StratifiedOptions opts;
  opts.seed = 4242;
  opts.products_per_stratum = 40;
  auto samples = stratified_samples(f.rep, opts);
  DominationFit fwd = dominates(ellp, phi, samples);
  DominationFit bwd = dominates(phi, ellp, samples);
  CHECK(fwd.success);
  CHECK(bwd.success);

  // on the central ray the quotient proxy vanishes and pi_sym is ~ 2 log t
  GroupElement central = GroupElement::exp_of(f.rep, scale(f.algebra->basis_vector(2),
                                                           GaussianRational(rational_from_double(1e6))));
  double expected = 2 * std::log((1e6 + std::sqrt(1e12 + 4.0)) / 2.0);
  CHECK(ellp(central) == doctest::Approx(expected).epsilon(1e-9));

  // faithfulness is a precondition
  std::vector<std::vector<ExactVector>> c(2, std::vector<ExactVector>(2, ExactVector(2)));
  auto ab = std::make_shared<LieAlgebra>(std::vector<std::string>{"a1", "a2"}, c);
  Fixture fake;
  fake.name = "fake";
  fake.algebra = ab;
  fake.rep = std::make_shared<MatrixRep>(ab, std::vector<ExactMatrix>{ExactMatrix(2, 2),
                                                                      ExactMatrix(2, 2)},
                                         false);
  fake.levi = Subspace(2);
  fake.b_ideal = Subspace::full(2);
  fake.l_subalg = Subspace(2);
  auto fctx = std::make_shared<const DecompositionContext>(fake, Subspace(2));
  CHECK_THROWS_WITH_AS(LengthFunction::ell_prime(fctx), doctest::Contains("NotFaithful"), Error);
}

TEST_CASE("exact subadditivity of pi lengths on sampled pairs") {
  for (const auto& name : {"heisenberg3", "filiform4", "sixdim"}) {
    CAPTURE(name);
    Fixture f = builtin_fixture(name);
    LengthFunction pi = LengthFunction::pi(f.rep);
    LengthFunction sym = LengthFunction::pi_sym(f.rep);
    SampleOptions opts;
    opts.seed = 2718;
    opts.count = 600;
    opts.scale = 1e3;
    auto samples = sample_elements(f.rep, opts);
    for (std::size_t i = 0; i + 1 < samples.size(); i += 2) {
      GroupElement gh = GroupElement::product(samples[i], samples[i + 1]);
      CHECK(pi(gh) <= pi(samples[i]) + pi(samples[i + 1]) + 1e-10);
      CHECK(sym(gh) <= sym(samples[i]) + sym(samples[i + 1]) + 1e-10);
    }
  }
}

TEST_CASE("vetted composition preserves fitted domination") {
  Fixture f = builtin_fixture("heisenberg3");
  auto ctx = std::make_shared<const DecompositionContext>(f, f.subgroups.at("N"));
  LengthFunction phi = LengthFunction::phi(ctx);
  LengthFunction target = LengthFunction::custom(entry_target, "abs-entries");
  StratifiedOptions opts;
  opts.seed = 555;
  opts.products_per_stratum = 30;
  auto samples = stratified_samples(f.rep, opts);

  for (VettedFunction vf : {VettedFunction::log1p(), VettedFunction::power(0.5)}) {
    LengthFunction fa = LengthFunction::compose_f(phi, vf);
    LengthFunction fb = LengthFunction::compose_f(target, vf);
    DominationFit fit = dominates(fa, fb, samples);
    CHECK(fit.success);
  }
}

TEST_CASE("phi evaluation is deterministic") {
  Fixture f = builtin_fixture("filiform5");
  auto ctx = std::make_shared<const DecompositionContext>(f, f.subgroups.at("H3"));
  LengthFunction phi = LengthFunction::phi(ctx);
  SampleOptions opts;
  opts.seed = 1;
  opts.count = 20;
  opts.scale = 1e4;
  auto samples = sample_elements(f.rep, opts);
  for (const auto& g : samples) {
    double v1 = phi(g);
    double v2 = phi(g);
    CHECK(v1 == v2);  // bit-identical
  }
}
