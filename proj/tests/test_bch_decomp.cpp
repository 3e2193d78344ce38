#include "core/bch.hpp"
#include "core/errors.hpp"
#include "core/fixtures.hpp"
#include "core/sampler.hpp"
#include "core/tridecomp.hpp"

#include <doctest.h>

using namespace liedist;

namespace {

GaussianRational q(long long num, long long den = 1) {
  return GaussianRational(Rational(num, den));
}

// Matrix-side oracle: z = rho^{-1}(log(exp(rho x) exp(rho y))).
ExactVector bch_matrix_oracle(const Fixture& f, const ExactVector& x, const ExactVector& y) {
  ExactMatrix gx = exp_nilpotent(f.rep->apply(x));
  ExactMatrix gy = exp_nilpotent(f.rep->apply(y));
  ExactMatrix z = log_unipotent(gx * gy);
  auto pre = f.rep->preimage(z);
  REQUIRE(pre.has_value());
  return *pre;
}

Fixture make_heis_sl2_product() {
  // direct product: heisenberg in e1..e3, sl2 in h,e,f; block-diagonal rep
  std::size_t n = 6;
  std::vector<std::vector<ExactVector>> c(n, std::vector<ExactVector>(n, ExactVector(n)));
  auto set = [&](std::size_t i, std::size_t j, std::size_t k, long long num) {
    c[i][j][k] = q(num);
    c[j][i][k] = q(-num);
  };
  set(0, 1, 2, 1);   // [e1, e2] = e3
  set(3, 4, 4, 2);   // [h, e] = 2e
  set(3, 5, 5, -2);  // [h, f] = -2f
  set(4, 5, 3, 1);   // [e, f] = h
  auto alg = std::make_shared<LieAlgebra>(
      std::vector<std::string>{"e1", "e2", "e3", "h", "e", "f"}, c);

  std::size_t d = 5;
  auto unit = [&](std::size_t r, std::size_t col) {
    ExactMatrix m(d, d);
    m(r, col) = q(1);
    return m;
  };
  ExactMatrix rh(d, d);
  rh(3, 3) = q(1);
  rh(4, 4) = q(-1);
  std::vector<ExactMatrix> rho = {unit(0, 1), unit(1, 2), unit(0, 2), rh, unit(3, 4), unit(4, 3)};

  Fixture f;
  f.name = "heis3_x_sl2";
  f.algebra = alg;
  f.rep = std::make_shared<MatrixRep>(alg, rho, true);
  std::vector<ExactVector> levi_rows, b_rows;
  for (std::size_t i : {3u, 4u, 5u}) {
    ExactVector v(n);
    v[i] = q(1);
    levi_rows.push_back(v);
  }
  for (std::size_t i : {0u, 1u, 2u}) {
    ExactVector v(n);
    v[i] = q(1);
    b_rows.push_back(v);
  }
  f.levi = Subspace::span_of(levi_rows, n);
  f.b_ideal = Subspace::span_of(b_rows, n);
  f.l_subalg = f.levi;
  std::vector<ExactVector> nrow = {ExactVector(n)};
  nrow[0][2] = q(1);
  f.subgroups["N"] = Subspace::span_of(nrow, n);
  return f;
}

}  // namespace

TEST_CASE("bch agrees with the matrix oracle") {
  for (const auto& name : {"heisenberg3", "filiform4", "filiform5"}) {
    CAPTURE(name);
    Fixture f = builtin_fixture(name);
    std::size_t cls = nilpotency_class(*f.algebra);
    SplitMix rng(std::hash<std::string>{}(name) & 0xFFFF);
    for (int trial = 0; trial < 200; ++trial) {
      ExactVector x = sample_in_subspace(rng, Subspace::full(f.algebra->dim()));
      ExactVector y = sample_in_subspace(rng, Subspace::full(f.algebra->dim()));
      CHECK(bch(*f.algebra, x, y, cls) == bch_matrix_oracle(f, x, y));
    }
  }
}

TEST_CASE("bch on deeper filiform algebras") {
  Fixture f = builtin_fixture("filiform7");
  std::size_t cls = nilpotency_class(*f.algebra);
  CHECK(cls == 6);
  SplitMix rng(42);
  for (int trial = 0; trial < 5; ++trial) {
    ExactVector x = sample_in_subspace(rng, Subspace::full(7));
    ExactVector y = sample_in_subspace(rng, Subspace::full(7));
    CHECK(bch(*f.algebra, x, y, cls) == bch_matrix_oracle(f, x, y));
  }
}

TEST_CASE("tri-decomposition on the heisenberg group") {
  Fixture heis = builtin_fixture("heisenberg3");
  auto ctx = std::make_shared<const DecompositionContext>(heis, heis.subgroups.at("N"));

  TriDecomposition id = ctx->decompose(GroupElement::identity(heis.rep));
  CHECK(is_zero(id.eta));
  CHECK(is_zero(id.xi));
  CHECK(id.l.word().empty());

  // matrix entries (a, b, c) decompose as xi = a e1 + b e2,
  // eta = (c - ab/2) e3
  GroupElement g = GroupElement::product(
      GroupElement::product(
          GroupElement::exp_of(heis.rep, scale(heis.algebra->basis_vector(0), q(2))),
          GroupElement::exp_of(heis.rep, scale(heis.algebra->basis_vector(1), q(3)))),
      GroupElement::exp_of(heis.rep, scale(heis.algebra->basis_vector(2), q(5))));
  REQUIRE(g.is_exact());
  GaussianRational c_entry = (*g.exact())(0, 2);
  CHECK(c_entry == q(11));  // ab + d = 6 + 5
  TriDecomposition t = ctx->decompose(g);
  CHECK(t.xi == add(scale(heis.algebra->basis_vector(0), q(2)),
                    scale(heis.algebra->basis_vector(1), q(3))));
  CHECK(t.eta == scale(heis.algebra->basis_vector(2), q(8)));  // c - ab/2

  GroupElement back = ctx->compose(t);
  CHECK(*back.exact() == *g.exact());
}

TEST_CASE("decomposition round-trip per fixture") {
  struct Case {
    const char* fixture;
    const char* nprime;
    bool exact_expected;
  };
  for (const Case& tc : {Case{"heisenberg3", "N", true}, Case{"filiform4", "H2", true},
                         Case{"filiform5", "H3", true}, Case{"affine2", "N", false},
                         Case{"sixdim", "N", false}, Case{"sixdim", "E", false}}) {
    CAPTURE(tc.fixture);
    CAPTURE(tc.nprime);
    Fixture f = builtin_fixture(tc.fixture);
    auto ctx = std::make_shared<const DecompositionContext>(f, f.subgroups.at(tc.nprime));
    SampleOptions opts;
    opts.seed = 0xDECAF;
    opts.count = 150;
    opts.scale = 1e3;
    auto samples = sample_elements(f.rep, opts);
    for (const auto& g : samples) {
      TriDecomposition t = ctx->decompose(g);
      CHECK(ctx->nprime().contains(t.eta));  // exact membership by construction
      CHECK(ctx->complement().contains(t.xi));
      GroupElement back = ctx->compose(t);
      if (tc.exact_expected && g.is_exact() && back.is_exact()) {
        CHECK(*back.exact() == *g.exact());
      } else {
        double err = (back.matrix() - g.matrix()).norm();
        CHECK(err <= 1e-9 * std::max(1.0, g.matrix().norm()));
      }
    }
  }
}

TEST_CASE("decomposition with a nontrivial reductive factor") {
  Fixture f = make_heis_sl2_product();
  CHECK_NOTHROW(f.algebra->validate());
  CHECK_NOTHROW(f.rep->validate());
  CHECK(exponential_radical(*f.algebra, f.levi).dim() == 0);
  CHECK(nilpotent_radical(*f.algebra) == f.subgroups.at("N"));

  auto ctx = std::make_shared<const DecompositionContext>(f, f.subgroups.at("N"));
  SampleOptions opts;
  opts.seed = 99;
  opts.count = 100;
  opts.scale = 40;
  auto samples = sample_elements(f.rep, opts);
  for (const auto& g : samples) {
    TriDecomposition t = ctx->decompose(g);
    CHECK(ctx->nprime().contains(t.eta));
    GroupElement back = ctx->compose(t);
    double err = (back.matrix() - g.matrix()).norm();
    CHECK(err <= 1e-9 * std::max(1.0, g.matrix().norm()));
  }
}

TEST_CASE("sl2 fixture decomposes into its reductive factor") {
  Fixture f = builtin_fixture("sl2");
  auto ctx = std::make_shared<const DecompositionContext>(f, f.subgroups.at("0"));
  SampleOptions opts;
  opts.seed = 3;
  opts.count = 50;
  opts.scale = 20;
  for (const auto& g : sample_elements(f.rep, opts)) {
    TriDecomposition t = ctx->decompose(g);
    CHECK(is_zero(t.eta));
    CHECK(is_zero(t.xi));
    double err = (t.l.matrix() - g.matrix()).norm();
    CHECK(err <= 1e-9 * std::max(1.0, g.matrix().norm()));
  }
}

TEST_CASE("context construction rejects bad intermediate ideals") {
  Fixture fil5 = builtin_fixture("filiform5");
  CHECK_THROWS_WITH_AS(
      DecompositionContext(fil5, Subspace::span_of({fil5.algebra->basis_vector(0)}, 5)),
      doctest::Contains("NotAnIdeal"), Error);
}
