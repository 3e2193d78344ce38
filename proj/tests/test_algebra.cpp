#include "core/bch.hpp"
#include "core/errors.hpp"
#include "core/fixtures.hpp"
#include "core/lie_algebra.hpp"
#include "core/structure.hpp"

#include <doctest.h>

using namespace liedist;

namespace {

GaussianRational q(long long num, long long den = 1) {
  return GaussianRational(Rational(num, den));
}

ExactVector vec(std::initializer_list<long long> entries) {
  ExactVector v;
  for (long long e : entries) v.push_back(q(e));
  return v;
}

LieAlgebraPtr abelian(std::size_t n) {
  std::vector<std::vector<ExactVector>> c(n, std::vector<ExactVector>(n, ExactVector(n)));
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("a" + std::to_string(i));
  return std::make_shared<LieAlgebra>(names, c);
}

}  // namespace

TEST_CASE("validate accepts the catalog and rejects broken tables") {
  for (const auto& name : builtin_fixture_names()) {
    CAPTURE(name);
    CHECK_NOTHROW(builtin_fixture(name).algebra->validate());
  }
  CHECK_NOTHROW(abelian(3)->validate());

  // [e1,e2] = e1 together with [e2,e1] = e1 breaks antisymmetry
  std::vector<std::vector<ExactVector>> c(2, std::vector<ExactVector>(2, ExactVector(2)));
  c[0][1][0] = q(1);
  c[1][0][0] = q(1);
  LieAlgebra bad({"e1", "e2"}, c);
  CHECK_THROWS_WITH_AS(bad.validate(), doctest::Contains("Antisymmetry"), Error);

  // antisymmetric but non-Jacobi: [e1,e2]=e3, [e1,e3]=e1, [e2,e3]=e2
  std::vector<std::vector<ExactVector>> j(3, std::vector<ExactVector>(3, ExactVector(3)));
  j[0][1][2] = q(1);
  j[1][0][2] = q(-1);
  j[0][2][0] = q(1);
  j[2][0][0] = q(-1);
  j[1][2][1] = q(1);
  j[2][1][1] = q(-1);
  LieAlgebra nonjac({"e1", "e2", "e3"}, j);
  CHECK_THROWS_WITH_AS(nonjac.validate(), doctest::Contains("Jacobi"), Error);
}

TEST_CASE("bracket is the bilinear extension") {
  Fixture fil = builtin_fixture("filiform4");
  CHECK(fil.algebra->bracket(fil.algebra->basis_vector(0), fil.algebra->basis_vector(1)) ==
        fil.algebra->basis_vector(2));

  Fixture aff = builtin_fixture("affine2");
  ExactVector xy = add(aff.algebra->basis_vector(0), aff.algebra->basis_vector(1));
  CHECK(aff.algebra->bracket(xy, aff.algebra->basis_vector(1)) == aff.algebra->basis_vector(1));
  CHECK(is_zero(aff.algebra->bracket(xy, xy)));
}

TEST_CASE("lower central and derived series") {
  Fixture fil5 = builtin_fixture("filiform5");
  auto lcs = lower_central_series(*fil5.algebra, Subspace::full(5));
  CHECK(lcs.dims() == std::vector<std::size_t>{5, 3, 2, 1, 0});

  auto ab = abelian(4);
  CHECK(lower_central_series(*ab, Subspace::full(4)).dims() == std::vector<std::size_t>{4, 0});

  Fixture aff = builtin_fixture("affine2");
  auto chain = lower_central_series(*aff.algebra, Subspace::full(2));
  CHECK(chain.dims() == std::vector<std::size_t>{2, 1, 1});
  CHECK(chain.terms.back().contains(aff.algebra->basis_vector(1)));

  Fixture heis = builtin_fixture("heisenberg3");
  CHECK(derived_series(*heis.algebra, Subspace::full(3)).dims() ==
        std::vector<std::size_t>{3, 1, 0});

  Fixture sl2 = builtin_fixture("sl2");
  CHECK(derived_series(*sl2.algebra, Subspace::full(3)).dims() == std::vector<std::size_t>{3, 3});
  CHECK(!is_solvable(*sl2.algebra, Subspace::full(3)));
}

TEST_CASE("solvable radical") {
  Fixture heis = builtin_fixture("heisenberg3");
  CHECK(solvable_radical(*heis.algebra) == Subspace::full(3));

  Fixture sl2 = builtin_fixture("sl2");
  CHECK(solvable_radical(*sl2.algebra).dim() == 0);

  Fixture aff = builtin_fixture("affine2");
  CHECK(solvable_radical(*aff.algebra) == Subspace::full(2));
}

TEST_CASE("nilpotent radical with cross-check") {
  Fixture heis = builtin_fixture("heisenberg3");
  Subspace n = nilpotent_radical(*heis.algebra);
  CHECK(n.dim() == 1);
  CHECK(n.contains(heis.algebra->basis_vector(2)));

  for (std::size_t nn = 4; nn <= 6; ++nn) {
    Fixture fil = builtin_fixture("filiform" + std::to_string(nn));
    CHECK(nilpotent_radical(*fil.algebra) == fil.subgroups.at("H2"));
  }

  Fixture aff = builtin_fixture("affine2");
  Subspace an = nilpotent_radical(*aff.algebra);
  CHECK(an.dim() == 1);
  CHECK(an.contains(aff.algebra->basis_vector(1)));
}

TEST_CASE("subalgebra generated") {
  Fixture heis = builtin_fixture("heisenberg3");
  Subspace c = subalgebra_generated(
      *heis.algebra, Subspace::span_of({heis.algebra->basis_vector(2)}, 3));
  CHECK(c.dim() == 1);

  Fixture fil5 = builtin_fixture("filiform5");
  Subspace gen = subalgebra_generated(
      *fil5.algebra,
      Subspace::span_of({fil5.algebra->basis_vector(0), fil5.algebra->basis_vector(1)}, 5));
  CHECK(gen == Subspace::full(5));

  CHECK(subalgebra_generated(*heis.algebra, Subspace(3)).dim() == 0);
}

TEST_CASE("exponential radical") {
  Fixture heis = builtin_fixture("heisenberg3");
  CHECK(exponential_radical(*heis.algebra, heis.levi).dim() == 0);

  Fixture aff = builtin_fixture("affine2");
  Subspace e = exponential_radical(*aff.algebra, aff.levi);
  CHECK(e.dim() == 1);
  CHECK(e.contains(aff.algebra->basis_vector(1)));

  Fixture six = builtin_fixture("sixdim");
  Subspace se = exponential_radical(*six.algebra, six.levi);
  CHECK(se.dim() == 3);
  CHECK(se == six.subgroups.at("E"));
  // e and g/e are both Heisenberg: lower-central dims (3, 1, 0)
  auto [ealg, eframe] = subalgebra_data(*six.algebra, se);
  CHECK(lower_central_series(*ealg, Subspace::full(3)).dims() ==
        std::vector<std::size_t>{3, 1, 0});
  QuotientData quo = quotient_algebra(*six.algebra, se);
  CHECK(lower_central_series(*quo.algebra, Subspace::full(3)).dims() ==
        std::vector<std::size_t>{3, 1, 0});

  Fixture sl2 = builtin_fixture("sl2");
  CHECK(exponential_radical(*sl2.algebra, sl2.levi).dim() == 0);

  // a broken Levi input is rejected
  CHECK_THROWS_WITH_AS(
      exponential_radical(*heis.algebra, Subspace::span_of({heis.algebra->basis_vector(0)}, 3)),
      doctest::Contains("InvalidLeviComplement"), Error);
}

TEST_CASE("cartan subalgebra") {
  Fixture heis = builtin_fixture("heisenberg3");
  CHECK(cartan_subalgebra(*heis.algebra) == Subspace::full(3));

  Fixture aff = builtin_fixture("affine2");
  Subspace h = cartan_subalgebra(*aff.algebra);
  CHECK(h.dim() == 1);
  CHECK(h.contains(aff.algebra->basis_vector(0)));

  Fixture six = builtin_fixture("sixdim");
  Subspace sh = cartan_subalgebra(*six.algebra);
  CHECK(sh.dim() == 4);
  for (std::size_t i : {0u, 1u, 2u, 5u}) CHECK(sh.contains(six.algebra->basis_vector(i)));
  CHECK(is_nilpotent(*six.algebra, sh));
  CHECK(six.algebra->normalizer(sh) == sh);
  // n' + h = b whenever e ⊆ n'
  CHECK(six.subgroups.at("E").sum(sh) == Subspace::full(6));
  CHECK(six.subgroups.at("N").sum(sh) == Subspace::full(6));

  Fixture sl2 = builtin_fixture("sl2");
  CHECK_THROWS(cartan_subalgebra(*sl2.algebra));  // not solvable
}

TEST_CASE("complement choice is the echelon completion") {
  Fixture heis = builtin_fixture("heisenberg3");
  Subspace nprime = heis.subgroups.at("N");
  Subspace v = complement_v(*heis.algebra, Subspace::full(3), nprime);
  CHECK(v == Subspace::span_of({heis.algebra->basis_vector(0), heis.algebra->basis_vector(1)}, 3));

  Fixture fil4 = builtin_fixture("filiform4");
  Subspace v4 = complement_v(*fil4.algebra, Subspace::full(4), fil4.subgroups.at("H2"));
  CHECK(v4 ==
        Subspace::span_of({fil4.algebra->basis_vector(0), fil4.algebra->basis_vector(1)}, 4));

  // n' ∩ h = h forces v = 0
  CHECK(complement_v(*heis.algebra, nprime, nprime).dim() == 0);
}

TEST_CASE("filtration weights") {
  Fixture fil5 = builtin_fixture("filiform5");
  WeightedBasis w = f_basis_weights(*fil5.algebra);
  CHECK(w.weights == std::vector<std::size_t>{1, 1, 2, 3, 4});
  for (std::size_t k = 0; k < 5; ++k) CHECK(w.vectors[k] == fil5.algebra->basis_vector(k));

  CHECK(f_basis_weights(*abelian(3)).weights == std::vector<std::size_t>{1, 1, 1});

  Fixture heis = builtin_fixture("heisenberg3");
  CHECK(f_basis_weights(*heis.algebra).weights == std::vector<std::size_t>{1, 1, 2});

  CHECK_THROWS_WITH_AS(f_basis_weights(*builtin_fixture("affine2").algebra),
                       doctest::Contains("NotNilpotent"), Error);
}

TEST_CASE("quotient algebra") {
  Fixture heis = builtin_fixture("heisenberg3");
  QuotientData quo = quotient_algebra(*heis.algebra, heis.subgroups.at("N"));
  CHECK(quo.algebra->dim() == 2);
  CHECK(is_zero(quo.algebra->basis_bracket(0, 1)));

  // quotient by 0 is the identity projection
  QuotientData triv = quotient_algebra(*heis.algebra, Subspace(3));
  CHECK(triv.algebra->dim() == 3);
  CHECK(triv.projection == ExactMatrix::identity(3));

  CHECK_THROWS_WITH_AS(
      quotient_algebra(*heis.algebra, Subspace::span_of({heis.algebra->basis_vector(0)}, 3)),
      doctest::Contains("NotAnIdeal"), Error);
}

TEST_CASE("intermediate ideal validation") {
  Fixture heis = builtin_fixture("heisenberg3");
  CHECK_NOTHROW(validate_intermediate(*heis.algebra, heis.subgroups.at("N"), heis.levi));

  Fixture fil5 = builtin_fixture("filiform5");
  for (const auto& name : {"H2", "H3", "H4"})
    CHECK_NOTHROW(validate_intermediate(*fil5.algebra, fil5.subgroups.at(name), fil5.levi));

  CHECK_THROWS_WITH_AS(
      validate_intermediate(*fil5.algebra,
                            Subspace::span_of({fil5.algebra->basis_vector(0)}, 5), fil5.levi),
      doctest::Contains("NotAnIdeal"), Error);

  // an ideal too large to sit inside n
  CHECK_THROWS_WITH_AS(validate_intermediate(*fil5.algebra, Subspace::full(5), fil5.levi),
                       doctest::Contains("NotBetweenRadicals"), Error);

  Fixture six = builtin_fixture("sixdim");
  CHECK_NOTHROW(validate_intermediate(*six.algebra, six.subgroups.at("N"), six.levi));
  CHECK_NOTHROW(validate_intermediate(*six.algebra, six.subgroups.at("E"), six.levi));
}

TEST_CASE("bch small cases") {
  Fixture heis = builtin_fixture("heisenberg3");
  ExactVector x = scale(heis.algebra->basis_vector(0), q(3));
  ExactVector y = scale(heis.algebra->basis_vector(1), q(5));
  ExactVector z = bch(*heis.algebra, x, y);
  // a e1 + b e2 + (ab/2) e3
  ExactVector expected = add(add(x, y), scale(heis.algebra->basis_vector(2), q(15, 2)));
  CHECK(z == expected);

  CHECK(bch(*heis.algebra, x, heis.algebra->zero_vector()) == x);
  CHECK(is_zero(bch(*heis.algebra, x, scale(x, q(-1)))));
}
