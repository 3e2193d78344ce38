#include "core/errors.hpp"
#include "core/fixtures.hpp"
#include "core/pianalysis.hpp"
#include "core/rng.hpp"

#include <doctest.h>

#include <cmath>

using namespace liedist;

namespace {

GaussianRational q(long long num, long long den = 1) {
  return GaussianRational(Rational(num, den));
}

}  // namespace

TEST_CASE("nilpotent image checks are exact") {
  Fixture heis = builtin_fixture("heisenberg3");
  NilpotencyReport r = check_nilpotent_image(*heis.rep, heis.subgroups.at("N"));
  CHECK(r.all_nilpotent);
  REQUIRE(r.directions.size() == 1);
  CHECK(r.directions[0].index == 2);

  NilpotencyReport full = check_nilpotent_image(*heis.rep, Subspace::full(3));
  CHECK(full.all_nilpotent);
  for (const auto& d : full.directions) CHECK(d.index <= 3);

  // abelian fixture: n = 0, vacuously nilpotent
  Fixture cg = builtin_fixture("cgroup");
  NilpotencyReport empty = check_nilpotent_image(*cg.rep, cg.subgroups.at("N"));
  CHECK(empty.all_nilpotent);
  CHECK(empty.directions.empty());

  // the affine direction x has a non-nilpotent image
  Fixture aff = builtin_fixture("affine2");
  NilpotencyReport bad =
      check_nilpotent_image(*aff.rep, Subspace::span_of({aff.algebra->basis_vector(0)}, 2));
  CHECK(!bad.all_nilpotent);
}

TEST_CASE("polynomial growth fits") {
  Fixture heis = builtin_fixture("heisenberg3");
  auto grid = std::vector<double>{};
  for (int i = 0; i < 33; ++i) grid.push_back(std::pow(10.0, 6.0 * i / 32.0));

  PolyGrowthFit zero = poly_growth_fit(*heis.rep, heis.algebra->zero_vector(), grid);
  CHECK(zero.polynomial);
  CHECK(zero.alpha == doctest::Approx(0.0));
  CHECK(std::exp(zero.log_c) == doctest::Approx(1.0));

  PolyGrowthFit central = poly_growth_fit(*heis.rep, heis.algebra->basis_vector(2), grid);
  CHECK(central.polynomial);
  CHECK(central.alpha == doctest::Approx(1.0).epsilon(0.05));

  // diagonal exponential direction: plainly non-polynomial, overflow capped
  Fixture cg = builtin_fixture("cgroup");
  PolyGrowthFit expfit = poly_growth_fit(*cg.rep, cg.algebra->basis_vector(0), grid);
  CHECK(!expfit.polynomial);
  CHECK(std::isfinite(expfit.overflow_at));
  CHECK(expfit.points_used >= 4);
}

TEST_CASE("exdi verdicts") {
  auto grid = std::vector<double>{};
  for (int i = 0; i < 33; ++i) grid.push_back(std::pow(10.0, 6.0 * i / 32.0));

  for (const auto& name : {"heisenberg3", "filiform5", "sixdim", "affine2"}) {
    CAPTURE(name);
    Fixture f = builtin_fixture(name);
    Subspace n = nilpotent_radical(*f.algebra);
    ExdiVerdict v = exdi_verdict(f, n, grid);
    CHECK(v.consistent_with_pi);
  }

  // a subspace mislabeled as the nilpotent radical is flagged
  Fixture aff = builtin_fixture("affine2");
  ExdiVerdict flagged =
      exdi_verdict(aff, Subspace::span_of({aff.algebra->basis_vector(0)}, 2), grid);
  CHECK(!flagged.consistent_with_pi);
}

TEST_CASE("witness functional on a rank-one nilpotent") {
  Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(3, 3);
  a(0, 2) = 1.0;
  WitnessFunctional w = witness_functional(a);
  CHECK(w.nil_index == 2);
  CHECK(std::abs((w.f.adjoint() * Eigen::MatrixXcd::Identity(3, 3)).trace()) < 1e-12);
  CHECK(std::abs((w.f.adjoint() * a).trace() - std::complex<double>(1, 0)) < 1e-12);
  CHECK(w.norm == doctest::Approx(1.0));
  CHECK(w.pairing_check < 1e-12);

  // scaling: the recomputed functional pairs to |t| * ||a||
  WitnessFunctional w2 = witness_functional((2.0 * a).eval());
  CHECK(std::abs((w2.f.adjoint() * (2.0 * a)).trace() - std::complex<double>(2, 0)) < 1e-12);

  CHECK_THROWS_WITH_AS(witness_functional(Eigen::MatrixXcd::Zero(3, 3)),
                       doctest::Contains("ZeroInput"), Error);
  CHECK_THROWS(witness_functional(Eigen::MatrixXcd::Identity(2, 2)));
}

TEST_CASE("witness pairing on random nilpotent matrices") {
  SplitMix rng(31415);
  for (int trial = 0; trial < 100; ++trial) {
    Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(4, 4);
    bool nonzero = false;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) {
        a(i, j) = std::complex<double>(2 * rng.next_unit() - 1, 2 * rng.next_unit() - 1);
        nonzero = true;
      }
    if (!nonzero) continue;
    WitnessFunctional w = witness_functional(a);
    CHECK(w.pairing_check <= 1e-9 * std::max(1.0, operator_norm(a)));
  }
}

TEST_CASE("logarithmic lower bound holds on sampled rays") {
  auto grid = std::vector<double>{};
  for (int i = 0; i < 33; ++i) grid.push_back(std::pow(10.0, 6.0 * i / 32.0));

  Fixture heis = builtin_fixture("heisenberg3");
  LowerBoundReport r = lower_bound_check(heis.rep, heis.subgroups.at("N"), grid);
  CHECK(r.all_hold);
  REQUIRE(!r.rays.empty());
  for (const auto& ray : r.rays) {
    CHECK(ray.holds);
    CHECK(ray.min_margin >= -1e-9);
    CHECK(std::isfinite(ray.c2));
    // two-sided certificate: the upper fit stays close to 2x the log model
    CHECK(ray.c2 <= 3.0);
  }

  Fixture fil = builtin_fixture("filiform5");
  LowerBoundReport rf = lower_bound_check(fil.rep, fil.subgroups.at("H3"), grid);
  CHECK(rf.all_hold);

  Fixture six = builtin_fixture("sixdim");
  LowerBoundReport rs = lower_bound_check(six.rep, six.subgroups.at("N"), grid);
  CHECK(rs.all_hold);
}
