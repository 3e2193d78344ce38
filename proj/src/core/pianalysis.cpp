#include "core/pianalysis.hpp"

#include "core/errors.hpp"
#include "core/rng.hpp"

#include <Eigen/QR>
#include <Eigen/SVD>

#include <cmath>

namespace liedist {

namespace {

ExactVector small_combination(SplitMix& rng, const Subspace& s) {
  // Coefficients from {±1, ±2}: keeps cross-term coefficients near unity
  // so growth transitions stay inside the first grid decade.
  ExactVector v(s.ambient_dim());
  for (const auto& b : s.basis()) {
    long long c = (rng.next() % 2 == 0 ? 1 : -1) * static_cast<long long>(1 + rng.next() % 2);
    v = add(v, scale(b, GaussianRational(Rational(c))));
  }
  return v;
}

struct Fit2 {
  double a = 0, b = 0, rms = 0;
};

Fit2 fit_line(const std::vector<double>& x, const std::vector<double>& v) {
  Fit2 f;
  std::size_t n = x.size();
  if (n < 2) return f;
  double sx = 0, sv = 0, sxx = 0, sxv = 0;
  for (std::size_t i = 0; i < n; ++i) {
    sx += x[i];
    sv += v[i];
    sxx += x[i] * x[i];
    sxv += x[i] * v[i];
  }
  double det = n * sxx - sx * sx;
  if (std::abs(det) < 1e-30) {
    f.b = sv / n;
  } else {
    f.a = (n * sxv - sx * sv) / det;
    f.b = (sv - f.a * sx) / n;
  }
  double ss = 0;
  for (std::size_t i = 0; i < n; ++i) {
    double r = v[i] - (f.a * x[i] + f.b);
    ss += r * r;
  }
  f.rms = std::sqrt(ss / n);
  return f;
}

}  // namespace

NilpotencyReport check_nilpotent_image(const MatrixRep& rep, const Subspace& nbasis,
                                       std::uint64_t seed, int extra_combinations) {
  NilpotencyReport report;
  std::vector<ExactVector> dirs = nbasis.basis();
  SplitMix rng(seed ^ 0x417B0ULL);
  for (int i = 0; i < extra_combinations && nbasis.dim() > 1; ++i) {
    ExactVector v = small_combination(rng, nbasis);
    if (!is_zero(v)) dirs.push_back(std::move(v));
  }
  for (const auto& dir : dirs) {
    DirectionNilpotency d;
    d.direction = dir;
    ExactMatrix m = rep.apply(dir);
    d.nilpotent = is_nilpotent_matrix(m);
    if (d.nilpotent) d.index = nilpotency_index(m);
    if (!d.nilpotent) report.all_nilpotent = false;
    report.directions.push_back(std::move(d));
  }
  return report;
}

PolyGrowthFit poly_growth_fit(const MatrixRep& rep, const ExactVector& eta,
                              const std::vector<double>& tgrid, double residual_threshold,
                              double stability_threshold) {
  PolyGrowthFit fit;
  ExactMatrix a = rep.apply(eta);
  Eigen::MatrixXcd ac = a.to_complex();
  double eta_norm = operator_norm(ac);
  bool nil = is_nilpotent_matrix(a);

  std::vector<double> x, v;
  for (double t : tgrid) {
    Eigen::MatrixXcd image;
    if (nil) {
      ExactMatrix e =
          exp_nilpotent(a.scaled(GaussianRational(rational_from_double(t))));
      image = e.to_complex();
    } else {
      // pre-check: ||t a|| beyond the exp range overflows
      if (t * eta_norm > 690.0) {
        fit.overflow_at = t;
        break;
      }
      image = exp_general((t * ac).eval());
    }
    if (!image.allFinite()) {
      fit.overflow_at = t;
      break;
    }
    double norm = operator_norm(image);
    if (!std::isfinite(norm) || norm <= 0.0) {
      fit.overflow_at = t;
      break;
    }
    x.push_back(std::log1p(t * eta_norm));
    v.push_back(std::log(norm));
  }
  fit.points_used = x.size();
  if (x.size() < 4) return fit;

  Fit2 full = fit_line(x, v);
  fit.alpha = full.a;
  fit.log_c = full.b;
  fit.residual = full.rms;

  std::size_t half = x.size() / 2;
  std::vector<double> x1(x.begin(), x.begin() + half), v1(v.begin(), v.begin() + half);
  std::vector<double> x2(x.begin() + half, x.end()), v2(v.begin() + half, v.end());
  fit.alpha_first_half = fit_line(x1, v1).a;
  fit.alpha_second_half = fit_line(x2, v2).a;

  bool zero_direction = eta_norm < 1e-300;
  if (zero_direction) {
    fit.alpha = 0.0;
    fit.log_c = 0.0;
    fit.polynomial = true;
    return fit;
  }
  bool stable = std::abs(fit.alpha_first_half - fit.alpha_second_half) <=
                stability_threshold * std::max(1.0, std::abs(fit.alpha));
  fit.polynomial = fit.residual < residual_threshold && stable;
  return fit;
}

ExdiVerdict exdi_verdict(const Fixture& fixture, const Subspace& n,
                         const std::vector<double>& tgrid, std::uint64_t seed) {
  ExdiVerdict verdict;
  // nilpotency is exact, so random combinations are free; growth fits run
  // on the coordinate rays, where the least-squares model is meaningful
  verdict.nilpotency = check_nilpotent_image(*fixture.rep, n, seed);
  bool all_poly = true;
  for (const auto& d : n.basis()) {
    PolyGrowthFit fit = poly_growth_fit(*fixture.rep, d, tgrid);
    if (!fit.polynomial) all_poly = false;
    verdict.ray_fits.push_back(std::move(fit));
  }
  verdict.consistent_with_pi = verdict.nilpotency.all_nilpotent && all_poly;
  return verdict;
}

WitnessFunctional witness_functional(const Eigen::MatrixXcd& a) {
  if (a.norm() == 0.0) throw validation_error("ZeroInput");
  Eigen::Index d = a.rows();

  // powers 1, a, ..., a^{m-1} with a^m = 0
  std::vector<Eigen::MatrixXcd> powers;
  Eigen::MatrixXcd p = Eigen::MatrixXcd::Identity(d, d);
  while (p.norm() > 0.0) {
    if (powers.size() > static_cast<std::size_t>(d))
      throw validation_error("witness_functional: input is not nilpotent");
    powers.push_back(p);
    p = p * a;
  }
  std::size_t m = powers.size();

  double target = operator_norm(a);
  Eigen::MatrixXcd constraints(powers.size(), d * d);
  Eigen::VectorXcd rhs = Eigen::VectorXcd::Zero(powers.size());
  for (std::size_t k = 0; k < powers.size(); ++k) {
    Eigen::MatrixXcd pk = powers[k];
    constraints.row(static_cast<Eigen::Index>(k)) =
        Eigen::Map<Eigen::VectorXcd>(pk.data(), pk.size()).adjoint();
    rhs(static_cast<Eigen::Index>(k)) = (k == 1) ? target : 0.0;
  }
  Eigen::VectorXcd x = constraints.completeOrthogonalDecomposition().solve(rhs);

  WitnessFunctional w;
  w.f = Eigen::Map<Eigen::MatrixXcd>(x.data(), d, d);
  w.nil_index = m;
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(w.f);
  w.norm = svd.singularValues().sum();  // nuclear norm, dual to spectral

  Eigen::MatrixXcd ea = exp_general(a);
  std::complex<double> pairing = (w.f.adjoint() * ea).trace();
  w.pairing_check = std::abs(pairing - std::complex<double>(target, 0.0));
  return w;
}

LowerBoundReport lower_bound_check(const MatrixRepPtr& rep, const Subspace& nprime,
                                   const std::vector<double>& tgrid, std::uint64_t seed) {
  LowerBoundReport report;
  std::vector<ExactVector> dirs = nprime.basis();
  SplitMix rng(seed ^ 0x10B0ULL);
  for (int i = 0; i < 2 && nprime.dim() > 1; ++i) {
    ExactVector v = small_combination(rng, nprime);
    if (!is_zero(v)) dirs.push_back(std::move(v));
  }
  LengthFunction sym = LengthFunction::pi_sym(rep);
  for (const auto& dir : dirs) {
    RayLowerBound ray;
    ray.direction = dir;
    Eigen::MatrixXcd a = rep->apply(dir).to_complex();
    double anorm = operator_norm(a);
    if (anorm == 0.0) continue;
    WitnessFunctional w = witness_functional(a);
    ray.witness_norm = w.norm;
    ray.d1 = std::log1p(w.norm);

    std::vector<double> xs, vs;
    double min_margin = std::numeric_limits<double>::infinity();
    for (double t : tgrid) {
      GroupElement g =
          GroupElement::exp_of(rep, scale(dir, GaussianRational(rational_from_double(t))));
      double v = sym(g);
      if (!std::isfinite(v)) break;
      double lhs = std::log1p(t * anorm);
      min_margin = std::min(min_margin, v + ray.d1 - lhs);
      xs.push_back(lhs);
      vs.push_back(v);
    }
    ray.min_margin = min_margin;
    ray.holds = min_margin >= -1e-9;
    Fit2 upper = fit_line(xs, vs);
    ray.c2 = upper.a;
    ray.d2 = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i)
      ray.d2 = std::max(ray.d2, vs[i] - ray.c2 * xs[i]);
    if (!ray.holds) report.all_hold = false;
    report.rays.push_back(std::move(ray));
  }
  return report;
}

}  // namespace liedist
