#include "core/sampler.hpp"

#include <cmath>

namespace liedist {

Rational sample_magnitude(SplitMix& rng, double scale) {
  double u = rng.next_unit();
  double t = std::pow(std::max(scale, 1.0), u);
  // Dyadic snap keeps the value exactly representable.
  double snapped = std::max(1.0, std::round(t * 4096.0) / 4096.0);
  return rational_from_double(snapped);
}

GaussianRational sample_phase(SplitMix& rng) {
  static const GaussianRational table[8] = {
      GaussianRational(Rational(1), Rational(0)),
      GaussianRational(Rational(0), Rational(1)),
      GaussianRational(Rational(-1), Rational(0)),
      GaussianRational(Rational(0), Rational(-1)),
      GaussianRational(Rational(3, 5), Rational(4, 5)),
      GaussianRational(Rational(-4, 5), Rational(3, 5)),
      GaussianRational(Rational(5, 13), Rational(-12, 13)),
      GaussianRational(Rational(-8, 17), Rational(-15, 17)),
  };
  return table[rng.next() % 8];
}

ExactVector sample_in_subspace(SplitMix& rng, const Subspace& s) {
  ExactVector v(s.ambient_dim());
  for (const auto& b : s.basis()) {
    long long num = static_cast<long long>(rng.next() % 9) - 4;  // -4..4
    long long den = 1 + static_cast<long long>(rng.next() % 4);
    if (num == 0) continue;
    v = add(v, scale(b, GaussianRational(Rational(num, den))));
  }
  return v;
}

std::vector<FitSample> stratified_samples(const MatrixRepPtr& rep, const StratifiedOptions& opts) {
  SplitMix rng(opts.seed ^ 0x57A7ULL);
  std::size_t n = rep->algebra()->dim();
  std::vector<bool> unipotent_dir(n);
  for (std::size_t i = 0; i < n; ++i)
    unipotent_dir[i] = is_nilpotent_matrix(rep->apply(rep->algebra()->basis_vector(i)));

  auto band_magnitude = [&](SplitMix& r, int k, bool unipotent) {
    double lo = std::pow(10.0, std::max(0.0, k - 0.5));
    double hi = std::pow(10.0, k + 0.5);
    double t = lo * std::pow(hi / lo, r.next_unit());
    if (!unipotent) t = std::min(t, opts.nonunipotent_scale_cap);
    t = std::max(1.0, std::round(t * 4096.0) / 4096.0);
    return rational_from_double(t);
  };

  static const GaussianRational sign_phases[4] = {
      GaussianRational(Rational(1), Rational(0)), GaussianRational(Rational(-1), Rational(0)),
      GaussianRational(Rational(0), Rational(1)), GaussianRational(Rational(0), Rational(-1))};

  std::vector<FitSample> out;
  for (int k = 0; k < opts.strata; ++k) {
    if (opts.products) {
      for (std::size_t s = 0; s < opts.products_per_stratum; ++s) {
        std::size_t letters =
            opts.min_letters + rng.next() % (opts.max_letters - opts.min_letters + 1);
        GroupElement g = GroupElement::identity(rep);
        for (std::size_t l = 0; l < letters; ++l) {
          std::size_t dir = rng.next() % n;
          GaussianRational t =
              GaussianRational(band_magnitude(rng, k, unipotent_dir[dir])) * sample_phase(rng);
          g = GroupElement::product(
              g, GroupElement::exp_of(rep, scale(rep->algebra()->basis_vector(dir), t)));
        }
        out.push_back({std::move(g), k});
      }
    }
    for (std::size_t dir = 0; dir < n; ++dir)
      for (int ph = 0; ph < 4; ++ph)
        for (std::size_t rp = 0; rp < opts.ray_points_per_stratum; ++rp) {
          GaussianRational t =
              GaussianRational(band_magnitude(rng, k, unipotent_dir[dir])) * sign_phases[ph];
          out.push_back({GroupElement::exp_of(rep, scale(rep->algebra()->basis_vector(dir), t)), k});
        }
  }
  return out;
}

std::vector<GroupElement> sample_elements(const MatrixRepPtr& rep, const SampleOptions& opts) {
  SplitMix rng(opts.seed ^ 0x5A3D1EULL);
  std::size_t n = rep->algebra()->dim();

  std::vector<bool> unipotent_dir(n);
  for (std::size_t i = 0; i < n; ++i)
    unipotent_dir[i] = is_nilpotent_matrix(rep->apply(rep->algebra()->basis_vector(i)));

  std::vector<GroupElement> out;
  out.reserve(opts.count);
  for (std::size_t k = 0; k < opts.count; ++k) {
    std::size_t letters =
        opts.min_letters + rng.next() % (opts.max_letters - opts.min_letters + 1);
    GroupElement g = GroupElement::identity(rep);
    for (std::size_t l = 0; l < letters; ++l) {
      std::size_t dir = rng.next() % n;
      double scale_here =
          unipotent_dir[dir] ? opts.scale : std::min(opts.scale, opts.nonunipotent_scale_cap);
      GaussianRational t = GaussianRational(sample_magnitude(rng, scale_here)) * sample_phase(rng);
      g = GroupElement::product(
          g, GroupElement::exp_of(rep, scale(rep->algebra()->basis_vector(dir), t)));
    }
    out.push_back(std::move(g));
  }
  return out;
}

}  // namespace liedist
