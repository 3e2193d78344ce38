#pragma once

#include "core/matrix_rep.hpp"
#include "core/rng.hpp"

namespace liedist {

/// Log-uniform magnitude in [1, scale], snapped to a dyadic rational so
/// that downstream arithmetic stays exact.
Rational sample_magnitude(SplitMix& rng, double scale);

/// Unit-modulus Gaussian rational (Pythagorean phases), uniform over a
/// fixed table of 8 directions.
GaussianRational sample_phase(SplitMix& rng);

/// Random small-rational coefficient vector inside a subspace (exact).
ExactVector sample_in_subspace(SplitMix& rng, const Subspace& s);

struct SampleOptions {
  std::uint64_t seed = 0;
  std::size_t count = 0;
  double scale = 1e3;
  std::size_t min_letters = 1;
  std::size_t max_letters = 6;
  /// Magnitude cap applied on directions whose image is not nilpotent;
  /// keeps exp entries within double range.
  double nonunipotent_scale_cap = 50.0;
};

/// Products of exp(t * rho(e_i)) for random basis directions and
/// log-uniform t; deterministic given the seed. Construction words are
/// recorded on the elements.
std::vector<GroupElement> sample_elements(const MatrixRepPtr& rep, const SampleOptions& opts);

/// A sample tagged with the decade band of the magnitudes it was built
/// from. Domination fits stratify by this tag.
struct FitSample {
  GroupElement g;
  int stratum;
};

struct StratifiedOptions {
  std::uint64_t seed = 1729;
  int strata = 7;  // decade bands 10^0 .. 10^{strata-1}
  std::size_t products_per_stratum = 60;
  std::size_t ray_points_per_stratum = 1;  // per basis direction and sign-phase
  std::size_t min_letters = 1;
  std::size_t max_letters = 5;
  double nonunipotent_scale_cap = 50.0;
  bool products = true;  // coordinate rays only when false
};

/// Product samples plus coordinate-ray samples in each decade band.
std::vector<FitSample> stratified_samples(const MatrixRepPtr& rep, const StratifiedOptions& opts);

}  // namespace liedist
