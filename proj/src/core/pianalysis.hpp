#pragma once

#include "core/length.hpp"

#include <limits>

namespace liedist {

struct DirectionNilpotency {
  ExactVector direction;
  bool nilpotent = false;
  std::size_t index = 0;  // smallest m with rho(eta)^m = 0
};

struct NilpotencyReport {
  std::vector<DirectionNilpotency> directions;
  bool all_nilpotent = true;
};

/// Exact check rho(eta)^d = 0 for every basis vector of the subspace and a
/// deterministic set of random small-integer combinations.
NilpotencyReport check_nilpotent_image(const MatrixRep& rep, const Subspace& nbasis,
                                       std::uint64_t seed = 0, int extra_combinations = 4);

struct PolyGrowthFit {
  double alpha = 0.0;
  double log_c = 0.0;
  double residual = 0.0;  // RMS in log units
  double alpha_first_half = 0.0;
  double alpha_second_half = 0.0;
  bool polynomial = false;
  double overflow_at = std::numeric_limits<double>::infinity();
  std::size_t points_used = 0;
};

/// Least-squares fit of log ||exp(rho(t eta))|| against
/// alpha * log(1 + |t eta|) + log C, with |.| = spectral norm of the image.
/// Polynomial verdict requires the residual below the threshold and a
/// stable exponent across grid halves.
PolyGrowthFit poly_growth_fit(const MatrixRep& rep, const ExactVector& eta,
                              const std::vector<double>& tgrid, double residual_threshold = 0.1,
                              double stability_threshold = 0.3);

struct ExdiVerdict {
  NilpotencyReport nilpotency;
  std::vector<PolyGrowthFit> ray_fits;
  bool consistent_with_pi = false;
};

/// Combines exact image nilpotency on n with polynomial growth along
/// n-rays; the expected outcome for every finite-dimensional realization.
ExdiVerdict exdi_verdict(const Fixture& fixture, const Subspace& n,
                         const std::vector<double>& tgrid, std::uint64_t seed = 0);

struct WitnessFunctional {
  Eigen::MatrixXcd f;     // pairing <f, M> = tr(f^H M)
  double norm = 0.0;      // nuclear norm: the dual of the spectral norm
  std::size_t nil_index = 0;
  double pairing_check = 0.0;  // | <f, e^a> - ||a|| |
};

/// Linear functional with <f, 1> = 0, <f, a> = ||a||, <f, a^k> = 0 for
/// k > 1 (least-norm solution); certifies <f, e^a> = ||a||.
WitnessFunctional witness_functional(const Eigen::MatrixXcd& a);

struct RayLowerBound {
  ExactVector direction;
  double witness_norm = 0.0;     // ||f|| of the ray's witness
  double min_margin = 0.0;       // min over grid of rhs - lhs
  bool holds = false;
  // combined two-sided constants for ell_pi_sym(exp(t eta)) against
  // log(1 + t |eta|): lower (1, d1), upper (c2, d2)
  double d1 = 0.0, c2 = 0.0, d2 = 0.0;
};

struct LowerBoundReport {
  std::vector<RayLowerBound> rays;
  bool all_hold = true;
};

/// Checks log(1+|eta|) <= ell_pi_sym(exp(eta)) + log(1+||f||) on sampled
/// rays of n', and reports the combined strict-distortion constants.
LowerBoundReport lower_bound_check(const MatrixRepPtr& rep, const Subspace& nprime,
                                   const std::vector<double>& tgrid, std::uint64_t seed = 0);

}  // namespace liedist
