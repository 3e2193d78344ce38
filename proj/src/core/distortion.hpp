#pragma once

#include "core/length.hpp"
#include "core/sampler.hpp"

#include <limits>
#include <optional>

namespace liedist {

std::vector<double> default_tgrid(double tmax = 1e6, int points = 33);

/// Values of a length function along exp(t * eta) over a log-spaced grid,
/// together with the logarithmic reference curve. Non-finite values (norm
/// overflow) truncate the profile; `overflow_at` records the first
/// unusable t.
struct RayProfile {
  ExactVector direction;
  std::vector<double> tgrid;
  std::vector<double> values;
  std::vector<double> ref_log;  // log(1 + t * |eta|)
  double overflow_at = std::numeric_limits<double>::infinity();
};

RayProfile ray_profile(const LengthFunction& ell, const MatrixRepPtr& rep,
                       const ExactVector& eta, const std::vector<double>& tgrid);

enum class DistortionKind { logarithmic, power, other };

struct DistortionVerdict {
  DistortionKind kind = DistortionKind::other;
  double model_power = 0.0;     // the matched candidate p (power verdicts)
  double fitted_exponent = 0.0; // log-log slope over the top decades
  double log_residual = 0.0;
  double power_residual = 0.0;
  double threshold = 0.0;
};

/// Compares the normalized residual of the log model against power models
/// t^p for the candidate exponents; "other" when nothing fits.
DistortionVerdict classify_distortion(const RayProfile& p,
                                      const std::vector<double>& candidate_powers,
                                      double threshold = 0.1);

/// Candidate exponents {1, 1/2, ..., 1/(n-1)}.
std::vector<double> weight_power_candidates(std::size_t n);

struct DominationFit {
  bool success = false;
  double C = 0.0;
  double D = 0.0;
  std::vector<double> strata_C;  // per scale-stratum max of (la - D0)/max(lb, 1)
  double strata_slope = 0.0;     // slope of log C_s; growth means failure
  std::size_t samples_used = 0;
};

/// Fits minimal C then D with la <= C * lb + D over the sample set;
/// fails when the per-stratum C keeps growing across the sampling scales
/// (slope test on log C_s).
DominationFit dominates(const LengthFunction& la, const LengthFunction& lb,
                        const std::vector<FitSample>& samples, double slope_threshold = 0.3);

/// Same fit on precomputed value pairs tagged with scale strata.
DominationFit dominates_values(const std::vector<double>& va, const std::vector<double>& vb,
                               const std::vector<int>& strata, double slope_threshold = 0.3);

struct SeparationWitness {
  ExactVector direction;  // in the first ideal, outside the second, inside h
  std::size_t weight = 0; // filtration depth of its image in b/n_second
  DistortionVerdict under_phi_first;   // expected logarithmic
  DistortionVerdict under_phi_second;  // expected power(1/weight)
  bool consistent = false;
};

struct SeparationReport {
  bool n1_subset_n2 = false;
  bool n2_subset_n1 = false;
  DominationFit phi2_by_phi1;  // phi2 ≲ phi1, expected iff n1 ⊆ n2
  DominationFit phi1_by_phi2;  // phi1 ≲ phi2, expected iff n2 ⊆ n1
  std::optional<SeparationWitness> witness_n1_not_in_n2;
  std::optional<SeparationWitness> witness_n2_not_in_n1;
  bool consistent = false;
};

/// Realizes the order test: the domination relation between the maximal
/// functions of two intermediate ideals reverses inclusion, with an
/// explicit witness direction when an inclusion fails.
SeparationReport separation_test(const Fixture& fixture, const Subspace& n1, const Subspace& n2,
                                 const std::vector<FitSample>& samples, double tmax = 1e6,
                                 int grid_points = 33);

struct MaximalityEntry {
  std::string name;
  bool certified = false;  // exponentially distorted on n' (gate)
  DominationFit fit;       // against phi
};

struct MaximalityReport {
  std::vector<MaximalityEntry> entries;
  bool all_dominated = true;
};

/// Gate each catalog member by classifying its n'-rays, then fit it
/// against phi.
MaximalityReport maximality_suite(const DecompositionContextPtr& ctx, const LengthFunction& phi,
                                  const std::vector<std::pair<std::string, LengthFunction>>& catalog,
                                  const std::vector<FitSample>& samples, double tmax = 1e6,
                                  int grid_points = 33);

}  // namespace liedist
