#pragma once

#include "core/distortion.hpp"
#include "core/io.hpp"
#include "core/pianalysis.hpp"

namespace liedist {

struct SuiteParams {
  std::uint64_t seed = 1729;
  double tmax = 1e6;
  int grid_points = 33;
  double threshold = 0.1;
  std::size_t samples = 1000;        // decomposition round-trip count
  std::size_t pairs = 1000;          // bch oracle pairs
  std::size_t subadd_pairs = 10000;  // subadditivity pairs
  std::size_t products_per_stratum = 40;
};

struct SuiteResult {
  bool pass = false;
  nlohmann::json report;
};

/// Named suites: pi, distortion, maximality, separation, decomposition.
/// Throws SuiteUnknown (configuration) for anything else.
SuiteResult run_suite(const Fixture& f, const std::string& suite, const SuiteParams& p);

std::vector<std::string> suite_names();

/// Subgroup entries of the fixture that validate as intermediate ideals
/// (e ⊆ n' ⊆ n), sorted by name.
std::vector<std::pair<std::string, Subspace>> intermediate_subgroups(const Fixture& f);

/// The standard catalog fitted against phi in the maximality suite.
std::vector<std::pair<std::string, LengthFunction>> standard_catalog(
    const DecompositionContextPtr& ctx);

/// Stratified fit samples with the suite's conventions.
std::vector<FitSample> fit_samples(const Fixture& f, const SuiteParams& p);

nlohmann::json report_envelope(const Fixture& f, const std::string& suite, const SuiteParams& p);

nlohmann::json domination_to_json(const DominationFit& fit);
nlohmann::json verdict_to_json(const DistortionVerdict& v);

}  // namespace liedist
