#pragma once

#include "core/tridecomp.hpp"

#include <json.hpp>

#include <functional>
#include <string>

namespace liedist {

/// max_k |t_k|^{1/w_k}; the word-length asymptotics of a simply connected
/// nilpotent group in filtration coordinates.
double word_length_nilpotent(const Eigen::VectorXcd& coords,
                             const std::vector<std::size_t>& weights);

/// Combinator tree recording how an evaluator was built, serialized into
/// reports for reproducibility.
struct Provenance {
  std::string op;
  nlohmann::json params = nlohmann::json::object();
  std::vector<Provenance> children;

  nlohmann::json to_json() const;
};

/// The vetted family for composition: subadditive increasing continuous
/// f with f(0) = 0.
struct VettedFunction {
  enum class Kind { log1p, power, cap } kind;
  double param = 1.0;  // alpha for power (in (0,1]), c for cap (> 0)

  double operator()(double x) const;
  static VettedFunction log1p() { return {Kind::log1p, 0.0}; }
  static VettedFunction power(double alpha);
  static VettedFunction cap(double c);
  nlohmann::json to_json() const;
};

/// An evaluable length function with provenance and subadditivity /
/// symmetry flags. Evaluation is pure; handles are cheap to copy.
class LengthFunction {
 public:
  LengthFunction() = default;

  double operator()(const GroupElement& g) const { return eval_(g); }

  bool symmetric() const { return symmetric_; }
  bool exactly_subadditive() const { return exactly_subadditive_; }
  const Provenance& provenance() const { return provenance_; }

  static LengthFunction zero();

  /// Arbitrary evaluator; used for reference formulas in suites and tests.
  static LengthFunction custom(std::function<double(const GroupElement&)> eval,
                               const std::string& label, bool symmetric = false,
                               bool exactly_subadditive = false);

  /// log ||pi(g)|| in the spectral norm.
  static LengthFunction pi(MatrixRepPtr rep);

  /// log ||pi(g)|| + log ||pi(g^-1)||; symmetric and exactly subadditive.
  static LengthFunction pi_sym(MatrixRepPtr rep);

  /// g -> f(ell(g)) for vetted f; keeps the subadditivity flag.
  static LengthFunction compose_f(const LengthFunction& ell, const VettedFunction& f);

  static LengthFunction sum(const LengthFunction& a, const LengthFunction& b);
  static LengthFunction max(const LengthFunction& a, const LengthFunction& b);

  /// ell(g) + ell(g^-1).
  static LengthFunction symmetrize(const LengthFunction& ell);

  /// Pullback through the quotient map realized by a decomposition
  /// context: g -> quotient_ell(log coordinates of tau(g)). Vanishes on
  /// the kernel subgroup.
  static LengthFunction pullback(DecompositionContextPtr ctx,
                                 std::function<double(const Eigen::VectorXcd&)> quotient_ell,
                                 const std::string& label);

  /// Word proxy max |t_k|^{1/w_k} in global first-kind coordinates; only
  /// valid on fixtures whose realization is unipotent.
  static LengthFunction word_proxy(const Fixture& fixture);

  /// phi(g) = log(1 + |eta|) + ell1(tau(exp xi)) + ell2(l): the maximal
  /// function attached to the intermediate ideal of the context. ell1 is
  /// the filtration word proxy on b/n'; ell2 the reductive log-norm proxy.
  static LengthFunction phi(DecompositionContextPtr ctx);

  /// ell' = pullback of the symmetric quotient word proxy + pi_sym;
  /// subadditive representative of phi's class. Requires a faithful rep.
  static LengthFunction ell_prime(DecompositionContextPtr ctx);

 private:
  std::function<double(const GroupElement&)> eval_;
  Provenance provenance_;
  bool symmetric_ = false;
  bool exactly_subadditive_ = false;
};

/// Euclidean norm of an exact vector in the ambient fixture basis.
double euclidean_norm(const ExactVector& v);

/// First-kind coordinates of g (the exact log through the realization);
/// requires a unipotent realization.
ExactVector global_log_coordinates(const GroupElement& g);

}  // namespace liedist
