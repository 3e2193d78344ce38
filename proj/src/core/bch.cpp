#include "core/bch.hpp"

#include "core/errors.hpp"

#include <functional>
#include <map>
#include <mutex>

namespace liedist {

namespace {

struct DynkinTerm {
  std::vector<bool> letters;  // true = x, false = y; left-to-right word
  Rational coeff;
};

// All sequences (p_1,q_1,...,p_n,q_n), p_i + q_i >= 1, of total degree <= c,
// with coefficient (-1)^{n-1} / (n * m * prod p_i! q_i!). Words whose last
// two letters agree are dropped (their nested bracket ends in [a, a] = 0).
std::vector<DynkinTerm> generate_terms(std::size_t c) {
  std::vector<DynkinTerm> terms;
  std::vector<std::pair<int, int>> blocks;

  auto factorial = [](int k) {
    long long f = 1;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
  };

  auto emit = [&]() {
    int n = static_cast<int>(blocks.size());
    int m = 0;
    long long denom_fact = 1;
    std::vector<bool> letters;
    for (auto [p, q] : blocks) {
      m += p + q;
      denom_fact *= factorial(p) * factorial(q);
      letters.insert(letters.end(), static_cast<std::size_t>(p), true);
      letters.insert(letters.end(), static_cast<std::size_t>(q), false);
    }
    if (m >= 2 && letters[m - 1] == letters[m - 2]) return;
    Rational coeff(static_cast<long long>((n % 2 == 1) ? 1 : -1),
                   static_cast<long long>(n) * m * denom_fact);
    terms.push_back({std::move(letters), std::move(coeff)});
  };

  std::function<void(int)> rec = [&](int total) {
    if (!blocks.empty()) emit();
    for (int p = 0; total + p <= static_cast<int>(c); ++p)
      for (int q = (p == 0 ? 1 : 0); total + p + q <= static_cast<int>(c); ++q) {
        blocks.emplace_back(p, q);
        rec(total + p + q);
        blocks.pop_back();
      }
  };
  rec(0);
  return terms;
}

const std::vector<DynkinTerm>& terms_for_class(std::size_t c) {
  static std::mutex mu;
  static std::map<std::size_t, std::vector<DynkinTerm>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(c);
  if (it == cache.end()) it = cache.emplace(c, generate_terms(c)).first;
  return it->second;
}

}  // namespace

ExactVector bch(const LieAlgebra& a, const ExactVector& x, const ExactVector& y,
                std::size_t nilpotency_class) {
  if (x.size() != a.dim() || y.size() != a.dim())
    throw validation_error("bch: dimension mismatch");
  ExactVector z(a.dim());
  if (is_zero(x)) return y;
  if (is_zero(y)) return x;
  for (const auto& term : terms_for_class(nilpotency_class)) {
    std::size_t m = term.letters.size();
    ExactVector v = term.letters[m - 1] ? x : y;
    bool vanished = false;
    for (std::size_t i = m - 1; i-- > 0;) {
      v = a.bracket(term.letters[i] ? x : y, v);
      if (is_zero(v)) {
        vanished = true;
        break;
      }
    }
    if (vanished) continue;
    z = add(z, scale(v, GaussianRational(term.coeff)));
  }
  return z;
}

ExactVector bch(const LieAlgebra& a, const ExactVector& x, const ExactVector& y) {
  return bch(a, x, y, nilpotency_class(a));
}

}  // namespace liedist
