#pragma once

#include "core/lie_algebra.hpp"

namespace liedist {

/// z with exp(x) exp(y) = exp(z) in a nilpotent algebra, computed as the
/// Dynkin series truncated at the nilpotency class (exact: all higher
/// terms vanish). The class is computed by the caller, never assumed.
ExactVector bch(const LieAlgebra& a, const ExactVector& x, const ExactVector& y,
                std::size_t nilpotency_class);

/// Convenience wrapper that computes the class (throws NotNilpotent).
ExactVector bch(const LieAlgebra& a, const ExactVector& x, const ExactVector& y);

}  // namespace liedist
