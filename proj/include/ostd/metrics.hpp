#pragma once

#include "ostd/tensor.hpp"

namespace ostd {

struct ScoreOptions {
  /// Tensor order; controls the (-lambda, -x) sign equivalence for odd
  /// orders.
  int order = 3;
  /// Assignment maximization is exact (exhaustive) up to this many truth
  /// columns, greedy above it.
  int max_exhaustive_p = 8;
};

/// Rescales each factor column to unit norm, multiplying its weight by
/// norm^m so the reconstructed tensor is unchanged. Throws on zero columns.
FactorDecomposition normalize_columns(const FactorDecomposition& d, int order);

/// |A - sum_k lambda_k x_k^m| / |A|. Throws ZeroTensor when |A| = 0.
double relative_error(const SymmetricTensor& a, const FactorDecomposition& d);

/// Per-factor agreement between a computed and a true decomposition,
/// maximized over injective assignments of truth columns to computed
/// columns: mean over matched pairs of
///   (1 - |lambda - lambda*| / max(|lambda|, |lambda*|)) * |x' x*|.
/// Surplus computed columns are ignored; unmatched truth columns contribute
/// zero. For odd orders each pair is also tried with the equivalent
/// (-lambda, -x) flip. Result is clamped to [0, 1]; 1 means a perfect match
/// up to permutation and sign equivalences.
double solution_score(const FactorDecomposition& computed,
                      const FactorDecomposition& truth,
                      const ScoreOptions& opts);

}  // namespace ostd
