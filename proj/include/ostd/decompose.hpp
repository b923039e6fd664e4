#pragma once

#include <optional>
#include <variant>

#include "ostd/linalg.hpp"
#include "ostd/rng.hpp"
#include "ostd/tensor.hpp"

namespace ostd {

struct OstdOptions {
  /// Apply a random orthonormal projection before slicing, undone on the
  /// recovered factors. Guards against non-generic inputs.
  bool randomize = false;
  /// An eigenvalue of the slice mix counts as nonzero if |sigma| > this.
  double nonzero_tol = 1e-10;
  /// Fixed slice coefficients instead of a random draw. Demo/test hook for
  /// exhibiting degenerate single-slice choices; whitened_ostd rejects it
  /// because its coefficients live at the whitened dimension.
  std::optional<CoefficientTensor> coefficients;
};

struct WhitenOptions {
  OstdOptions base;
  /// Budget of coefficient draws when searching for a p.s.d. slice mix.
  int max_psd_attempts = 100;
  /// A slice mix is p.s.d. if its smallest eigenvalue is > -psd_tol; the
  /// skinny decomposition keeps eigenvalues > psd_tol.
  double psd_tol = 1e-10;
};

struct WhitenReport {
  FactorDecomposition decomposition;
  /// Coefficient draws consumed before a p.s.d. slice mix was found.
  int psd_attempts = 0;
  /// Dimension of the whitened problem (rank of the accepted slice mix).
  int whitened_dim = 0;
  /// Diagnostics: whitening matrix W (p x n) and the accepted slice mix C,
  /// satisfying W C W' = I_p.
  Matrix whitening;
  Matrix slice_mix;
};

struct WhiteningFailure {
  int attempts = 0;
};

using WhitenResult = std::variant<WhitenReport, WhiteningFailure>;

/// (m-2)-way coefficient array with entries drawn i.i.d. uniform on [0,1]
/// and then normalized to sum to one.
CoefficientTensor random_coefficients(int order, int dim, RngEngine& rng);

/// Orthogonal symmetric tensor decomposition via a single n x n symmetric
/// matrix eigenproblem. Requires order >= 3 and an input that actually
/// admits an orthogonal decomposition; a wrong input silently yields a
/// decomposition with a large residual, so callers should check
/// relative_error. Output factors are orthonormal and ordered by
/// descending |sigma| of the slice-mix eigenvalues.
FactorDecomposition ostd(const SymmetricTensor& a, const OstdOptions& opts,
                         RngEngine& rng);

/// Whitening extension for full-column-rank, non-orthogonal factor
/// matrices: searches for a p.s.d. slice combination C, whitens the tensor
/// with W = D^{-1/2} U' from C's skinny decomposition, solves the orthogonal
/// problem at the reduced dimension, and maps the factors back. Returns
/// WhiteningFailure if no p.s.d. C is found within the attempt budget. A
/// rank-deficient C (rank < true rank) is a soft failure detectable only
/// through the residual.
WhitenResult whitened_ostd(const SymmetricTensor& a, const WhitenOptions& opts,
                           RngEngine& rng);

}  // namespace ostd
