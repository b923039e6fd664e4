#pragma once

#include <optional>

#include "ostd/rng.hpp"
#include "ostd/tensor.hpp"

namespace ostd {

/// Spectral decomposition of a symmetric matrix. Values are sorted
/// descending (ties broken by the solver's original column index) and each
/// vector's sign is fixed so its largest-magnitude component is positive,
/// which makes output deterministic across platforms. `vectors` may hold
/// fewer than n columns after filtering.
struct EigenSystem {
  Vector values;
  Matrix vectors;  // column k pairs with values[k]

  int count() const noexcept { return static_cast<int>(values.size()); }
};

/// Orthonormal basis and positive weights kept by the p.s.d. filter:
/// C ~ u * d.asDiagonal() * u'.
struct SkinnyEig {
  Matrix u;  // n x p, orthonormal columns
  Vector d;  // p, all > tol
};

/// Full spectral decomposition of a symmetric matrix. The input is averaged
/// with its transpose first, so mild asymmetry (roundoff) is tolerated.
/// Throws NonConvergence if the solver fails.
EigenSystem sym_eig(const Matrix& m);

/// Eigenpairs with |value| > tol, order preserved. The survivor count is the
/// predicted rank.
EigenSystem nonzero_eigenpairs(const EigenSystem& es, double tol = 1e-10);

/// Skinny decomposition used for whitening: nullopt if the smallest
/// eigenvalue is <= -tol (matrix not p.s.d.); otherwise the pairs with
/// value > tol. Not-p.s.d. is an expected outcome, not a fault.
std::optional<SkinnyEig> psd_filtered_eigenpairs(const EigenSystem& es,
                                                 double tol = 1e-10);

/// Haar-distributed random n x n orthonormal matrix: QR of an i.i.d.
/// standard-Gaussian matrix with the R-diagonal sign correction.
Matrix random_orthogonal(int n, RngEngine& rng);

}  // namespace ostd
