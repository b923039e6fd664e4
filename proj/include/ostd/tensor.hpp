#pragma once

#include <Eigen/Dense>
#include <cstddef>
#include <span>
#include <vector>

#include "ostd/errors.hpp"

namespace ostd {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

inline std::size_t ipow(int base, int exp) {
  std::size_t r = 1;
  for (int i = 0; i < exp; ++i) r *= static_cast<std::size_t>(base);
  return r;
}

// Multi-index <-> flat offset for row-major storage (last index fastest).
inline std::size_t flatten(std::span<const int> index, int dim) {
  std::size_t f = 0;
  for (int i : index) f = f * static_cast<std::size_t>(dim) + i;
  return f;
}

inline void unflatten(std::size_t flat, int dim, std::span<int> out) {
  for (auto k = out.size(); k-- > 0;) {
    out[k] = static_cast<int>(flat % dim);
    flat /= dim;
  }
}

/// Dense m-way, n-dimensional real tensor whose entries are invariant under
/// any permutation of the indices. Entries are stored flat in row-major
/// lexicographic order (last index fastest). Immutable after construction,
/// so instances can be shared freely across threads.
class SymmetricTensor {
 public:
  /// Wraps `entries` after checking only the shape, not the symmetry
  /// invariant. Use from_dense() for untrusted data.
  SymmetricTensor(int order, int dim, std::vector<double> entries);

  int order() const noexcept { return order_; }
  int dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return entries_.size(); }
  const std::vector<double>& entries() const noexcept { return entries_; }

  double operator[](std::size_t flat) const { return entries_[flat]; }

  /// Entry at a full multi-index (one subscript per mode, 0-based).
  double at(std::span<const int> index) const;

 private:
  int order_;
  int dim_;
  std::vector<double> entries_;
};

/// Coefficients of a slice combination: an (m-2)-way, n-dimensional dense
/// array. Order 0 (a single scalar) corresponds to matrices (m = 2).
struct CoefficientTensor {
  int order = 0;
  int dim = 1;
  std::vector<double> entries;  // dim^order values, row-major

  std::size_t size() const noexcept { return entries.size(); }
};

/// Weight vector and factor matrix of a symmetric rank decomposition
/// sum_k weights[k] * factors.col(k)^m. Columns are unit norm whenever
/// produced by the decomposition algorithms.
struct FactorDecomposition {
  Vector weights;  // p
  Matrix factors;  // n x p, one column per factor

  int rank() const noexcept { return static_cast<int>(weights.size()); }
  int dim() const noexcept { return static_cast<int>(factors.rows()); }
};

/// Validating constructor: accepts `values` only if every entry agrees with
/// the mean over its index-permutation class to within 1e-12 relative to the
/// Frobenius norm. Throws SymmetryViolation otherwise.
SymmetricTensor from_dense(int order, int dim, std::vector<double> values);

/// Projects arbitrary data onto the symmetric tensors: each output entry is
/// the mean of the input over all index permutations.
SymmetricTensor symmetrize(int order, int dim, std::vector<double> values);

/// Rank-one symmetric tensor x^m with entries x_{i1} ... x_{im}.
SymmetricTensor outer_power(const Vector& x, int order);

/// sum_k weights[k] * factors.col(k)^m.
SymmetricTensor from_factors(const FactorDecomposition& d, int order);

/// Tensor-vector product A x^{m-1}: contracts all modes but the first with
/// copies of x, producing a vector of length n.
Vector tvp_reduce_to_vector(const SymmetricTensor& a, const Vector& x);

/// Tensor-vector product A x^m = x' (A x^{m-1}), a scalar.
double tvp_reduce_to_scalar(const SymmetricTensor& a, const Vector& x);

/// Multiplies every mode of `a` by the p x n matrix v, producing an m-way
/// p-dimensional symmetric tensor. Contracts one mode at a time, so the
/// cost is O(m p n^m) rather than the naive O((pn)^m).
SymmetricTensor multilinear_transform(const SymmetricTensor& a,
                                      const Matrix& v);

/// Weighted sum of the n x n slices of `a` obtained by fixing the trailing
/// m-2 indices: B = sum_{i3..im} c_{i3..im} A(:,:,i3,...,im). Symmetric
/// because `a` is.
Matrix slice_combination(const SymmetricTensor& a, const CoefficientTensor& c);

/// Square root of the sum of squared entries.
double frobenius_norm(const SymmetricTensor& a);

}  // namespace ostd
