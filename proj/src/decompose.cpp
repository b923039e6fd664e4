#include "ostd/decompose.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <vector>

#include "ostd/tensor.hpp"

namespace ostd {

namespace {

void require_decomposable_order(const SymmetricTensor& a) {
  if (a.order() < 3)
    throw ShapeMismatch("decomposition needs order >= 3, got " +
                        std::to_string(a.order()));
}

// Factors ordered by descending |sigma|, ties keeping the eigensystem
// order. Returns the permutation, not the sorted values.
std::vector<Eigen::Index> by_descending_magnitude(const Vector& sigma) {
  std::vector<Eigen::Index> order(sigma.size());
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](Eigen::Index a, Eigen::Index b) {
                     return std::abs(sigma[a]) > std::abs(sigma[b]);
                   });
  return order;
}

}  // namespace

CoefficientTensor random_coefficients(int order, int dim, RngEngine& rng) {
  if (order < 1)
    throw ShapeMismatch("coefficient order must be >= 1, got " +
                        std::to_string(order));
  if (dim < 1) throw ShapeMismatch("coefficient dim must be positive");
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<double> entries(ipow(dim, order));
  double sum = 0.0;
  for (double& e : entries) {
    e = unit(rng);
    sum += e;
  }
  if (sum == 0.0) {  // unreachable in practice
    std::fill(entries.begin(), entries.end(), 1.0 / entries.size());
  } else {
    for (double& e : entries) e /= sum;
  }
  return CoefficientTensor{order, dim, std::move(entries)};
}

FactorDecomposition ostd(const SymmetricTensor& a, const OstdOptions& opts,
                         RngEngine& rng) {
  require_decomposable_order(a);
  const int n = a.dim();

  std::optional<Matrix> projection;
  std::optional<SymmetricTensor> projected;
  if (opts.randomize) {
    projection = random_orthogonal(n, rng);
    projected = multilinear_transform(a, *projection);
  }
  const SymmetricTensor& ahat = projected ? *projected : a;

  CoefficientTensor beta =
      opts.coefficients ? *opts.coefficients
                        : random_coefficients(a.order() - 2, n, rng);
  const Matrix b = slice_combination(ahat, beta);
  const EigenSystem pairs =
      nonzero_eigenpairs(sym_eig(b), opts.nonzero_tol);

  const std::vector<Eigen::Index> order =
      by_descending_magnitude(pairs.values);
  const int p = pairs.count();
  FactorDecomposition d{Vector(p), Matrix(n, p)};
  for (int k = 0; k < p; ++k) {
    Vector x = pairs.vectors.col(order[k]);
    if (projection) x = projection->transpose() * x;
    d.factors.col(k) = x;
    // lambda against the original tensor; identical to using the projected
    // one since the projection is orthonormal.
    d.weights[k] = tvp_reduce_to_scalar(a, x);
  }
  return d;
}

WhitenResult whitened_ostd(const SymmetricTensor& a, const WhitenOptions& opts,
                           RngEngine& rng) {
  require_decomposable_order(a);
  if (opts.base.coefficients)
    throw std::invalid_argument(
        "whitened_ostd draws its own coefficients at the whitened dimension");
  if (opts.max_psd_attempts < 1)
    throw std::invalid_argument("max_psd_attempts must be >= 1");
  const int n = a.dim();

  std::optional<Matrix> projection;
  std::optional<SymmetricTensor> projected;
  if (opts.base.randomize) {
    projection = random_orthogonal(n, rng);
    projected = multilinear_transform(a, *projection);
  }
  const SymmetricTensor& ahat = projected ? *projected : a;

  // Search for a p.s.d. slice combination to whiten against.
  std::optional<SkinnyEig> skinny;
  Matrix accepted;
  int attempts = 0;
  while (attempts < opts.max_psd_attempts) {
    ++attempts;
    const CoefficientTensor gamma =
        random_coefficients(a.order() - 2, n, rng);
    Matrix c = slice_combination(ahat, gamma);
    skinny = psd_filtered_eigenpairs(sym_eig(c), opts.psd_tol);
    if (skinny) {
      accepted = std::move(c);
      break;
    }
  }
  if (!skinny) return WhiteningFailure{attempts};

  const int wdim = static_cast<int>(skinny->d.size());
  if (wdim == 0) {
    // Zero tensor: p.s.d. trivially, nothing to recover.
    return WhitenReport{FactorDecomposition{Vector(0), Matrix(n, 0)}, attempts,
                        0, Matrix(0, n), accepted};
  }

  const Vector root_d = skinny->d.cwiseSqrt();
  const Matrix whitening =
      root_d.cwiseInverse().asDiagonal() * skinny->u.transpose();  // p x n
  const SymmetricTensor whitened = multilinear_transform(ahat, whitening);

  const CoefficientTensor beta =
      random_coefficients(a.order() - 2, wdim, rng);
  const Matrix b = slice_combination(whitened, beta);
  const EigenSystem pairs =
      nonzero_eigenpairs(sym_eig(b), opts.base.nonzero_tol);

  const std::vector<Eigen::Index> order =
      by_descending_magnitude(pairs.values);
  const int p = pairs.count();
  FactorDecomposition d{Vector(p), Matrix(n, p)};
  for (int k = 0; k < p; ++k) {
    const Vector xbar = pairs.vectors.col(order[k]);
    double lambda = tvp_reduce_to_scalar(whitened, xbar);
    // Map back through the pseudoinverse of W (and undo the projection).
    Vector x = skinny->u * root_d.asDiagonal() * xbar;
    if (projection) x = projection->transpose() * x;
    const double norm = x.norm();
    lambda *= std::pow(norm, a.order());
    d.factors.col(k) = x / norm;
    d.weights[k] = lambda;
  }
  return WhitenReport{std::move(d), attempts, wdim, whitening,
                      std::move(accepted)};
}

}  // namespace ostd
