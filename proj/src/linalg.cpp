#include "ostd/linalg.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/QR>
#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <vector>

namespace ostd {

namespace {

// Flip each column so its largest-magnitude component is positive (ties go
// to the lowest index). Removes the eigenvector sign ambiguity.
void canonicalize_signs(Matrix& vectors) {
  for (Eigen::Index j = 0; j < vectors.cols(); ++j) {
    Eigen::Index best = 0;
    for (Eigen::Index i = 1; i < vectors.rows(); ++i)
      if (std::abs(vectors(i, j)) > std::abs(vectors(best, j))) best = i;
    if (vectors(best, j) < 0) vectors.col(j) = -vectors.col(j);
  }
}

}  // namespace

EigenSystem sym_eig(const Matrix& m) {
  if (m.rows() != m.cols())
    throw ShapeMismatch("matrix is " + std::to_string(m.rows()) + "x" +
                        std::to_string(m.cols()) + ", expected square");
  Eigen::SelfAdjointEigenSolver<Matrix> solver(0.5 * (m + m.transpose()));
  if (solver.info() != Eigen::Success)
    throw NonConvergence("symmetric eigensolver did not converge");

  const Eigen::Index n = m.rows();
  std::vector<Eigen::Index> order(n);
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  // Descending by value; stable sort keeps the solver's column order on
  // ties.
  std::stable_sort(order.begin(), order.end(),
                   [&](Eigen::Index a, Eigen::Index b) {
                     return solver.eigenvalues()[a] > solver.eigenvalues()[b];
                   });

  EigenSystem es{Vector(n), Matrix(n, n)};
  for (Eigen::Index k = 0; k < n; ++k) {
    es.values[k] = solver.eigenvalues()[order[k]];
    es.vectors.col(k) = solver.eigenvectors().col(order[k]);
  }
  canonicalize_signs(es.vectors);
  return es;
}

EigenSystem nonzero_eigenpairs(const EigenSystem& es, double tol) {
  if (!(tol > 0)) throw std::invalid_argument("tolerance must be positive");
  std::vector<Eigen::Index> keep;
  for (Eigen::Index k = 0; k < es.values.size(); ++k)
    if (std::abs(es.values[k]) > tol) keep.push_back(k);

  EigenSystem out{Vector(static_cast<Eigen::Index>(keep.size())),
                  Matrix(es.vectors.rows(),
                         static_cast<Eigen::Index>(keep.size()))};
  for (std::size_t i = 0; i < keep.size(); ++i) {
    out.values[static_cast<Eigen::Index>(i)] = es.values[keep[i]];
    out.vectors.col(static_cast<Eigen::Index>(i)) = es.vectors.col(keep[i]);
  }
  return out;
}

std::optional<SkinnyEig> psd_filtered_eigenpairs(const EigenSystem& es,
                                                 double tol) {
  if (!(tol > 0)) throw std::invalid_argument("tolerance must be positive");
  if (es.values.size() > 0 && es.values.minCoeff() <= -tol)
    return std::nullopt;
  std::vector<Eigen::Index> keep;
  for (Eigen::Index k = 0; k < es.values.size(); ++k)
    if (es.values[k] > tol) keep.push_back(k);

  SkinnyEig out{Matrix(es.vectors.rows(),
                       static_cast<Eigen::Index>(keep.size())),
                Vector(static_cast<Eigen::Index>(keep.size()))};
  for (std::size_t i = 0; i < keep.size(); ++i) {
    out.d[static_cast<Eigen::Index>(i)] = es.values[keep[i]];
    out.u.col(static_cast<Eigen::Index>(i)) = es.vectors.col(keep[i]);
  }
  return out;
}

Matrix random_orthogonal(int n, RngEngine& rng) {
  if (n < 1) throw ShapeMismatch("dimension must be positive");
  std::normal_distribution<double> gauss(0.0, 1.0);
  Matrix g(n, n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) g(i, j) = gauss(rng);

  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ() * Matrix::Identity(n, n);
  // Fixing the sign of diag(R) makes the distribution exactly Haar.
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < n; ++j)
    if (r(j, j) < 0) q.col(j) = -q.col(j);
  return q;
}

}  // namespace ostd
