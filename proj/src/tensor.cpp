#include "ostd/tensor.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

namespace ostd {

namespace {

using RowMat = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic,
                             Eigen::RowMajor>;
using RowMap = Eigen::Map<RowMat>;
using ConstRowMap = Eigen::Map<const RowMat>;
using ConstVecMap = Eigen::Map<const Eigen::VectorXd>;

constexpr int kMaxOrder = 16;

// Flat offset of the sorted multi-index. All entries sharing a sorted
// multi-index form one permutation class; the class is represented by this
// offset.
std::size_t canonical_offset(std::size_t flat, int order, int dim) {
  std::array<int, kMaxOrder> idx{};
  std::span<int> view(idx.data(), static_cast<std::size_t>(order));
  unflatten(flat, dim, view);
  std::sort(view.begin(), view.end());
  return flatten(view, dim);
}

void check_shape(int order, int dim, std::size_t n_values) {
  if (order < 2 || order > kMaxOrder)
    throw ShapeMismatch("tensor order must be in [2, " +
                        std::to_string(kMaxOrder) + "], got " +
                        std::to_string(order));
  if (dim < 1)
    throw ShapeMismatch("tensor dim must be positive, got " +
                        std::to_string(dim));
  if (n_values != ipow(dim, order))
    throw ShapeMismatch("expected " + std::to_string(ipow(dim, order)) +
                        " entries, got " + std::to_string(n_values));
}

// Mean of each permutation class, broadcast back to every member. This is
// exactly the mean over all m! index permutations: within a class, each
// arrangement is hit by the same number of permutations.
std::vector<double> permutation_class_means(const std::vector<double>& values,
                                            int order, int dim) {
  const std::size_t n = values.size();
  std::vector<double> sum(n, 0.0);
  std::vector<std::uint32_t> cnt(n, 0);
  std::vector<std::size_t> canon(n);
  for (std::size_t i = 0; i < n; ++i) {
    canon[i] = canonical_offset(i, order, dim);
    sum[canon[i]] += values[i];
    ++cnt[canon[i]];
  }
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = sum[canon[i]] / cnt[canon[i]];
  return out;
}

}  // namespace

SymmetricTensor::SymmetricTensor(int order, int dim,
                                 std::vector<double> entries)
    : order_(order), dim_(dim), entries_(std::move(entries)) {
  check_shape(order, dim, entries_.size());
}

double SymmetricTensor::at(std::span<const int> index) const {
  if (index.size() != static_cast<std::size_t>(order_))
    throw ShapeMismatch("index has " + std::to_string(index.size()) +
                        " subscripts, tensor order is " +
                        std::to_string(order_));
  for (int i : index)
    if (i < 0 || i >= dim_) throw ShapeMismatch("subscript out of range");
  return entries_[flatten(index, dim_)];
}

SymmetricTensor from_dense(int order, int dim, std::vector<double> values) {
  check_shape(order, dim, values.size());
  const double norm = ConstVecMap(values.data(), values.size()).norm();
  const std::vector<double> means = permutation_class_means(values, order, dim);
  double max_dev = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i)
    max_dev = std::max(max_dev, std::abs(values[i] - means[i]));
  if (max_dev > 1e-12 * norm)
    throw SymmetryViolation("max asymmetry " + std::to_string(max_dev) +
                            " exceeds 1e-12 * " + std::to_string(norm));
  return SymmetricTensor(order, dim, std::move(values));
}

SymmetricTensor symmetrize(int order, int dim, std::vector<double> values) {
  check_shape(order, dim, values.size());
  return SymmetricTensor(order, dim,
                         permutation_class_means(values, order, dim));
}

SymmetricTensor outer_power(const Vector& x, int order) {
  const int n = static_cast<int>(x.size());
  check_shape(order, n, ipow(n, order));
  std::vector<double> cur(x.data(), x.data() + n);
  std::vector<double> next;
  for (int step = 1; step < order; ++step) {
    next.resize(cur.size() * n);
    RowMap(next.data(), static_cast<Eigen::Index>(cur.size()), n) =
        ConstVecMap(cur.data(), static_cast<Eigen::Index>(cur.size())) *
        x.transpose();
    cur.swap(next);
  }
  return SymmetricTensor(order, n, std::move(cur));
}

SymmetricTensor from_factors(const FactorDecomposition& d, int order) {
  const int n = d.dim();
  const int p = d.rank();
  if (d.factors.cols() != p)
    throw ShapeMismatch("weights/factors length mismatch");
  check_shape(order, n, ipow(n, order));
  std::vector<double> acc(ipow(n, order), 0.0);
  Eigen::Map<Eigen::VectorXd> acc_map(acc.data(),
                                      static_cast<Eigen::Index>(acc.size()));
  for (int k = 0; k < p; ++k) {
    const SymmetricTensor rank1 = outer_power(d.factors.col(k), order);
    acc_map += d.weights[k] *
               ConstVecMap(rank1.entries().data(),
                           static_cast<Eigen::Index>(rank1.size()));
  }
  return SymmetricTensor(order, n, std::move(acc));
}

Vector tvp_reduce_to_vector(const SymmetricTensor& a, const Vector& x) {
  const int n = a.dim();
  if (x.size() != n)
    throw ShapeMismatch("vector length " + std::to_string(x.size()) +
                        " does not match tensor dim " + std::to_string(n));
  // Contract the last mode m-1 times; symmetry makes the mode choice moot.
  std::vector<double> cur(a.entries());
  std::vector<double> next;
  for (int step = 0; step < a.order() - 1; ++step) {
    const std::size_t rows = cur.size() / n;
    next.resize(rows);
    Eigen::Map<Eigen::VectorXd>(next.data(), static_cast<Eigen::Index>(rows)) =
        ConstRowMap(cur.data(), static_cast<Eigen::Index>(rows), n) * x;
    cur.swap(next);
  }
  return ConstVecMap(cur.data(), n);
}

double tvp_reduce_to_scalar(const SymmetricTensor& a, const Vector& x) {
  return x.dot(tvp_reduce_to_vector(a, x));
}

SymmetricTensor multilinear_transform(const SymmetricTensor& a,
                                      const Matrix& v) {
  const int n = a.dim();
  const int p = static_cast<int>(v.rows());
  if (v.cols() != n)
    throw ShapeMismatch("transform has " + std::to_string(v.cols()) +
                        " columns, tensor dim is " + std::to_string(n));
  if (p < 1) throw ShapeMismatch("transform must have at least one row");
  // Each pass contracts the (current) last mode with v and moves the new
  // index to the front; after m passes the original mode order is restored.
  std::vector<double> cur(a.entries());
  std::vector<double> next;
  for (int mode = 0; mode < a.order(); ++mode) {
    const std::size_t rows = cur.size() / n;
    next.resize(rows * p);
    RowMap out(next.data(), p, static_cast<Eigen::Index>(rows));
    out = (ConstRowMap(cur.data(), static_cast<Eigen::Index>(rows), n) *
           v.transpose())
              .transpose();
    cur.swap(next);
  }
  return SymmetricTensor(a.order(), p, std::move(cur));
}

Matrix slice_combination(const SymmetricTensor& a, const CoefficientTensor& c) {
  const int n = a.dim();
  if (c.order != a.order() - 2)
    throw ShapeMismatch("coefficient order " + std::to_string(c.order) +
                        " does not match tensor order " +
                        std::to_string(a.order()) + " minus 2");
  if (c.dim != n || c.size() != ipow(n, c.order))
    throw ShapeMismatch("coefficient tensor has wrong shape");
  // B(i1,i2) = sum_t c[t] * A[(i1*n+i2)*n^(m-2) + t]
  const std::size_t tail = c.size();
  Eigen::VectorXd b =
      ConstRowMap(a.entries().data(), static_cast<Eigen::Index>(n) * n,
                  static_cast<Eigen::Index>(tail)) *
      ConstVecMap(c.entries.data(), static_cast<Eigen::Index>(tail));
  return ConstRowMap(b.data(), n, n);
}

double frobenius_norm(const SymmetricTensor& a) {
  return ConstVecMap(a.entries().data(), static_cast<Eigen::Index>(a.size()))
      .norm();
}

}  // namespace ostd
