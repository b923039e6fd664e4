#include "ostd/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <string>
#include <vector>

namespace ostd {

namespace {

// Per-pair score term. For odd orders (lambda, x) and (-lambda, -x) describe
// the same rank-one tensor; take whichever sign agrees better. The overlap
// factor is already sign-blind. Terms may be negative when weights have
// opposite signs; the assignment maximization works with them as-is.
double pair_term(double lc, const Vector& xc, double lt, const Vector& xt,
                 bool odd_order) {
  const double denom = std::max(std::abs(lc), std::abs(lt));
  if (denom == 0.0) return 0.0;  // zero-weight factors carry no mass
  const double overlap = std::abs(xc.dot(xt));
  double term = (1.0 - std::abs(lc - lt) / denom) * overlap;
  if (odd_order)
    term = std::max(term, (1.0 - std::abs(-lc - lt) / denom) * overlap);
  return term;
}

// Best sum over injective assignments matching exactly `want` truth
// columns, enumerated exhaustively. Sizes are small (p* <= 8 by contract).
double best_assignment(const Matrix& terms, int want) {
  const int pt = static_cast<int>(terms.rows());
  const int pc = static_cast<int>(terms.cols());
  double best = -std::numeric_limits<double>::infinity();
  std::vector<bool> used(pc, false);

  auto recurse = [&](auto&& self, int ti, int matched, double acc) -> void {
    if (pt - ti < want - matched) return;  // cannot reach the quota
    if (ti == pt) {
      best = std::max(best, acc);
      return;
    }
    if (matched < want)
      for (int cj = 0; cj < pc; ++cj) {
        if (used[cj]) continue;
        used[cj] = true;
        self(self, ti + 1, matched + 1, acc + terms(ti, cj));
        used[cj] = false;
      }
    // leave truth column ti unmatched (contributes zero)
    self(self, ti + 1, matched, acc);
  };
  recurse(recurse, 0, 0, 0.0);
  return best;
}

double greedy_assignment(const Matrix& terms, int want) {
  const int pt = static_cast<int>(terms.rows());
  const int pc = static_cast<int>(terms.cols());
  std::vector<bool> used_t(pt, false), used_c(pc, false);
  double total = 0.0;
  for (int step = 0; step < want; ++step) {
    double best = -std::numeric_limits<double>::infinity();
    int bt = -1, bc = -1;
    for (int i = 0; i < pt; ++i) {
      if (used_t[i]) continue;
      for (int j = 0; j < pc; ++j) {
        if (used_c[j]) continue;
        if (terms(i, j) > best) {
          best = terms(i, j);
          bt = i;
          bc = j;
        }
      }
    }
    used_t[bt] = true;
    used_c[bc] = true;
    total += best;
  }
  return total;
}

}  // namespace

FactorDecomposition normalize_columns(const FactorDecomposition& d,
                                      int order) {
  FactorDecomposition out = d;
  for (int k = 0; k < d.rank(); ++k) {
    const double norm = out.factors.col(k).norm();
    if (norm == 0.0)
      throw std::invalid_argument("cannot normalize a zero factor column");
    out.factors.col(k) /= norm;
    out.weights[k] *= std::pow(norm, order);
  }
  return out;
}

double relative_error(const SymmetricTensor& a, const FactorDecomposition& d) {
  if (d.rank() > 0 && d.dim() != a.dim())
    throw ShapeMismatch("decomposition dim does not match tensor dim");
  const double denom = frobenius_norm(a);
  if (denom == 0.0) throw ZeroTensor("relative error undefined for |A| = 0");
  const SymmetricTensor model =
      d.rank() > 0 ? from_factors(d, a.order())
                   : SymmetricTensor(a.order(), a.dim(),
                                     std::vector<double>(a.size(), 0.0));
  double diff_sq = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double diff = a[i] - model[i];
    diff_sq += diff * diff;
  }
  return std::sqrt(diff_sq) / denom;
}

double solution_score(const FactorDecomposition& computed,
                      const FactorDecomposition& truth,
                      const ScoreOptions& opts) {
  const FactorDecomposition c = normalize_columns(computed, opts.order);
  const FactorDecomposition t = normalize_columns(truth, opts.order);
  const int pt = t.rank();
  const int pc = c.rank();
  if (pt == 0) return 1.0;
  if (pc == 0) return 0.0;

  const bool odd = opts.order % 2 != 0;
  Matrix terms(pt, pc);
  for (int i = 0; i < pt; ++i)
    for (int j = 0; j < pc; ++j)
      terms(i, j) = pair_term(c.weights[j], c.factors.col(j), t.weights[i],
                              t.factors.col(i), odd);

  const int want = std::min(pt, pc);
  double sum;
  if (pt <= opts.max_exhaustive_p) {
    sum = best_assignment(terms, want);
  } else {
    std::cerr << "solution_score: " << pt << " truth columns exceed the "
              << "exhaustive limit " << opts.max_exhaustive_p
              << ", using greedy matching\n";
    sum = greedy_assignment(terms, want);
  }
  return std::clamp(sum / pt, 0.0, 1.0);
}

}  // namespace ostd
