#include "ostd/synth.hpp"

#include <Eigen/SVD>
#include <cmath>
#include <utility>

#include "ostd/linalg.hpp"
#include "ostd/rng.hpp"

namespace ostd {

namespace {

constexpr int kNieOrder = 4;
constexpr int kNieDim = 3;
constexpr int kNieRank = 2;

FactorDecomposition nie_truth() {
  const double s26 = std::sqrt(26.0);
  const double s14 = std::sqrt(14.0);
  FactorDecomposition d{Vector(kNieRank), Matrix(kNieDim, kNieRank)};
  d.weights << 676.0, 196.0;
  d.factors << 0.0, 3.0 / s14,
      1.0 / s26, 2.0 / s14,
      -5.0 / s26, -1.0 / s14;
  return d;
}

void validate(const InstanceSpec& spec) {
  if (spec.order < 2) throw InvalidSpec("order must be >= 2");
  if (spec.dim < 1) throw InvalidSpec("dim must be >= 1");
  if (spec.rank < 0 || spec.rank > spec.dim)
    throw InvalidSpec("rank must satisfy 0 <= rank <= dim");
  if (spec.eta < 0) throw InvalidSpec("noise level must be >= 0");
  if (spec.family == Family::identity && spec.rank != spec.dim)
    throw InvalidSpec("identity family requires rank == dim");
  if (spec.family == Family::nie &&
      (spec.order != kNieOrder || spec.dim != kNieDim ||
       spec.rank != kNieRank))
    throw InvalidSpec("nie family is fixed at order 4, dim 3, rank 2");
}

FactorDecomposition draw_truth(const InstanceSpec& spec, RngEngine& rng,
                               const std::optional<Vector>& weights) {
  if (weights && spec.family != Family::identity)
    throw InvalidSpec("custom weights are supported for the identity family");
  switch (spec.family) {
    case Family::orthogonal: {
      const Matrix q = random_orthogonal(spec.dim, rng);
      return {Vector::Ones(spec.rank), q.leftCols(spec.rank)};
    }
    case Family::nonorthogonal: {
      std::normal_distribution<double> gauss(0.0, 1.0);
      Matrix x(spec.dim, spec.rank);
      // Regenerate on (measure-zero) near rank deficiency so downstream
      // whitening assumptions hold.
      while (true) {
        for (int j = 0; j < spec.rank; ++j) {
          for (int i = 0; i < spec.dim; ++i) x(i, j) = gauss(rng);
          x.col(j).normalize();
        }
        Eigen::JacobiSVD<Matrix> svd(x);
        if (spec.rank == 0 || svd.singularValues().minCoeff() > 1e-8) break;
      }
      return {Vector::Ones(spec.rank), std::move(x)};
    }
    case Family::identity: {
      Vector w = weights ? *weights : Vector::Ones(spec.dim);
      if (w.size() != spec.dim)
        throw InvalidSpec("weights length must equal dim");
      return {std::move(w), Matrix::Identity(spec.dim, spec.dim)};
    }
    case Family::nie:
      return nie_truth();
  }
  throw InvalidSpec("unknown family");
}

}  // namespace

Family family_from_string(std::string_view s) {
  if (s == "orthogonal") return Family::orthogonal;
  if (s == "nonorthogonal") return Family::nonorthogonal;
  if (s == "identity") return Family::identity;
  if (s == "nie") return Family::nie;
  throw InvalidSpec("unknown family: " + std::string(s));
}

std::string to_string(Family f) {
  switch (f) {
    case Family::orthogonal: return "orthogonal";
    case Family::nonorthogonal: return "nonorthogonal";
    case Family::identity: return "identity";
    case Family::nie: return "nie";
  }
  return "?";
}

GroundTruth gen_instance(const InstanceSpec& spec,
                         const std::optional<Vector>& weights) {
  validate(spec);
  RngEngine rng = make_engine(spec.seed);
  FactorDecomposition truth = draw_truth(spec, rng, weights);
  SymmetricTensor clean = from_factors(truth, spec.order);

  if (spec.eta == 0.0)
    return {std::move(truth), clean, clean};

  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<double> noise(clean.size());
  double noise_sq = 0.0;
  for (double& e : noise) {
    e = gauss(rng);
    noise_sq += e * e;
  }
  const double scale =
      spec.eta * frobenius_norm(clean) / std::sqrt(noise_sq);
  std::vector<double> contaminated(clean.entries());
  for (std::size_t i = 0; i < contaminated.size(); ++i)
    contaminated[i] += scale * noise[i];
  SymmetricTensor observed =
      symmetrize(spec.order, spec.dim, std::move(contaminated));
  return {std::move(truth), std::move(clean), std::move(observed)};
}

}  // namespace ostd
