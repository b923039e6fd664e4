#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "ostd/tensor.hpp"

namespace ostd {

enum class Family {
  orthogonal,     // factors = leading columns of a Haar orthogonal matrix
  nonorthogonal,  // i.i.d. Gaussian columns, unit-normalized
  identity,       // factors = I_n (rank = dim)
  nie,            // the fixed 4-way, 3-dim rank-2 example of Nie
};

Family family_from_string(std::string_view s);
std::string to_string(Family f);

struct InstanceSpec {
  int order = 3;
  int dim = 4;
  int rank = 2;
  double eta = 0.0;  // noise level; 0 means observed == clean exactly
  Family family = Family::orthogonal;
  std::uint64_t seed = 0;
};

struct GroundTruth {
  FactorDecomposition truth;  // lambda*, X*
  SymmetricTensor clean;      // sum_k lambda*_k (x*_k)^m
  SymmetricTensor observed;   // clean + scaled symmetrized Gaussian noise
};

/// Generates a synthetic problem instance. Noise is added element-wise with
/// magnitude eta * |clean| / |N| and the result symmetrized, so the observed
/// tensor stays inside the symmetric class (at the cost of a noise norm
/// slightly below eta * |clean|). Same seed gives a bit-identical result.
/// `weights` overrides the all-ones lambda* for the identity family only.
GroundTruth gen_instance(const InstanceSpec& spec,
                         const std::optional<Vector>& weights = std::nullopt);

}  // namespace ostd
