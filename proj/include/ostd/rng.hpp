#pragma once

#include <cstdint>
#include <random>

namespace ostd {

using RngEngine = std::mt19937_64;

// splitmix64 finalizer (Steele, Lea & Flood). Bijective on 64-bit words,
// decorrelates consecutive inputs.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z += 0x9e3779b97f4a7c15ull;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

// Child seed for stream `index` under `master`. Independent indices give
// statistically independent streams, so work items can run in any order
// (or in parallel) without changing results.
constexpr std::uint64_t derive_seed(std::uint64_t master,
                                    std::uint64_t index) noexcept {
  return mix64(master ^ mix64(index));
}

inline RngEngine make_engine(std::uint64_t seed) {
  return RngEngine(mix64(seed));
}

}  // namespace ostd
