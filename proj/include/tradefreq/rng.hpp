#pragma once

#include <cstdint>
#include <random>

namespace tradefreq {

// SplitMix64 finalizer; used to derive independent stream seeds.
std::uint64_t splitmix64(std::uint64_t x);

// Deterministic N(0,1) source: mt19937_64 driving a Box-Muller transform.
// std::normal_distribution is implementation-defined, this is not. The
// construction is fixed per release; changing it invalidates golden outputs.
class GaussianRng {
 public:
  explicit GaussianRng(std::uint64_t seed) : gen_(seed) {}

  double operator()();

 private:
  double uniform01();  // in (0, 1]

  std::mt19937_64 gen_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace tradefreq
