#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "tradefreq/rng.hpp"

namespace tradefreq {

enum class FbmMethod { kCholesky, kCirculant };

struct FbmConfig {
  double hurst = 0.5;
  double sigma = 1.0;
  double drift = 0.0;
  std::int64_t n_steps = 1;
  double horizon = 1.0;
  FbmMethod method = FbmMethod::kCirculant;
  std::uint64_t seed = 0;

  void validate() const;
};

struct FbmPath {
  std::vector<double> times;   // n_steps + 1 points, uniform on [0, horizon]
  std::vector<double> values;  // values[0] == 0
  FbmConfig config;
};

// Cov(B_t, B_s) = (t^(2H) + s^(2H) - |t-s|^(2H)) / 2.
double fbm_covariance(double t, double s, double hurst);

// Unit-step increment autocovariance
// ((k+1)^(2H) - 2 k^(2H) + (k-1)^(2H)) / 2; equals 1 at lag 0.
double fgn_autocovariance(std::int64_t lag, double hurst);

// Dense factorization memory grows as n^2; larger paths take the circulant
// sampler.
inline constexpr std::int64_t kCholeskyMaxSteps = 4096;

// Exact unit-variance fractional Gaussian noise via Cholesky of the Toeplitz
// covariance. Reusable across paths; sample() is const and thread-safe.
class CholeskyFgnSampler {
 public:
  CholeskyFgnSampler(double hurst, std::int64_t n);
  void sample(GaussianRng& rng, std::vector<double>& out) const;
  std::int64_t size() const { return n_; }

 private:
  std::int64_t n_;
  Eigen::MatrixXd factor_;  // lower triangular
};

// Exact unit-variance fGN via circulant embedding. The embedding has size 2n
// when n is a power of two and the next power of two >= 2n otherwise;
// either way the first n lags reproduce the fGN covariance exactly.
class CirculantFgnSampler {
 public:
  CirculantFgnSampler(double hurst, std::int64_t n);
  void sample(GaussianRng& rng, std::vector<double>& out) const;
  std::int64_t size() const { return n_; }

 private:
  std::int64_t n_;
  std::size_t m_;                  // embedding size, power of two
  std::vector<double> amplitude_;  // sqrt(eigenvalue / m)
};

// Embedding eigenvalues (unclamped), exposed for validation.
std::vector<double> circulant_embedding_eigenvalues(double hurst, std::int64_t n);

// Discrete fBM on a uniform grid:
//   values[i] = drift * t_i + sigma * (horizon/n)^H * (e_1 + ... + e_i)
// with e unit fGN from the configured sampler. Identical configs produce
// bit-identical paths.
FbmPath sample_path(const FbmConfig& cfg);

}  // namespace tradefreq
