#pragma once

#include <cstdint>
#include <vector>

namespace tradefreq {

// Uniformly sampled log-price series.
struct PricePath {
  std::vector<double> times;
  std::vector<double> log_prices;
  double delta_t = 1.0;

  // Validates length >= 2, strictly increasing times, and uniform spacing
  // within 1e-9 relative; sets delta_t to the mean spacing.
  static PricePath from_series(std::vector<double> times, std::vector<double> log_prices);

  std::size_t size() const { return log_prices.size(); }
};

struct HurstFit {
  double hurst = 0.0;      // regression slope
  double kappa = 0.0;      // exp(intercept)
  double intercept = 0.0;  // log kappa
  double r_squared = 0.0;
  std::vector<int> levels;                  // m = 0 .. m_levels-1, lag 2^m
  std::vector<double> mean_abs_increments;  // per level
  std::vector<double> residuals;            // per level, log scale
};

// Mean |x_{t+k} - x_t| over non-overlapping windows t = 0, k, 2k, ...
// Requires lag <= floor((size-1)/2) so at least two increments remain.
double mean_abs_increment(const PricePath& path, std::int64_t lag);

// min(8, largest level count keeping >= 8 increments at the top lag).
int default_scaling_levels(const PricePath& path);

// Unweighted OLS of log mean_abs_increment on log(2^m * delta_t) for
// m = 0 .. levels-1. Slope estimates H, exp(intercept) estimates kappa.
// Requires levels >= 3 and >= 8 increments at the top lag; a zero
// mean-abs-increment anywhere is degenerate and raises EstimationError.
HurstFit fit_scaling(const PricePath& path, int levels);

}  // namespace tradefreq
