#include "tradefreq/hurst.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "tradefreq/errors.hpp"

namespace tradefreq {

PricePath PricePath::from_series(std::vector<double> times, std::vector<double> log_prices) {
  if (times.size() != log_prices.size()) throw DomainError("times and log prices differ in length");
  if (times.size() < 2) throw DomainError("series needs at least two observations");
  const std::size_t n = times.size();
  const double dt = (times.back() - times.front()) / static_cast<double>(n - 1);
  if (!(dt > 0.0)) throw DomainError("times must be strictly increasing");
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const double step = times[i + 1] - times[i];
    if (!(step > 0.0)) throw DomainError("times must be strictly increasing");
    if (std::abs(step - dt) > 1e-9 * dt)
      throw DomainError("non-uniform sampling at index " + std::to_string(i + 1) +
                        "; resample before estimation");
  }
  PricePath path;
  path.times = std::move(times);
  path.log_prices = std::move(log_prices);
  path.delta_t = dt;
  return path;
}

double mean_abs_increment(const PricePath& path, std::int64_t lag) {
  const std::int64_t n = static_cast<std::int64_t>(path.size());
  if (n < 2) throw DomainError("series needs at least two observations");
  if (lag < 1) throw DomainError("lag must be >= 1");
  if (lag > (n - 1) / 2)
    throw DomainError("lag " + std::to_string(lag) + " leaves fewer than two increments");
  const std::int64_t count = (n - 1) / lag;
  double sum = 0.0;
  for (std::int64_t j = 0; j < count; ++j)
    sum += std::abs(path.log_prices[static_cast<std::size_t>((j + 1) * lag)] -
                    path.log_prices[static_cast<std::size_t>(j * lag)]);
  return sum / static_cast<double>(count);
}

int default_scaling_levels(const PricePath& path) {
  const std::int64_t n = static_cast<std::int64_t>(path.size());
  int levels = 0;
  while (levels < 8 && (n - 1) / (std::int64_t{1} << levels) >= 8) ++levels;
  return levels;
}

HurstFit fit_scaling(const PricePath& path, int levels) {
  if (levels < 3) throw DomainError("scaling fit needs at least 3 levels");
  const std::int64_t n = static_cast<std::int64_t>(path.size());
  const std::int64_t top_lag = std::int64_t{1} << (levels - 1);
  if ((n - 1) / top_lag < 8)
    throw DomainError("series too short: level " + std::to_string(levels - 1) +
                      " keeps fewer than 8 increments");

  HurstFit fit;
  std::vector<double> x(static_cast<std::size_t>(levels));
  std::vector<double> y(static_cast<std::size_t>(levels));
  for (int m = 0; m < levels; ++m) {
    const std::int64_t lag = std::int64_t{1} << m;
    const double mai = mean_abs_increment(path, lag);
    if (!(mai > 0.0))
      throw EstimationError("degenerate series: zero mean absolute increment at lag " +
                            std::to_string(lag));
    fit.levels.push_back(m);
    fit.mean_abs_increments.push_back(mai);
    x[static_cast<std::size_t>(m)] = std::log(static_cast<double>(lag) * path.delta_t);
    y[static_cast<std::size_t>(m)] = std::log(mai);
  }

  const double k = static_cast<double>(levels);
  double mean_x = 0.0, mean_y = 0.0;
  for (int m = 0; m < levels; ++m) {
    mean_x += x[static_cast<std::size_t>(m)];
    mean_y += y[static_cast<std::size_t>(m)];
  }
  mean_x /= k;
  mean_y /= k;
  double sxx = 0.0, sxy = 0.0;
  for (int m = 0; m < levels; ++m) {
    const double dx = x[static_cast<std::size_t>(m)] - mean_x;
    sxx += dx * dx;
    sxy += dx * (y[static_cast<std::size_t>(m)] - mean_y);
  }
  fit.hurst = sxy / sxx;
  fit.intercept = mean_y - fit.hurst * mean_x;
  fit.kappa = std::exp(fit.intercept);

  double ss_res = 0.0, ss_tot = 0.0;
  for (int m = 0; m < levels; ++m) {
    const double r = y[static_cast<std::size_t>(m)] - (fit.intercept + fit.hurst * x[static_cast<std::size_t>(m)]);
    fit.residuals.push_back(r);
    ss_res += r * r;
    const double dy = y[static_cast<std::size_t>(m)] - mean_y;
    ss_tot += dy * dy;
  }
  fit.r_squared = ss_tot > 0.0 ? 1.0 - ss_res / ss_tot : 1.0;
  if (fit.r_squared < 0.0) fit.r_squared = 0.0;
  if (fit.r_squared > 1.0) fit.r_squared = 1.0;
  return fit;
}

}  // namespace tradefreq
