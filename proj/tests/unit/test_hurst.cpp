#include <doctest.h>

#include <cmath>
#include <numeric>
#include <vector>

#include "tradefreq/errors.hpp"
#include "tradefreq/fbm.hpp"
#include "tradefreq/hurst.hpp"
#include "tradefreq/interval.hpp"

using namespace tradefreq;

namespace {

PricePath make_path(const std::vector<double>& values, double dt = 1.0) {
  std::vector<double> times(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) times[i] = dt * static_cast<double>(i);
  return PricePath::from_series(std::move(times), values);
}

}  // namespace

TEST_CASE("path construction validates spacing") {
  CHECK_THROWS_AS(PricePath::from_series({0.0}, {1.0}), DomainError);
  CHECK_THROWS_AS(PricePath::from_series({0.0, 1.0, 1.0}, {1.0, 2.0, 3.0}), DomainError);
  CHECK_THROWS_AS(PricePath::from_series({0.0, 1.0, 3.0}, {1.0, 2.0, 3.0}), DomainError);
  CHECK_THROWS_AS(PricePath::from_series({0.0, 1.0}, {1.0, 2.0, 3.0}), DomainError);
  const auto path = PricePath::from_series({0.5, 1.0, 1.5}, {1.0, 2.0, 3.0});
  CHECK(path.delta_t == doctest::Approx(0.5));
  CHECK(path.size() == 3);
}

TEST_CASE("mean absolute increment over non-overlapping windows") {
  // values 0, 1, 3, 6, 10: lag-1 diffs 1,2,3,4; lag-2 non-overlapping 3, 7
  const auto path = make_path({0.0, 1.0, 3.0, 6.0, 10.0});
  CHECK(mean_abs_increment(path, 1) == doctest::Approx(2.5));
  CHECK(mean_abs_increment(path, 2) == doctest::Approx(5.0));
  // lag 3 would leave a single increment; rejected
  CHECK_THROWS_AS(mean_abs_increment(path, 3), DomainError);
  CHECK_THROWS_AS(mean_abs_increment(path, 0), DomainError);

  // signs do not cancel
  const auto swing = make_path({0.0, 1.0, 0.0, 1.0, 0.0});
  CHECK(mean_abs_increment(swing, 1) == doctest::Approx(1.0));
  CHECK(mean_abs_increment(swing, 2) == doctest::Approx(0.0));
}

TEST_CASE("default level count keeps eight increments at the top lag") {
  // N = 1025: levels m = 0..7 need (N-1)/2^m >= 8 at m = 7, so 8 levels
  std::vector<double> v(1025, 0.0);
  std::iota(v.begin(), v.end(), 0.0);
  CHECK(default_scaling_levels(make_path(v)) == 8);

  // N = 65: top feasible level keeps (N-1)/2^m >= 8 at m = 3
  v.assign(65, 0.0);
  std::iota(v.begin(), v.end(), 0.0);
  CHECK(default_scaling_levels(make_path(v)) == 4);
}

TEST_CASE("scaling fit recovers the parameters of an exact fbm sample") {
  const double hurst = 0.62;
  const double kappa = 0.8;
  FbmConfig cfg;
  cfg.hurst = hurst;
  cfg.sigma = kappa / kappa_from_sigma(1.0);
  cfg.n_steps = 8192;
  cfg.horizon = 8192.0;  // unit grid
  cfg.seed = 31;
  const auto sample = sample_path(cfg);
  const auto path = PricePath::from_series(sample.times, sample.values);
  const auto fit = fit_scaling(path, 8);
  CHECK(fit.hurst == doctest::Approx(hurst).epsilon(0.08));
  CHECK(fit.kappa == doctest::Approx(kappa).epsilon(0.12));
  CHECK(fit.r_squared > 0.98);
  CHECK(fit.levels.size() == 8);
  CHECK(fit.mean_abs_increments.size() == 8);
  CHECK(fit.residuals.size() == 8);
  // residuals of an OLS fit sum to ~zero in log space
  double acc = 0.0;
  for (double r : fit.residuals) acc += r;
  CHECK(std::abs(acc) < 1e-10);
  CHECK(fit.intercept == doctest::Approx(std::log(fit.kappa)));
}

TEST_CASE("scaling fit is exact on synthetic log-linear data") {
  // x_t = c t gives mai(k) = c k at every lag: a perfect line in log-log
  // space that the regression must reproduce with r^2 = 1.
  std::vector<double> v(129);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = 0.37 * static_cast<double>(i);
  const auto fit = fit_scaling(make_path(v), 4);
  CHECK(fit.hurst == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(fit.kappa == doctest::Approx(0.37).epsilon(1e-12));
  CHECK(fit.r_squared == doctest::Approx(1.0));
  for (double r : fit.residuals) CHECK(std::abs(r) < 1e-12);
}

TEST_CASE("scaling fit input validation") {
  std::vector<double> v(129);
  std::iota(v.begin(), v.end(), 0.0);
  const auto path = make_path(v);
  CHECK_THROWS_AS(fit_scaling(path, 2), DomainError);   // too few levels
  CHECK_THROWS_AS(fit_scaling(path, 12), DomainError);  // too few increments at the top lag
  CHECK_NOTHROW(fit_scaling(path, 4));

  // a flat path has zero increments everywhere: degenerate
  std::vector<double> flat(64, 1.0);
  CHECK_THROWS_AS(fit_scaling(make_path(flat), 3), EstimationError);
}
