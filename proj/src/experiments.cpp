#include "tradefreq/experiments.hpp"

#include <atomic>
#include <cmath>
#include <cstddef>
#include <thread>
#include <utility>

#include "tradefreq/errors.hpp"
#include "tradefreq/fbm.hpp"
#include "tradefreq/rng.hpp"

namespace tradefreq {

namespace {

// Curve over consecutive levels with the argmax marked; unimodal reports
// whether the profits rise to the peak and fall after it.
ProfitCurve experiment_curve(int m_lo, std::vector<double> profits) {
  ProfitCurve curve;
  curve.profits = std::move(profits);
  curve.levels.resize(curve.profits.size());
  for (std::size_t i = 0; i < curve.levels.size(); ++i)
    curve.levels[i] = m_lo + static_cast<int>(i);
  curve.m_max = curve.levels.back();
  std::size_t best = 0;
  for (std::size_t i = 1; i < curve.profits.size(); ++i)
    if (curve.profits[i] > curve.profits[best]) best = i;
  curve.m_star = curve.levels[best];
  curve.unimodal = true;
  for (std::size_t i = 0; i + 1 < curve.profits.size(); ++i) {
    const bool rising = i < best;
    if (rising ? curve.profits[i] > curve.profits[i + 1] : curve.profits[i] < curve.profits[i + 1]) {
      curve.unimodal = false;
      break;
    }
  }
  return curve;
}

std::uint64_t path_seed(std::uint64_t seed, std::size_t hurst_index, std::int64_t path_index) {
  return seed ^ splitmix64((static_cast<std::uint64_t>(hurst_index) << 32) ^
                           static_cast<std::uint64_t>(path_index));
}

}  // namespace

void McExperimentSpec::validate() const {
  if (hurst_values.empty()) throw DomainError("experiment needs at least one hurst value");
  for (double h : hurst_values)
    if (!(h > 0.0 && h < 1.0)) throw DomainError("hurst must lie in (0, 1)");
  if (m_lo < 0) throw DomainError("m_lo must be >= 0");
  if (m_hi < m_lo) throw DomainError("m_hi must be >= m_lo");
  if (m_hi > 26) throw DomainError("m_hi > 26 would need paths beyond 2^26 steps");
  if (!(kappa > 0.0)) throw DomainError("kappa must be > 0");
  if (!(spread >= 0.0)) throw DomainError("spread must be >= 0");
  if (!(horizon > 0.0)) throw DomainError("horizon must be > 0");
  if (n_paths < 0) throw DomainError("n_paths must be >= 0");
  laziness.validate();
}

McExperimentResult run_mc_experiment(const McExperimentSpec& spec) {
  spec.validate();
  McExperimentResult result;
  result.spec = spec;

  const int level_count = spec.m_hi - spec.m_lo + 1;
  const std::int64_t n_steps = std::int64_t{1} << spec.m_hi;
  const double sigma = spec.kappa / kappa_from_sigma(1.0);

  for (std::size_t h_index = 0; h_index < spec.hurst_values.size(); ++h_index) {
    const double hurst = spec.hurst_values[h_index];
    McCaseResult item;
    item.hurst = hurst;

    std::vector<double> analytic(static_cast<std::size_t>(level_count));
    for (int m = spec.m_lo; m <= spec.m_hi; ++m) {
      const double delta = std::ldexp(spec.horizon, -m);
      analytic[static_cast<std::size_t>(m - spec.m_lo)] =
          std::ldexp(1.0, m) * (spec.kappa * std::pow(delta, hurst) - spec.spread) -
          spec.laziness.at_level(m);
    }
    item.analytic = experiment_curve(spec.m_lo, std::move(analytic));

    StochasticParams theory;
    theory.hurst = hurst;
    theory.kappa = spec.kappa;
    theory.spread = spec.spread;
    theory.horizon = spec.horizon;
    theory.laziness = LazinessSpec::constant(0.0);
    const OptimalInterval costfree = optimal_interval_closed_form(theory);
    theory.laziness = spec.laziness;
    const OptimalInterval latency = optimal_interval_with_latency(theory);
    item.m_star_theory_costfree = costfree.m_star_rounded;
    item.m_star_theory_latency = latency.m_star_rounded;
    item.delta_star_costfree = costfree.delta_star;
    item.delta_star_latency = latency.delta_star;

    if (spec.n_paths > 0) {
      const CirculantFgnSampler sampler(hurst, n_steps);
      const double scale = sigma * std::pow(spec.horizon / static_cast<double>(n_steps), hurst);

      // Per-path per-level sums of |increment|, reduced in path order so the
      // aggregation does not depend on scheduling.
      std::vector<double> sums(static_cast<std::size_t>(spec.n_paths) *
                               static_cast<std::size_t>(level_count));
      const auto work = [&](std::int64_t p, std::vector<double>& noise, std::vector<double>& x) {
        GaussianRng rng(path_seed(spec.seed, h_index, p));
        sampler.sample(rng, noise);
        x.resize(static_cast<std::size_t>(n_steps) + 1);
        x[0] = 0.0;
        double acc = 0.0;
        for (std::int64_t i = 0; i < n_steps; ++i) {
          acc += noise[static_cast<std::size_t>(i)];
          x[static_cast<std::size_t>(i + 1)] = scale * acc;
        }
        double* row = sums.data() + static_cast<std::size_t>(p) * static_cast<std::size_t>(level_count);
        for (int m = spec.m_lo; m <= spec.m_hi; ++m) {
          const std::int64_t stride = std::int64_t{1} << (spec.m_hi - m);
          const std::int64_t count = std::int64_t{1} << m;
          double sum = 0.0;
          for (std::int64_t j = 0; j < count; ++j)
            sum += std::abs(x[static_cast<std::size_t>((j + 1) * stride)] -
                            x[static_cast<std::size_t>(j * stride)]);
          row[m - spec.m_lo] = sum;
        }
      };

      int threads = spec.threads > 0 ? spec.threads
                                     : static_cast<int>(std::thread::hardware_concurrency());
      if (threads < 1) threads = 1;
      if (threads > 16) threads = 16;
      if (static_cast<std::int64_t>(threads) > spec.n_paths)
        threads = static_cast<int>(spec.n_paths);

      if (threads <= 1) {
        std::vector<double> noise, x;
        for (std::int64_t p = 0; p < spec.n_paths; ++p) work(p, noise, x);
      } else {
        std::atomic<std::int64_t> next(0);
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(threads));
        for (int t = 0; t < threads; ++t) {
          pool.emplace_back([&] {
            std::vector<double> noise, x;
            for (;;) {
              const std::int64_t p = next.fetch_add(1);
              if (p >= spec.n_paths) return;
              work(p, noise, x);
            }
          });
        }
        for (auto& th : pool) th.join();
      }

      item.realized_mean_abs.assign(static_cast<std::size_t>(level_count), 0.0);
      for (std::int64_t p = 0; p < spec.n_paths; ++p) {
        const double* row =
            sums.data() + static_cast<std::size_t>(p) * static_cast<std::size_t>(level_count);
        for (int i = 0; i < level_count; ++i)
          item.realized_mean_abs[static_cast<std::size_t>(i)] += row[i];
      }
      std::vector<double> simulated(static_cast<std::size_t>(level_count));
      for (int m = spec.m_lo; m <= spec.m_hi; ++m) {
        const std::size_t i = static_cast<std::size_t>(m - spec.m_lo);
        const double increments = static_cast<double>(spec.n_paths) * std::ldexp(1.0, m);
        item.realized_mean_abs[i] /= increments;
        simulated[i] = std::ldexp(1.0, m) * (item.realized_mean_abs[i] - spec.spread) -
                       spec.laziness.at_level(m);
      }
      item.simulated = experiment_curve(spec.m_lo, std::move(simulated));
      item.m_star_sim = item.simulated.m_star;
    } else {
      item.m_star_sim = item.analytic.m_star;
    }

    item.relative_gap =
        std::abs(std::ldexp(spec.horizon, -item.m_star_sim) - item.delta_star_latency) /
        item.delta_star_latency;
    result.cases.push_back(std::move(item));
  }
  return result;
}

EmpiricalResult run_empirical(const PricePath& path, const CostSpec& costs, int levels) {
  if (!(costs.spread > 0.0)) throw DomainError("cost spec needs spread > 0");
  if (!(costs.lambda >= 0.0)) throw DomainError("cost spec needs lambda >= 0");
  if (!(costs.alpha >= 1.0)) throw DomainError("cost spec needs alpha >= 1");
  if (levels == 0) levels = default_scaling_levels(path);

  EmpiricalResult result;
  result.fit = fit_scaling(path, levels);
  // a slop band keeps boundary fits (pure trends, pure noise) out even when
  // rounding lands the slope a few ulps inside the interval
  if (!(result.fit.hurst > 1e-9 && result.fit.hurst < 1.0 - 1e-9))
    throw EstimationError("fitted H = " + std::to_string(result.fit.hurst) +
                          " lies outside (0, 1); theory optimum undefined");

  const std::int64_t n = static_cast<std::int64_t>(path.size());
  const double span = static_cast<double>(n - 1) * path.delta_t;
  std::vector<double> empirical(static_cast<std::size_t>(levels));
  std::vector<double> theory(static_cast<std::size_t>(levels));
  for (int m = 0; m < levels; ++m) {
    const std::int64_t lag = std::int64_t{1} << m;
    const double trades = static_cast<double>((n - 1) / lag);
    const double mai = result.fit.mean_abs_increments[static_cast<std::size_t>(m)];
    empirical[static_cast<std::size_t>(m)] =
        trades * (mai - costs.spread) - costs.lambda * std::pow(trades, costs.alpha);
    const double delta = static_cast<double>(lag) * path.delta_t;
    theory[static_cast<std::size_t>(m)] =
        result.fit.kappa * span * std::pow(delta, result.fit.hurst - 1.0) -
        span * costs.spread / delta - costs.lambda * std::pow(span / delta, costs.alpha);
  }
  result.empirical_curve = experiment_curve(0, std::move(empirical));
  result.theory_curve = experiment_curve(0, std::move(theory));
  result.m_star_emp = result.empirical_curve.m_star;

  StochasticParams fitted;
  fitted.hurst = result.fit.hurst;
  fitted.kappa = result.fit.kappa;
  fitted.spread = costs.spread;
  fitted.horizon = span;
  fitted.laziness = LazinessSpec::constant(0.0);
  const OptimalInterval costfree = optimal_interval_closed_form(fitted);
  result.m_star_theory = costfree.m_star_rounded;
  result.delta_star_theory = costfree.delta_star;
  fitted.laziness = LazinessSpec::trade_count_power(costs.lambda, costs.alpha);
  const OptimalInterval latency = optimal_interval_with_latency(fitted);
  result.m_star_theory_latency = latency.m_star_rounded;
  result.delta_star_latency = latency.delta_star;
  return result;
}

EmpiricalResult run_empirical_csv(const std::string& file, const CsvSchema& schema,
                                  const CostSpec& costs, int levels) {
  return run_empirical(load_price_csv(file, schema), costs, levels);
}

ProfitCurve sweep_deterministic(const DeterministicParams& p, int level_cap) {
  return optimize_profit_curve(p, level_cap);
}

}  // namespace tradefreq
