#pragma once

#include <cstdint>
#include <vector>

#include "tradefreq/csv.hpp"
#include "tradefreq/dyadic_model.hpp"
#include "tradefreq/hurst.hpp"
#include "tradefreq/interval.hpp"

namespace tradefreq {

struct McExperimentSpec {
  std::vector<double> hurst_values = {0.40, 0.60, 0.80};
  int m_lo = 1;
  int m_hi = 12;
  double kappa = 0.5;
  double spread = 0.002;
  double horizon = 1.0;
  LazinessSpec laziness = LazinessSpec::level_power(0.0, 6e-4, 1.4);
  std::int64_t n_paths = 1000;
  std::uint64_t seed = 0;
  int threads = 0;  // 0 = hardware concurrency; any value leaves results unchanged

  void validate() const;
};

struct McCaseResult {
  double hurst = 0.0;
  ProfitCurve analytic;
  ProfitCurve simulated;  // empty when n_paths == 0
  // Realized mean |level-m increment| across paths; replaces kappa * delta^H
  // in the simulated curve.
  std::vector<double> realized_mean_abs;
  int m_star_sim = 0;  // argmax of the simulated curve (analytic when n_paths == 0)
  int m_star_theory_costfree = 0;
  int m_star_theory_latency = 0;
  double delta_star_costfree = 0.0;
  double delta_star_latency = 0.0;
  double relative_gap = 0.0;  // |horizon/2^m_star_sim - delta_latency| / delta_latency
};

struct McExperimentResult {
  McExperimentSpec spec;
  std::vector<McCaseResult> cases;
};

// Profit curves on dyadic levels m_lo..m_hi per Hurst value: the analytic
// curve 2^m (kappa delta^H - spread) - L(m) and, when n_paths > 0, the same
// with the realized mean |increment| of simulated paths (sigma chosen so the
// mean unit move is kappa; circulant sampler; per-path seed =
// seed XOR splitmix64(hurst-index, path-index)). Results do not depend on
// the thread count.
McExperimentResult run_mc_experiment(const McExperimentSpec& spec);

struct CostSpec {
  double spread = 0.025;
  double lambda = 0.003;
  double alpha = 1.3;
};

struct EmpiricalResult {
  HurstFit fit;
  ProfitCurve empirical_curve;  // n_m (mean|increment|_m - spread) - lambda n_m^alpha
  ProfitCurve theory_curve;     // model curve under the fitted (H, kappa)
  int m_star_emp = 0;
  int m_star_theory = 0;  // frictionless optimum under the fitted parameters
  double delta_star_theory = 0.0;
  int m_star_theory_latency = 0;
  double delta_star_latency = 0.0;
};

// Scaling fit plus empirical and fitted-model profit curves over levels
// m = 0..levels-1 (levels = 0 picks the default). The fitted H must land in
// (0, 1) for the theory optimum to exist.
EmpiricalResult run_empirical(const PricePath& path, const CostSpec& costs, int levels = 0);

EmpiricalResult run_empirical_csv(const std::string& file, const CsvSchema& schema,
                                  const CostSpec& costs, int levels = 0);

// Deterministic profit curve; thin wrapper kept for symmetry with the CLI.
ProfitCurve sweep_deterministic(const DeterministicParams& p, int level_cap = kDefaultLevelCap);

}  // namespace tradefreq
