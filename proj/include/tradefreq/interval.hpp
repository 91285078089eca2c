#pragma once

#include "tradefreq/laziness.hpp"

namespace tradefreq {

// Expected-profit model on fractional Brownian motion: trading every delta
// over [0, horizon] earns
//   R(delta) = kappa * horizon * delta^(H-1) - horizon * spread / delta - L,
// with kappa = sigma * sqrt(2/pi) the mean absolute move per unit interval.
struct StochasticParams {
  double hurst = 0.5;    // H in (0, 1)
  double kappa = 1.0;    // > 0
  double spread = 0.0;   // s > 0 for the interval solvers
  double horizon = 1.0;  // T > 0
  LazinessSpec laziness{};

  void validate() const;
};

struct OptimalInterval {
  double delta_star = 0.0;
  double n_star = 0.0;  // horizon / delta_star
  // Nearest integer to log2(horizon / delta_star), ties toward the smaller
  // (coarser) level. May be negative when delta_star > horizon.
  int m_star_rounded = 0;
  double foc_residual = 0.0;
  double second_order_value = 0.0;  // numeric R'' at delta_star, < 0 at a max
};

struct IntervalPartials {
  double wrt_spread = 0.0;
  double wrt_kappa = 0.0;
  double wrt_hurst = 0.0;
  double wrt_dimension = 0.0;  // fractal dimension D = 2 - H
};

// Mean absolute unit-interval move of a path with volatility sigma.
double kappa_from_sigma(double sigma);

double expected_profit(double delta, const StochasticParams& p);

// Frictionless optimum delta* = (spread / (kappa (1-H)))^(1/H); requires
// constant laziness (the cost does not move the argmax).
OptimalInterval optimal_interval_closed_form(const StochasticParams& p);

// Root of kappa (1-H) delta^H = spread + lambda alpha T^(alpha-1) delta^(1-alpha),
// the stationarity condition once a power-law laziness is charged. alpha = 1
// or lambda = 0 reduce to closed forms; otherwise safeguarded Newton with a
// bisection fallback, |g| <= 1e-12 * max(spread, 1) within 100 iterations.
OptimalInterval optimal_interval_with_latency(const StochasticParams& p);

// Closed-form sensitivities of delta*; requires constant laziness.
IntervalPartials interval_partials(const StochasticParams& p);

}  // namespace tradefreq
