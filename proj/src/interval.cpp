#include "tradefreq/interval.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "tradefreq/errors.hpp"

namespace tradefreq {

namespace {

constexpr double kSqrtTwoOverPi = 0.79788456080286535588;

double require_finite(double x, const char* what) {
  if (!std::isfinite(x)) throw NumericalError(std::string(what) + " is not finite");
  return x;
}

// Profit with the laziness term extended smoothly off the dyadic grid, used
// for derivative checks around delta*.
double profit_continuous(double delta, const StochasticParams& p) {
  return p.kappa * p.horizon * std::pow(delta, p.hurst - 1.0) - p.horizon * p.spread / delta -
         p.laziness.continuous(delta, p.horizon);
}

int round_level_half_down(double x) {
  // Nearest integer with .5 ties resolved toward the smaller value.
  return static_cast<int>(std::ceil(x - 0.5));
}

OptimalInterval finish(double delta, double foc_residual, const StochasticParams& p) {
  OptimalInterval out;
  out.delta_star = require_finite(delta, "delta*");
  if (!(delta > 0.0)) throw NumericalError("delta* collapsed to zero");
  out.n_star = p.horizon / delta;
  out.m_star_rounded = round_level_half_down(std::log2(p.horizon / delta));
  out.foc_residual = foc_residual;
  const double h = delta * std::pow(std::numeric_limits<double>::epsilon(), 0.25);
  out.second_order_value = (profit_continuous(delta + h, p) - 2.0 * profit_continuous(delta, p) +
                            profit_continuous(delta - h, p)) /
                           (h * h);
  return out;
}

}  // namespace

void StochasticParams::validate() const {
  if (!(hurst > 0.0 && hurst < 1.0)) throw DomainError("hurst must lie in (0, 1)");
  if (!(kappa > 0.0)) throw DomainError("kappa must be > 0");
  if (!(spread >= 0.0)) throw DomainError("spread must be >= 0");
  if (!(horizon > 0.0)) throw DomainError("horizon must be > 0");
  laziness.validate();
}

double kappa_from_sigma(double sigma) {
  if (!(sigma > 0.0)) throw DomainError("sigma must be > 0");
  return sigma * kSqrtTwoOverPi;
}

double expected_profit(double delta, const StochasticParams& p) {
  p.validate();
  if (!(delta > 0.0)) throw DomainError("delta must be > 0");
  return p.kappa * p.horizon * std::pow(delta, p.hurst - 1.0) - p.horizon * p.spread / delta -
         p.laziness.at_interval(delta, p.horizon);
}

OptimalInterval optimal_interval_closed_form(const StochasticParams& p) {
  p.validate();
  if (!(p.spread > 0.0)) throw DomainError("closed-form optimum needs spread > 0");
  if (p.laziness.mode != LazinessMode::kConstant)
    throw DomainError("closed-form optimum is only valid under constant laziness");
  const double slope = p.kappa * (1.0 - p.hurst);
  const double delta = std::pow(p.spread / slope, 1.0 / p.hurst);
  return finish(delta, slope * std::pow(delta, p.hurst) - p.spread, p);
}

OptimalInterval optimal_interval_with_latency(const StochasticParams& p) {
  p.validate();
  if (!(p.spread > 0.0)) throw DomainError("interval solver needs spread > 0");

  const double slope = p.kappa * (1.0 - p.hurst);
  const double lambda = p.laziness.mode == LazinessMode::kConstant ? 0.0 : p.laziness.scale;
  const double alpha = p.laziness.exponent;
  // Stationarity of kappa T delta^(H-1) - T s / delta - lambda (T/delta)^alpha,
  // scaled by delta^2 / T:
  const double lat = lambda * alpha * std::pow(p.horizon, alpha - 1.0);
  const auto g = [&](double d) {
    return slope * std::pow(d, p.hurst) - p.spread - lat * std::pow(d, 1.0 - alpha);
  };
  const auto dg = [&](double d) {
    return slope * p.hurst * std::pow(d, p.hurst - 1.0) +
           lat * (alpha - 1.0) * std::pow(d, -alpha);
  };

  if (lambda == 0.0) {
    const double delta = std::pow(p.spread / slope, 1.0 / p.hurst);
    return finish(delta, g(delta), p);
  }
  if (alpha == 1.0) {
    const double delta = std::pow((p.spread + lat) / slope, 1.0 / p.hurst);
    return finish(delta, slope * std::pow(delta, p.hurst) - (p.spread + lat), p);
  }

  // g is strictly increasing with a sign change: the frictionless optimum is
  // a lower bracket (g <= 0 there), doubling finds an upper one.
  double lo = require_finite(std::pow(p.spread / slope, 1.0 / p.hurst), "bracket");
  double hi = lo;
  for (int i = 0; g(hi) <= 0.0; ++i) {
    if (i >= 2200 || !std::isfinite(hi)) throw NumericalError("no upper bracket for the stationarity condition");
    hi *= 2.0;
  }

  const double tol = 1e-12 * std::max(p.spread, 1.0);
  double x = hi;
  double gx = g(x);
  for (int it = 0; it < 100; ++it) {
    if (std::abs(gx) <= tol) return finish(x, gx, p);
    (gx > 0.0 ? hi : lo) = x;
    double next = x - gx / dg(x);
    if (!std::isfinite(next) || next <= lo || next >= hi) next = 0.5 * (lo + hi);
    x = next;
    gx = g(x);
  }
  throw NumericalError("stationarity iteration did not converge; bracket [" +
                       std::to_string(lo) + ", " + std::to_string(hi) + "]");
}

IntervalPartials interval_partials(const StochasticParams& p) {
  p.validate();
  if (!(p.spread > 0.0)) throw DomainError("sensitivities need spread > 0");
  if (p.laziness.mode != LazinessMode::kConstant)
    throw DomainError("sensitivities are only valid under constant laziness");
  const double h = p.hurst;
  const double delta = std::pow(p.spread / (p.kappa * (1.0 - h)), 1.0 / h);
  const double log_ratio = std::log(p.spread) - std::log(p.kappa) - std::log1p(-h);
  IntervalPartials out;
  out.wrt_spread = delta / (h * p.spread);
  out.wrt_kappa = -delta / (h * p.kappa);
  out.wrt_hurst = delta * (-log_ratio / (h * h) + 1.0 / (h * (1.0 - h)));
  out.wrt_dimension = -out.wrt_hurst;
  return out;
}

}  // namespace tradefreq
