#include <doctest.h>

#include <cmath>

#include "tradefreq/errors.hpp"
#include "tradefreq/interval.hpp"

using namespace tradefreq;

namespace {

StochasticParams params(double hurst, double kappa, double spread, double horizon = 1.0,
                        LazinessSpec laziness = LazinessSpec::constant(0.0)) {
  StochasticParams p;
  p.hurst = hurst;
  p.kappa = kappa;
  p.spread = spread;
  p.horizon = horizon;
  p.laziness = laziness;
  return p;
}

// Grid argmax of the laziness-continuous expected profit on a log grid
// spanning [delta/ratio, delta*ratio]; independent of the Newton solver.
double grid_argmax(const StochasticParams& p, double center, double ratio, int cells) {
  const double lo = std::log(center / ratio);
  const double hi = std::log(center * ratio);
  double best = center;
  double best_val = -1e300;
  for (int i = 0; i <= cells; ++i) {
    const double delta = std::exp(lo + (hi - lo) * i / cells);
    const double value = p.kappa * p.horizon * std::pow(delta, p.hurst - 1.0) -
                         p.horizon * p.spread / delta - p.laziness.continuous(delta, p.horizon);
    if (value > best_val) {
      best_val = value;
      best = delta;
    }
  }
  return best;
}

}  // namespace

TEST_CASE("kappa from sigma") {
  CHECK(kappa_from_sigma(1.0) == doctest::Approx(std::sqrt(2.0 / M_PI)).epsilon(1e-15));
  CHECK(kappa_from_sigma(2.5) == doctest::Approx(2.5 * std::sqrt(2.0 / M_PI)).epsilon(1e-15));
  CHECK_THROWS_AS(kappa_from_sigma(0.0), DomainError);
  CHECK_THROWS_AS(kappa_from_sigma(-1.0), DomainError);
}

TEST_CASE("expected profit matches its definition") {
  // H = 0.5, kappa = 0.5, spread = 0.002, delta = 0.01:
  // 0.5 * 0.01^-0.5 - 0.002/0.01 = 5 - 0.2 = 4.8
  const auto p = params(0.5, 0.5, 0.002);
  CHECK(expected_profit(0.01, p) == doctest::Approx(4.8).epsilon(1e-12));

  // laziness subtracts off at dyadic intervals
  const auto q = params(0.5, 0.5, 0.002, 1.0, LazinessSpec::level_power(0.0, 6e-4, 1.4));
  const double lvl = 6e-4 * std::pow(2.0, 1.4 * 4);
  CHECK(expected_profit(1.0 / 16.0, q) ==
        doctest::Approx(expected_profit(1.0 / 16.0, p) - lvl).epsilon(1e-12));
}

TEST_CASE("closed-form optimum matches hand value and the profit grid") {
  const auto p = params(0.5, 0.5, 0.002);
  const auto opt = optimal_interval_closed_form(p);
  // (s / (kappa (1-H)))^(1/H) = (0.002/0.25)^2 = 6.4e-5
  CHECK(opt.delta_star == doctest::Approx(6.4e-5).epsilon(1e-12));
  CHECK(opt.n_star == doctest::Approx(1.0 / 6.4e-5).epsilon(1e-12));
  CHECK(opt.second_order_value < 0.0);

  // grid oracle: the true argmax lies within one log-grid cell
  const double grid = grid_argmax(p, opt.delta_star, 10.0, 20000);
  CHECK(std::abs(std::log(grid) - std::log(opt.delta_star)) < 2 * std::log(100.0) / 20000);

  // profit at the optimum beats neighbours
  CHECK(expected_profit(opt.delta_star, p) > expected_profit(opt.delta_star * 1.05, p));
  CHECK(expected_profit(opt.delta_star, p) > expected_profit(opt.delta_star * 0.95, p));
}

TEST_CASE("rounded level: hand-checked biweekly-rebalancing example") {
  // kappa = 0.01336 and H = 0.491 per unit day, 2.5% cost per trade, five
  // trading years: the optimum sits near fourteen days, level 6 on this span.
  const auto p = params(0.491, 0.01336, 0.025, 1260.0);
  const auto opt = optimal_interval_closed_form(p);
  CHECK(opt.delta_star == doctest::Approx(14.175).epsilon(1e-3));
  CHECK(opt.m_star_rounded == 6);
}

TEST_CASE("m_star rounds to the nearest level and may be negative") {
  const auto round_of = [](double delta, double horizon) {
    auto p = params(0.5, 0.5, 0.002, horizon);
    // pick spread so the closed form lands on the requested delta:
    // delta = (s/(kappa(1-H)))^(1/H) => s = kappa (1-H) delta^H
    p.spread = p.kappa * (1.0 - p.hurst) * std::pow(delta, p.hurst);
    return optimal_interval_closed_form(p).m_star_rounded;
  };
  CHECK(round_of(1.0 / 8.0, 1.0) == 3);
  // either side of the halfway point between levels 3 and 4
  CHECK(round_of(std::pow(2.0, -3.49), 1.0) == 3);
  CHECK(round_of(std::pow(2.0, -3.51), 1.0) == 4);
  CHECK(round_of(4.0, 1.0) == -2);  // interval longer than the horizon
}

TEST_CASE("latency solver reduces to closed forms when it should") {
  const auto base = params(0.6, 0.5, 0.002);

  // lambda = 0 in any mode reproduces the frictionless optimum
  auto p0 = base;
  p0.laziness = LazinessSpec::level_power(0.0, 0.0, 1.4);
  const auto frictionless = optimal_interval_closed_form(base);
  const auto got0 = optimal_interval_with_latency(p0);
  CHECK(got0.delta_star == doctest::Approx(frictionless.delta_star).epsilon(1e-12));

  // alpha = 1: delta* = ((s + lambda alpha T^(alpha-1)) / (kappa(1-H)))^(1/H)
  auto p1 = base;
  p1.laziness = LazinessSpec::trade_count_power(3e-4, 1.0);
  const auto got1 = optimal_interval_with_latency(p1);
  const double expect1 =
      std::pow((0.002 + 3e-4) / (0.5 * 0.4), 1.0 / 0.6);
  CHECK(got1.delta_star == doctest::Approx(expect1).epsilon(1e-12));

  // constant laziness routes through the frictionless form too
  auto pc = base;
  pc.laziness = LazinessSpec::constant(0.01);
  CHECK(optimal_interval_with_latency(pc).delta_star ==
        doctest::Approx(frictionless.delta_star).epsilon(1e-12));
}

TEST_CASE("latency solver satisfies the stationarity condition") {
  for (double hurst : {0.35, 0.5, 0.75}) {
    for (double alpha : {1.2, 1.4, 2.0}) {
      for (double horizon : {1.0, 5.0}) {
        auto p = params(hurst, 0.5, 0.002, horizon,
                        LazinessSpec::level_power(0.0, 6e-4, alpha));
        const auto opt = optimal_interval_with_latency(p);
        const double lat = 6e-4 * alpha * std::pow(horizon, alpha - 1.0);
        const double g = p.kappa * (1.0 - hurst) * std::pow(opt.delta_star, hurst) - p.spread -
                         lat * std::pow(opt.delta_star, 1.0 - alpha);
        CHECK(std::abs(g) <= 1e-12 * std::max(p.spread, 1.0));
        CHECK(std::abs(opt.foc_residual) <= 1e-12 * std::max(p.spread, 1.0));
        CHECK(opt.second_order_value < 0.0);

        // laziness makes trading costlier, so the interval widens
        const auto frictionless = optimal_interval_closed_form(params(hurst, 0.5, 0.002, horizon));
        CHECK(opt.delta_star > frictionless.delta_star);

        // grid oracle around the reported optimum
        const double grid = grid_argmax(p, opt.delta_star, 8.0, 8000);
        CHECK(std::abs(std::log(grid / opt.delta_star)) < 2 * std::log(64.0) / 8000);
      }
    }
  }
}

TEST_CASE("interval partials match central finite differences") {
  const auto base = params(0.55, 0.5, 0.002);
  const auto grad = interval_partials(base);
  const auto delta_of = [](StochasticParams p) {
    return optimal_interval_closed_form(p).delta_star;
  };

  const double hs = 1e-7;
  auto ps = base;
  ps.spread += hs;
  auto ms = base;
  ms.spread -= hs;
  CHECK(grad.wrt_spread ==
        doctest::Approx((delta_of(ps) - delta_of(ms)) / (2 * hs)).epsilon(1e-5));

  const double hk = 1e-7;
  auto pk = base;
  pk.kappa += hk;
  auto mk = base;
  mk.kappa -= hk;
  CHECK(grad.wrt_kappa == doctest::Approx((delta_of(pk) - delta_of(mk)) / (2 * hk)).epsilon(1e-5));

  const double hh = 1e-6;
  auto ph = base;
  ph.hurst += hh;
  auto mh = base;
  mh.hurst -= hh;
  CHECK(grad.wrt_hurst == doctest::Approx((delta_of(ph) - delta_of(mh)) / (2 * hh)).epsilon(1e-4));

  // D = 2 - H: the dimension sensitivity is the negated Hurst sensitivity
  CHECK(grad.wrt_dimension == doctest::Approx(-grad.wrt_hurst).epsilon(1e-12));
}

TEST_CASE("hurst sensitivity of the log-interval matches the analytic form") {
  // d ln(delta*)/dH = -A/H^2 + 1/(H(1-H)), A = ln(s/(kappa(1-H))).
  // At s = 0.002, kappa = 0.5, H = 0.5 this is about 23.3.
  const auto p = params(0.5, 0.5, 0.002);
  const auto grad = interval_partials(p);
  const double delta = optimal_interval_closed_form(p).delta_star;
  const double log_deriv = grad.wrt_hurst / delta;
  const double a = std::log(0.002 / (0.5 * 0.5));
  CHECK(log_deriv == doctest::Approx(-a / 0.25 + 4.0).epsilon(1e-12));
  CHECK(log_deriv == doctest::Approx(23.3).epsilon(2e-3));
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(optimal_interval_closed_form(params(0.0, 0.5, 0.002)), DomainError);
  CHECK_THROWS_AS(optimal_interval_closed_form(params(1.0, 0.5, 0.002)), DomainError);
  CHECK_THROWS_AS(optimal_interval_closed_form(params(0.5, 0.0, 0.002)), DomainError);
  CHECK_THROWS_AS(optimal_interval_closed_form(params(0.5, 0.5, 0.0)), DomainError);
  CHECK_THROWS_AS(optimal_interval_closed_form(params(0.5, 0.5, 0.002, 0.0)), DomainError);
  // closed form rejects non-constant laziness
  CHECK_THROWS_AS(optimal_interval_closed_form(
                      params(0.5, 0.5, 0.002, 1.0, LazinessSpec::level_power(0.0, 1e-3, 1.4))),
                  DomainError);
  CHECK_THROWS_AS(interval_partials(
                      params(0.5, 0.5, 0.002, 1.0, LazinessSpec::trade_count_power(1e-3, 1.2))),
                  DomainError);
}
