#include <doctest.h>

#include <cmath>

#include "tradefreq/dyadic_model.hpp"
#include "tradefreq/errors.hpp"

using namespace tradefreq;

namespace {

DeterministicParams params(double horizon, double roughness, double micro, double spread = 0.0,
                           LazinessSpec laziness = LazinessSpec::constant(0.0)) {
  DeterministicParams p;
  p.horizon = horizon;
  p.roughness = roughness;
  p.micro_scale = micro;
  p.spread = spread;
  p.laziness = laziness;
  return p;
}

// Independent feasibility check: horizon / 2^m > roughness^m * micro, probed
// level by level with plain pow.
bool feasible_brute(int m, double horizon, double roughness, double micro) {
  return horizon / std::pow(2.0, m) > std::pow(roughness, m) * micro;
}

}  // namespace

TEST_CASE("exploitable move matches hand-computed values") {
  // sqrt(1 - 0.36) with W = 0.5, c0 = 0.6 at the root level
  CHECK(exploitable_move(0, params(1.0, 0.5, 0.6)) == doctest::Approx(0.8).epsilon(1e-15));
  // sqrt(0.25 - 0.2304) = 0.14 at level 1 with W = 0.8, c0 = 0.6
  CHECK(exploitable_move(1, params(1.0, 0.8, 0.6)) == doctest::Approx(0.14).epsilon(1e-12));
  // no microstructure floor: phi_m = T / 2^m exactly
  CHECK(exploitable_move(7, params(1.0, 0.9, 0.0)) == 1.0 / 128.0);
}

TEST_CASE("exploitable move throws at infeasible levels") {
  CHECK_THROWS_AS(exploitable_move(2, params(1.0, 0.8, 0.6)), DomainError);
  CHECK_THROWS_AS(exploitable_move(0, params(1.0, 1.0, 2.0)), DomainError);
  // boundary: horizon/2^m equal to the floor is infeasible (strict inequality)
  CHECK_THROWS_AS(exploitable_move(0, params(1.0, 0.5, 1.0)), DomainError);
}

TEST_CASE("feasible levels agree with a brute-force scan") {
  struct Case {
    double horizon, roughness, micro;
  };
  const Case cases[] = {
      {1.0, 0.8, 0.6}, {1.0, 0.9, 0.1}, {2.5, 1.3, 0.05}, {1.0, 1.9, 1e-4}, {0.3, 0.7, 0.01},
  };
  for (const auto& c : cases) {
    const auto got = feasible_levels(params(c.horizon, c.roughness, c.micro));
    REQUIRE(got.has_value());
    CHECK_FALSE(got->capped);
    for (int m = 0; m <= got->m_max; ++m) CHECK(feasible_brute(m, c.horizon, c.roughness, c.micro));
    CHECK_FALSE(feasible_brute(got->m_max + 1, c.horizon, c.roughness, c.micro));
  }
}

TEST_CASE("feasible levels: specific known answers") {
  const auto one = feasible_levels(params(1.0, 0.8, 0.6));
  REQUIRE(one.has_value());
  CHECK(one->m_max == 1);

  // even the root level fails when the floor exceeds the horizon
  CHECK_FALSE(feasible_levels(params(1.0, 1.0, 2.0)).has_value());

  // W <= 1/2 keeps every level feasible; the scan caps out
  const auto capped = feasible_levels(params(1.0, 0.4, 0.5));
  REQUIRE(capped.has_value());
  CHECK(capped->m_max == kDefaultLevelCap);
  CHECK(capped->capped);

  const auto low_cap = feasible_levels(params(1.0, 0.4, 0.5), 7);
  REQUIRE(low_cap.has_value());
  CHECK(low_cap->m_max == 7);
  CHECK(low_cap->capped);
}

TEST_CASE("profit at a level matches its definition") {
  const auto p = params(1.0, 0.5, 0.6, 0.1, LazinessSpec::constant(0.05));
  // 2^0 (0.8 - 0.1) - 0.05
  CHECK(profit_at_level(0, p) == doctest::Approx(0.65).epsilon(1e-15));

  // larger grid, recompute by hand
  const auto q = params(1.0, 0.9, 0.05, 0.001, LazinessSpec::level_power(0.0, 1e-4, 1.2));
  const double phi3 = std::sqrt(std::pow(1.0 / 8.0, 2) - std::pow(std::pow(0.9, 3) * 0.05, 2));
  const double expect = 8.0 * (phi3 - 0.001) - 1e-4 * std::pow(2.0, 1.2 * 3);
  CHECK(profit_at_level(3, q) == doctest::Approx(expect).epsilon(1e-14));
}

TEST_CASE("forward difference is consistent with profit differences") {
  const auto p = params(1.0, 0.9, 0.05, 0.002, LazinessSpec::level_power(0.01, 1e-4, 1.3));
  for (int m = 0; m + 1 <= feasible_levels(p)->m_max; ++m) {
    const double direct = profit_at_level(m + 1, p) - profit_at_level(m, p);
    CHECK(profit_forward_difference(m, p) == doctest::Approx(direct).epsilon(1e-10));
  }
  // frictionless, costless: difference vanishes identically at level 0 when c0 = 0
  CHECK(profit_forward_difference(0, params(1.0, 0.7, 0.0)) == doctest::Approx(0.0));
}

TEST_CASE("optimizer stopping rule equals exhaustive argmax") {
  struct Case {
    DeterministicParams p;
    int expect;
  };
  // hand-checked small cases
  const auto c1 = params(1.0, 0.8, 0.6, 0.01);
  const auto c2 = params(1.0, 0.9, 0.05, 0.02, LazinessSpec::level_power(0.0, 1e-3, 1.5));
  const auto curve1 = optimize_profit_curve(c1);
  const auto curve2 = optimize_profit_curve(c2);
  for (const auto* curve : {&curve1, &curve2}) {
    REQUIRE_FALSE(curve->profits.empty());
    std::size_t best = 0;
    for (std::size_t i = 1; i < curve->profits.size(); ++i)
      if (curve->profits[i] > curve->profits[best]) best = i;
    CHECK(curve->m_star == curve->levels[best]);
    CHECK(curve->unimodal);
  }
  // feasibility-limited: both levels kept, argmax still correct
  CHECK(curve1.m_max == 1);
  CHECK(curve1.levels.size() == 2);
}

TEST_CASE("stopping rule handles plateaus and non-unimodal inputs") {
  // diff == 0 stops immediately (ties resolve to the smaller level)
  auto flat = detail::select_m_star({0.0, -1.0}, {1.0, 1.0, 0.0});
  CHECK(flat.index == 0);
  CHECK(flat.unimodal);

  // strictly decreasing diffs, all positive: argmax is the last level
  auto rising = detail::select_m_star({3.0, 2.0, 1.0}, {0.0, 3.0, 5.0, 6.0});
  CHECK(rising.index == 3);
  CHECK(rising.unimodal);

  // non-monotone diffs: rule falls back to exhaustive argmax and says so
  auto bumpy = detail::select_m_star({1.0, -2.0, 3.0}, {0.0, 1.0, -1.0, 2.0});
  CHECK(bumpy.index == 3);
  CHECK_FALSE(bumpy.unimodal);
}

TEST_CASE("profit partials match central finite differences") {
  const auto base = params(1.0, 0.9, 0.05, 0.002, LazinessSpec::constant(0.01));
  for (int m : {0, 1, 3, 5}) {
    const auto grad = profit_partials(m, base);
    const double h = 1e-6;

    auto ps = base;
    ps.spread += h;
    auto ms = base;
    ms.spread -= h;
    CHECK(grad.wrt_spread ==
          doctest::Approx((profit_at_level(m, ps) - profit_at_level(m, ms)) / (2 * h))
              .epsilon(1e-7));

    auto pc = base;
    pc.micro_scale += h;
    auto mc = base;
    mc.micro_scale -= h;
    CHECK(grad.wrt_micro ==
          doctest::Approx((profit_at_level(m, pc) - profit_at_level(m, mc)) / (2 * h))
              .epsilon(1e-5));

    auto pw = base;
    pw.roughness += h;
    auto mw = base;
    mw.roughness -= h;
    const double fd_w = (profit_at_level(m, pw) - profit_at_level(m, mw)) / (2 * h);
    if (m == 0) {
      CHECK(grad.wrt_roughness == 0.0);
      CHECK(std::abs(fd_w) < 1e-9);
    } else {
      CHECK(grad.wrt_roughness == doctest::Approx(fd_w).epsilon(1e-5));
    }
  }
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(optimize_profit_curve(params(-1.0, 0.5, 0.0)), DomainError);
  CHECK_THROWS_AS(optimize_profit_curve(params(1.0, 0.0, 0.0)), DomainError);
  CHECK_THROWS_AS(optimize_profit_curve(params(1.0, 2.0, 0.0)), DomainError);
  CHECK_THROWS_AS(optimize_profit_curve(params(1.0, 0.5, -0.1)), DomainError);
  CHECK_THROWS_AS(optimize_profit_curve(params(1.0, 1.0, 2.0)), DomainError);
}
