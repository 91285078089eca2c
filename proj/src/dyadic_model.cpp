#include "tradefreq/dyadic_model.hpp"

#include <cmath>
#include <cstddef>
#include <string>

#include "tradefreq/errors.hpp"

namespace tradefreq {

void DeterministicParams::validate() const {
  if (!(horizon > 0.0)) throw DomainError("horizon must be > 0");
  if (!(roughness > 0.0 && roughness < 2.0)) throw DomainError("roughness W must lie in (0, 2)");
  if (!(micro_scale >= 0.0)) throw DomainError("micro scale c0 must be >= 0");
  if (!(spread >= 0.0)) throw DomainError("spread must be >= 0");
  laziness.validate();
}

namespace {

// Feasibility at level m: horizon / 2^m > W^m * c0, strictly. Equality means
// the exploitable move degenerates to zero and the level is excluded.
bool level_feasible(int level, const DeterministicParams& p) {
  const double half_chord = std::ldexp(p.horizon, -level);
  const double micro = std::pow(p.roughness, level) * p.micro_scale;
  return half_chord > micro;
}

}  // namespace

double exploitable_move(int level, const DeterministicParams& p) {
  p.validate();
  if (level < 0) throw DomainError("level must be >= 0");
  const double half_chord = std::ldexp(p.horizon, -level);
  const double micro = std::pow(p.roughness, level) * p.micro_scale;
  if (!(half_chord > micro))
    throw DomainError("level " + std::to_string(level) +
                      " infeasible: horizon/2^m must exceed W^m * c0");
  return std::sqrt((half_chord - micro) * (half_chord + micro));
}

std::optional<FeasibleLevels> feasible_levels(const DeterministicParams& p, int level_cap) {
  p.validate();
  if (level_cap < 0) throw DomainError("level cap must be >= 0");
  if (!level_feasible(0, p)) return std::nullopt;
  // The feasible set is contiguous from 0: the condition is
  // horizon > (2W)^m * c0, monotone in m on either side of 2W = 1.
  int m = 0;
  while (m < level_cap && level_feasible(m + 1, p)) ++m;
  return FeasibleLevels{m, m == level_cap};
}

double profit_at_level(int level, const DeterministicParams& p) {
  const double phi = exploitable_move(level, p);
  return std::ldexp(1.0, level) * (phi - p.spread) - p.laziness.at_level(level);
}

double profit_forward_difference(int level, const DeterministicParams& p) {
  const double phi0 = exploitable_move(level, p);
  const double phi1 = exploitable_move(level + 1, p);
  const double dl = p.laziness.at_level(level + 1) - p.laziness.at_level(level);
  return std::ldexp(1.0, level) * (2.0 * phi1 - phi0 - p.spread) - dl;
}

namespace detail {

StopResult select_m_star(const std::vector<double>& diffs, const std::vector<double>& profits) {
  bool nonincreasing = true;
  for (std::size_t i = 0; i + 1 < diffs.size(); ++i) {
    if (diffs[i + 1] > diffs[i]) {
      nonincreasing = false;
      break;
    }
  }
  if (nonincreasing) {
    for (std::size_t i = 0; i < diffs.size(); ++i) {
      if (diffs[i] <= 0.0) return {i, true};
    }
    return {profits.size() - 1, true};
  }
  std::size_t best = 0;
  for (std::size_t i = 1; i < profits.size(); ++i) {
    if (profits[i] > profits[best]) best = i;
  }
  return {best, false};
}

}  // namespace detail

ProfitCurve optimize_profit_curve(const DeterministicParams& p, int level_cap) {
  const auto bound = feasible_levels(p, level_cap);
  if (!bound) throw DomainError("no feasible level: micro scale c0 >= horizon");

  ProfitCurve curve;
  curve.m_max = bound->m_max;
  curve.capped = bound->capped;
  curve.levels.reserve(static_cast<std::size_t>(curve.m_max) + 1);
  curve.profits.reserve(static_cast<std::size_t>(curve.m_max) + 1);
  for (int m = 0; m <= curve.m_max; ++m) {
    curve.levels.push_back(m);
    curve.profits.push_back(profit_at_level(m, p));
  }

  std::vector<double> diffs;
  diffs.reserve(static_cast<std::size_t>(curve.m_max));
  for (int m = 0; m < curve.m_max; ++m) diffs.push_back(profit_forward_difference(m, p));

  const auto stop = detail::select_m_star(diffs, curve.profits);
  curve.m_star = curve.levels[stop.index];
  curve.unimodal = stop.unimodal;
  return curve;
}

ProfitPartials profit_partials(int level, const DeterministicParams& p) {
  const double phi = exploitable_move(level, p);
  const double pow2m = std::ldexp(1.0, level);
  ProfitPartials out;
  out.wrt_spread = -pow2m;
  out.wrt_micro = -pow2m * std::pow(p.roughness, 2.0 * level) * p.micro_scale / phi;
  out.wrt_roughness =
      level == 0 ? 0.0
                 : -pow2m * static_cast<double>(level) * std::pow(p.roughness, 2.0 * level - 1.0) *
                       p.micro_scale * p.micro_scale / phi;
  return out;
}

}  // namespace tradefreq
