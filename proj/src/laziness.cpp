#include "tradefreq/laziness.hpp"

#include <cmath>

#include "tradefreq/errors.hpp"

namespace tradefreq {

LazinessSpec LazinessSpec::constant(double l0) {
  LazinessSpec s;
  s.mode = LazinessMode::kConstant;
  s.base = l0;
  s.validate();
  return s;
}

LazinessSpec LazinessSpec::level_power(double l0, double lambda, double alpha) {
  LazinessSpec s;
  s.mode = LazinessMode::kLevelPower;
  s.base = l0;
  s.scale = lambda;
  s.exponent = alpha;
  s.validate();
  return s;
}

LazinessSpec LazinessSpec::trade_count_power(double lambda, double alpha) {
  LazinessSpec s;
  s.mode = LazinessMode::kTradeCountPower;
  s.scale = lambda;
  s.exponent = alpha;
  s.validate();
  return s;
}

void LazinessSpec::validate() const {
  if (!(base >= 0.0)) throw DomainError("laziness base L0 must be >= 0");
  if (!(scale >= 0.0)) throw DomainError("laziness scale lambda must be >= 0");
  if (!(exponent >= 1.0)) throw DomainError("laziness exponent alpha must be >= 1");
}

double LazinessSpec::at_level(int level) const {
  if (level < 0) throw DomainError("laziness level must be >= 0");
  switch (mode) {
    case LazinessMode::kConstant:
      return base;
    case LazinessMode::kLevelPower:
      return base + scale * std::exp2(exponent * static_cast<double>(level));
    case LazinessMode::kTradeCountPower:
      // n = 2^level trades over the horizon.
      return scale * std::exp2(exponent * static_cast<double>(level));
  }
  throw DomainError("unknown laziness mode");
}

double LazinessSpec::at_interval(double delta, double horizon) const {
  if (!(delta > 0.0) || !(horizon > 0.0)) throw DomainError("laziness needs delta > 0 and horizon > 0");
  switch (mode) {
    case LazinessMode::kConstant:
      return base;
    case LazinessMode::kLevelPower: {
      const double level = std::log2(horizon / delta);
      const double rounded = std::round(level);
      if (!(std::abs(level - rounded) <= 1e-9) || rounded < 0.0)
        throw DomainError("level-power laziness requires delta = horizon / 2^m for integer m >= 0");
      return base + scale * std::exp2(exponent * rounded);
    }
    case LazinessMode::kTradeCountPower:
      return scale * std::pow(horizon / delta, exponent);
  }
  throw DomainError("unknown laziness mode");
}

double LazinessSpec::continuous(double delta, double horizon) const {
  if (!(delta > 0.0) || !(horizon > 0.0)) throw DomainError("laziness needs delta > 0 and horizon > 0");
  switch (mode) {
    case LazinessMode::kConstant:
      return base;
    case LazinessMode::kLevelPower:
      return base + scale * std::pow(horizon / delta, exponent);
    case LazinessMode::kTradeCountPower:
      return scale * std::pow(horizon / delta, exponent);
  }
  throw DomainError("unknown laziness mode");
}

std::string LazinessSpec::mode_name() const {
  switch (mode) {
    case LazinessMode::kConstant:
      return "constant";
    case LazinessMode::kLevelPower:
      return "level-power";
    case LazinessMode::kTradeCountPower:
      return "trade-count-power";
  }
  return "unknown";
}

}  // namespace tradefreq
