#pragma once

#include <string>

namespace tradefreq {

enum class LazinessMode {
  kConstant,         // L(m) = L0
  kLevelPower,       // L(m) = L0 + lambda * 2^(alpha*m)
  kTradeCountPower,  // L(n) = lambda * n^alpha, n = horizon / delta
};

// Cost of acting L, charged once per horizon. Convex and nondecreasing in the
// level for alpha >= 1, which the optimizer's stopping rule relies on.
struct LazinessSpec {
  LazinessMode mode = LazinessMode::kConstant;
  double base = 0.0;      // L0 >= 0
  double scale = 0.0;     // lambda >= 0
  double exponent = 1.0;  // alpha >= 1

  static LazinessSpec constant(double l0);
  static LazinessSpec level_power(double l0, double lambda, double alpha);
  static LazinessSpec trade_count_power(double lambda, double alpha);

  void validate() const;

  // L at dyadic level m (n = 2^m trades).
  double at_level(int level) const;

  // L at trading interval delta over the given horizon. Level-based mode
  // requires delta = horizon / 2^m for integer m.
  double at_interval(double delta, double horizon) const;

  // Smooth extension used by the interval solvers: the level-power mode is
  // continued off the dyadic grid as L0 + lambda * (horizon/delta)^alpha.
  double continuous(double delta, double horizon) const;

  std::string mode_name() const;
};

}  // namespace tradefreq
