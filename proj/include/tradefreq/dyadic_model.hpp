#pragma once

#include <optional>
#include <vector>

#include "tradefreq/laziness.hpp"

namespace tradefreq {

// Deterministic fractal profit model. A price path over [0, horizon] is
// refined through dyadic levels m = 0, 1, ...; at level m there are 2^m
// trades and the exploitable move per trade is
//   phi_m = sqrt(horizon^2 / 4^m - roughness^(2m) * micro_scale^2),
// defined while horizon / 2^m > roughness^m * micro_scale (strictly).
struct DeterministicParams {
  double horizon = 1.0;      // T > 0
  double roughness = 1.0;    // W in (0, 2)
  double micro_scale = 0.0;  // c0 >= 0, price units
  double spread = 0.0;       // s >= 0, cost per trade
  LazinessSpec laziness{};

  void validate() const;
};

inline constexpr int kDefaultLevelCap = 30;

struct FeasibleLevels {
  int m_max = 0;
  bool capped = false;  // every level up to the cap was feasible
};

struct ProfitCurve {
  std::vector<int> levels;  // consecutive integers
  std::vector<double> profits;
  int m_max = 0;   // last level in the curve
  int m_star = 0;  // level (not index) attaining the maximum
  bool capped = false;
  bool unimodal = true;  // forward differences were nonincreasing
};

struct ProfitPartials {
  double wrt_spread = 0.0;
  double wrt_micro = 0.0;
  double wrt_roughness = 0.0;
};

// phi_m; throws DomainError when level is infeasible.
double exploitable_move(int level, const DeterministicParams& p);

// Largest feasible level found by linear scan from m = 0, or nullopt when
// even m = 0 is infeasible. With roughness <= 1/2 every level is feasible,
// so the scan stops at level_cap and reports capped = true.
std::optional<FeasibleLevels> feasible_levels(const DeterministicParams& p,
                                              int level_cap = kDefaultLevelCap);

// R_m = 2^m (phi_m - spread) - L(m).
double profit_at_level(int level, const DeterministicParams& p);

// R_{m+1} - R_m in the analytic form 2^m (2 phi_{m+1} - phi_m - spread) - dL.
double profit_forward_difference(int level, const DeterministicParams& p);

// Profits over every feasible level plus the argmax. m_star is the first
// level whose forward difference is <= 0 (exact comparison); if the forward
// differences are not nonincreasing the argmax is found exhaustively and the
// curve is flagged unimodal = false.
ProfitCurve optimize_profit_curve(const DeterministicParams& p,
                                  int level_cap = kDefaultLevelCap);

// dR_m/ds = -2^m, dR_m/dc0 = -2^m W^(2m) c0 / phi_m,
// dR_m/dW = -2^m m W^(2m-1) c0^2 / phi_m (zero at m = 0).
ProfitPartials profit_partials(int level, const DeterministicParams& p);

namespace detail {
// Stopping rule shared by the optimizer: first index with diff <= 0, else the
// last level; falls back to exhaustive argmax when diffs are not
// nonincreasing. Returns {argmax index, unimodal flag}.
struct StopResult {
  std::size_t index;
  bool unimodal;
};
StopResult select_m_star(const std::vector<double>& diffs,
                         const std::vector<double>& profits);
}  // namespace detail

}  // namespace tradefreq
